#include "ciu/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ciu {

namespace {

std::string fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::string pct(double v)
{
    return fixed(100.0 * v, 1) + "%";
}

std::string favor_word(const ExplanationEntry& e)
{
    if (e.cu_degenerate) return "insensitive";
    if (e.cu >= 0.875) return "very favorable";
    if (e.cu >= 0.625) return "favorable";
    if (e.cu >= 0.375) return "average";
    if (e.cu >= 0.125) return "unfavorable";
    return "very unfavorable";
}

std::string direction_word(double influence)
{
    if (influence > 1e-12) return "raises the output";
    if (influence < -1e-12) return "lowers the output";
    return "neutral";
}

std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

void replace_all(std::string& s, const std::string& key, const std::string& value)
{
    std::size_t at = 0;
    while ((at = s.find(key, at)) != std::string::npos) {
        s.replace(at, key.size(), value);
        at += value.size();
    }
}

std::string render_entry_line(const ExplanationEntry& e, const std::string& method,
                              const std::string& tmpl, std::size_t name_width)
{
    std::string line = tmpl;
    replace_all(line, "{name}", pad(e.name, name_width));
    replace_all(line, "{ci}", fixed(e.ci, 4));
    replace_all(line, "{ci_pct}", pct(e.ci));
    replace_all(line, "{cu}", fixed(e.cu, 4));
    replace_all(line, "{cu_pct}", pct(e.cu));
    replace_all(line, "{influence}", fixed(e.influence, 4));
    replace_all(line, "{favor}", favor_word(e));
    replace_all(line, "{direction}", direction_word(method == "shapley" ? e.phi : e.influence));
    replace_all(line, "{phi}", fixed(e.phi, 4));
    replace_all(line, "{stderr}", fixed(e.stderr_, 4));
    return line;
}

std::string default_line_for(const std::string& method)
{
    if (method == "shapley")
        return "  {name} phi {phi} +/- {stderr}  ({direction})";
    if (method == "influence")
        return "  {name} influence {influence}  ({direction})";
    return "  {name} importance {ci_pct}  utility {cu_pct}  ({favor})";
}

std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

TextTemplate TextTemplate::standard()
{
    return TextTemplate{""}; // empty means per-method default line
}

TextTemplate TextTemplate::load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("template: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string line = buf.str();
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.pop_back();
    return TextTemplate{line};
}

std::string render_text(const ExplanationDocument& doc, const TextTemplate& tmpl)
{
    const std::string line_tmpl =
        tmpl.concept_line.empty() ? default_line_for(doc.method) : tmpl.concept_line;

    std::size_t name_width = 0;
    for (const ExplanationEntry& e : doc.entries)
        name_width = std::max(name_width, e.name.size());
    for (const DrilldownSection& s : doc.drilldowns)
        for (const ExplanationEntry& e : s.entries)
            name_width = std::max(name_width, e.name.size());

    std::ostringstream out;
    const std::string title = doc.method == "shapley"
        ? "Shapley value explanation"
        : (doc.method == "influence" ? "Contextual influence explanation"
                                     : "Contextual importance/utility explanation");
    out << "== " << title << " ==\n";
    out << "instance : " << doc.instance_id;
    if (!doc.instance_description.empty())
        out << " (" << doc.instance_description << ")";
    out << "\n";
    out << "model    : " << doc.model_id << "\n";
    out << "output   : " << doc.output_name << " = " << fixed(doc.output_value, 4) << "\n";
    if (doc.method != "ciu")
        out << "baseline : " << fixed(doc.baseline, 4) << "\n";
    if (!doc.level.empty())
        out << "level    : " << doc.level << "\n";
    out << "\n";
    for (const ExplanationEntry& e : doc.entries)
        out << render_entry_line(e, doc.method, line_tmpl, name_width) << "\n";
    for (const DrilldownSection& s : doc.drilldowns) {
        out << "\n-- " << s.concept_name << ", relative to the concept --\n";
        for (const ExplanationEntry& e : s.entries)
            out << render_entry_line(e, doc.method, line_tmpl, name_width) << "\n";
    }
    return out.str();
}

BarPlot render_barplot(const ExplanationDocument& doc)
{
    const bool signed_plot = doc.method == "influence" || doc.method == "shapley";

    const double left = 180.0, plot_w = 420.0;
    const double row_h = 30.0, bar_h = 20.0, top = 46.0;
    const double height = top + row_h * static_cast<double>(doc.entries.size()) + 34.0;
    const double width = left + plot_w + 20.0;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width, 0)
        << "\" height=\"" << fixed(height, 0) << "\" viewBox=\"0 0 " << fixed(width, 0) << " "
        << fixed(height, 0) << "\">\n";
    svg << "  <style>text{font-family:monospace;font-size:12px;}.t{font-size:14px;}</style>\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << fixed(width, 0) << "\" height=\""
        << fixed(height, 0) << "\" fill=\"#ffffff\"/>\n";
    const std::string title = doc.method == "shapley"
        ? "Shapley values"
        : (doc.method == "influence" ? "Contextual influence" : "Contextual importance and utility");
    svg << "  <text class=\"t\" x=\"12\" y=\"20\">" << xml_escape(title) << ": "
        << xml_escape(doc.instance_id) << ", " << xml_escape(doc.output_name) << " = "
        << fixed(doc.output_value, 4) << "</text>\n";

    nlohmann::json bars = nlohmann::json::array();

    for (std::size_t k = 0; k < doc.entries.size(); ++k) {
        const ExplanationEntry& e = doc.entries[k];
        const double y = top + row_h * static_cast<double>(k);
        svg << "  <text x=\"12\" y=\"" << fixed(y + 15.0, 2) << "\">" << xml_escape(e.name)
            << "</text>\n";
        if (!signed_plot) {
            const double outer = e.ci * plot_w;
            const double inner = e.ci * e.cu * plot_w;
            svg << "  <rect class=\"outer\" x=\"" << fixed(left, 2) << "\" y=\"" << fixed(y, 2)
                << "\" width=\"" << fixed(outer, 3) << "\" height=\"" << fixed(bar_h, 2)
                << "\" fill=\"#4477aa\" fill-opacity=\"0.25\"/>\n";
            svg << "  <rect class=\"inner\" x=\"" << fixed(left, 2) << "\" y=\"" << fixed(y + 3.0, 2)
                << "\" width=\"" << fixed(inner, 3) << "\" height=\"" << fixed(bar_h - 6.0, 2)
                << "\" fill=\"#4477aa\"/>\n";
            bars.push_back({{"name", e.name},
                            {"ci", e.ci},
                            {"cu", e.cu},
                            {"outer", e.ci},
                            {"inner", e.ci * e.cu}});
        } else {
            const double value = doc.method == "shapley" ? e.phi : e.influence;
            const double zero = left + plot_w / 2.0;
            const double w = std::fabs(value) * plot_w / 2.0;
            const double x = value >= 0.0 ? zero : zero - w;
            const char* color = value >= 0.0 ? "#228833" : "#cc3311";
            svg << "  <rect class=\"signed\" x=\"" << fixed(x, 3) << "\" y=\"" << fixed(y, 2)
                << "\" width=\"" << fixed(w, 3) << "\" height=\"" << fixed(bar_h, 2)
                << "\" fill=\"" << color << "\"/>\n";
            nlohmann::json bar = {{"name", e.name}, {"value", value}};
            if (doc.method == "shapley")
                bar["stderr"] = e.stderr_;
            bars.push_back(std::move(bar));
        }
    }

    // Axis with quarter ticks; a zero line splits signed plots.
    const double axis_y = top + row_h * static_cast<double>(doc.entries.size()) + 6.0;
    svg << "  <line x1=\"" << fixed(left, 2) << "\" y1=\"" << fixed(axis_y, 2) << "\" x2=\""
        << fixed(left + plot_w, 2) << "\" y2=\"" << fixed(axis_y, 2)
        << "\" stroke=\"#222222\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double fx = left + plot_w * static_cast<double>(t) / 4.0;
        const double label = signed_plot ? -1.0 + 0.5 * static_cast<double>(t)
                                         : 0.25 * static_cast<double>(t);
        svg << "  <line x1=\"" << fixed(fx, 2) << "\" y1=\"" << fixed(axis_y, 2) << "\" x2=\""
            << fixed(fx, 2) << "\" y2=\"" << fixed(axis_y + 4.0, 2) << "\" stroke=\"#222222\"/>\n";
        svg << "  <text x=\"" << fixed(fx - 10.0, 2) << "\" y=\"" << fixed(axis_y + 18.0, 2)
            << "\">" << fixed(label, 2) << "</text>\n";
    }
    if (signed_plot) {
        const double zero = left + plot_w / 2.0;
        svg << "  <line x1=\"" << fixed(zero, 2) << "\" y1=\"" << fixed(top - 6.0, 2)
            << "\" x2=\"" << fixed(zero, 2) << "\" y2=\"" << fixed(axis_y, 2)
            << "\" stroke=\"#888888\" stroke-dasharray=\"3,3\"/>\n";
    }
    svg << "</svg>\n";

    nlohmann::json data;
    data["method"] = doc.method;
    data["instance"] = doc.instance_id;
    data["output"] = doc.output_name;
    data["output_value"] = doc.output_value;
    data["axis"] = signed_plot ? nlohmann::json::array({-1.0, 1.0})
                               : nlohmann::json::array({0.0, 1.0});
    data["bars"] = std::move(bars);
    return BarPlot{svg.str(), data.dump(2) + "\n"};
}

} // namespace ciu
