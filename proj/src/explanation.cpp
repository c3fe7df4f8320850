#include "ciu/explanation.hpp"

#include <json.hpp>

namespace ciu {

namespace {

nlohmann::json entry_to_json(const ExplanationEntry& e, const std::string& method)
{
    nlohmann::json j;
    j["name"] = e.name;
    j["indices"] = e.indices;
    if (method == "shapley") {
        j["phi"] = e.phi;
        j["stderr"] = e.stderr_;
    } else {
        j["ci"] = e.ci;
        j["cu"] = e.cu;
        j["cu_degenerate"] = e.cu_degenerate;
        j["influence"] = e.influence;
        j["ymin"] = e.ymin;
        j["ymax"] = e.ymax;
        j["y"] = e.y;
        j["exhaustive"] = e.exhaustive;
        j["n_evals"] = e.n_evals;
    }
    return j;
}

ExplanationEntry entry_from_json(const nlohmann::json& j, const std::string& method)
{
    ExplanationEntry e;
    e.name = j.at("name").get<std::string>();
    e.indices = j.at("indices").get<std::vector<int>>();
    if (method == "shapley") {
        e.phi = j.at("phi").get<double>();
        e.stderr_ = j.at("stderr").get<double>();
    } else {
        e.ci = j.at("ci").get<double>();
        e.cu = j.at("cu").get<double>();
        e.cu_degenerate = j.at("cu_degenerate").get<bool>();
        e.influence = j.at("influence").get<double>();
        e.ymin = j.at("ymin").get<double>();
        e.ymax = j.at("ymax").get<double>();
        e.y = j.at("y").get<double>();
        e.exhaustive = j.at("exhaustive").get<bool>();
        e.n_evals = j.at("n_evals").get<long>();
    }
    return e;
}

} // namespace

ExplanationEntry entry_from_result(const CiuResult& r)
{
    ExplanationEntry e;
    e.name = r.concept_name;
    for (int i : r.explained)
        e.indices.push_back(i + 1);
    e.ci = r.ci;
    e.cu = r.cu;
    e.influence = r.influence;
    e.ymin = r.ymin;
    e.ymax = r.ymax;
    e.y = r.y;
    e.cu_degenerate = r.cu_degenerate;
    e.exhaustive = r.exhaustive;
    e.n_evals = r.n_evals;
    return e;
}

ExplanationEntry entry_from_attribution(const std::string& name, const std::vector<int>& indices0,
                                        double phi, double stderr_value)
{
    ExplanationEntry e;
    e.name = name;
    for (int i : indices0)
        e.indices.push_back(i + 1);
    e.phi = phi;
    e.stderr_ = stderr_value;
    return e;
}

std::string document_to_json(const ExplanationDocument& doc)
{
    nlohmann::json j;
    j["method"] = doc.method;
    j["model"] = doc.model_id;
    j["instance"] = doc.instance_id;
    j["instance_description"] = doc.instance_description;
    j["output"] = {{"index", doc.output_index},
                   {"name", doc.output_name},
                   {"value", doc.output_value}};
    j["baseline"] = doc.baseline;
    j["level"] = doc.level;
    nlohmann::json entries = nlohmann::json::array();
    for (const ExplanationEntry& e : doc.entries)
        entries.push_back(entry_to_json(e, doc.method));
    j["results"] = std::move(entries);
    nlohmann::json sections = nlohmann::json::array();
    for (const DrilldownSection& s : doc.drilldowns) {
        nlohmann::json js;
        js["concept"] = s.concept_name;
        nlohmann::json se = nlohmann::json::array();
        for (const ExplanationEntry& e : s.entries)
            se.push_back(entry_to_json(e, doc.method));
        js["results"] = std::move(se);
        sections.push_back(std::move(js));
    }
    j["drilldowns"] = std::move(sections);
    return j.dump(2) + "\n";
}

ExplanationDocument document_from_json(const std::string& text)
{
    const nlohmann::json j = nlohmann::json::parse(text);
    ExplanationDocument doc;
    doc.method = j.at("method").get<std::string>();
    doc.model_id = j.at("model").get<std::string>();
    doc.instance_id = j.at("instance").get<std::string>();
    doc.instance_description = j.at("instance_description").get<std::string>();
    doc.output_index = j.at("output").at("index").get<int>();
    doc.output_name = j.at("output").at("name").get<std::string>();
    doc.output_value = j.at("output").at("value").get<double>();
    doc.baseline = j.at("baseline").get<double>();
    doc.level = j.at("level").get<std::string>();
    for (const auto& je : j.at("results"))
        doc.entries.push_back(entry_from_json(je, doc.method));
    for (const auto& js : j.at("drilldowns")) {
        DrilldownSection s;
        s.concept_name = js.at("concept").get<std::string>();
        for (const auto& je : js.at("results"))
            s.entries.push_back(entry_from_json(je, doc.method));
        doc.drilldowns.push_back(std::move(s));
    }
    return doc;
}

} // namespace ciu
