#include "ciu/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ciu/game_io.hpp"

namespace ciu {

namespace {

bool is_missing(const std::string& cell)
{
    return cell.empty() || cell == "NA";
}

std::optional<double> parse_number(const std::string& cell)
{
    double v = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    while (first != last && *first == ' ') ++first;
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || p != last)
        return std::nullopt;
    return v;
}

std::vector<std::string> split_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::string cur;
    bool in_quotes = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '"')
            in_quotes = !in_quotes; // double-quote escapes toggle twice: harmless
        if (c == '\n' && !in_quotes) {
            if (!cur.empty() && cur.back() == '\r')
                cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) {
        if (cur.back() == '\r')
            cur.pop_back();
        lines.push_back(cur);
    }
    return lines;
}

} // namespace

std::vector<std::string> split_csv_record(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cur;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

Dataset parse_csv(const std::string& text, const SchemaHint& hint)
{
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty())
        throw std::runtime_error("csv: empty file");

    const std::vector<std::string> header = split_csv_record(lines[0]);
    const int n_cols = static_cast<int>(header.size());
    if (n_cols == 0)
        throw std::runtime_error("csv: empty header row");

    int label_col = n_cols - 1;
    if (!hint.label_column.empty()) {
        label_col = -1;
        for (int c = 0; c < n_cols; ++c)
            if (header[static_cast<std::size_t>(c)] == hint.label_column)
                label_col = c;
        if (label_col < 0)
            throw std::runtime_error("csv: label column '" + hint.label_column + "' not found");
    }

    std::vector<std::vector<std::string>> cells;
    cells.reserve(lines.size());
    for (std::size_t r = 1; r < lines.size(); ++r) {
        if (lines[r].empty())
            continue;
        std::vector<std::string> row = split_csv_record(lines[r]);
        if (static_cast<int>(row.size()) != n_cols)
            throw std::runtime_error("csv: row " + std::to_string(r + 1) + " has "
                                     + std::to_string(row.size()) + " cells, expected "
                                     + std::to_string(n_cols));
        if (is_missing(row[static_cast<std::size_t>(label_col)]))
            continue; // row without a label is useless for supervised work
        cells.push_back(std::move(row));
    }
    if (cells.empty())
        throw std::runtime_error("csv: no usable data rows");

    Dataset data;
    data.label_column = header[static_cast<std::size_t>(label_col)];

    // Column typing: numeric iff all non-missing values parse as numbers.
    std::vector<int> feature_cols;
    for (int c = 0; c < n_cols; ++c)
        if (c != label_col)
            feature_cols.push_back(c);

    std::vector<Feature> features;
    std::vector<std::vector<double>> columns(feature_cols.size());
    for (std::size_t f = 0; f < feature_cols.size(); ++f) {
        const int c = feature_cols[f];
        const std::string& name = header[static_cast<std::size_t>(c)];
        bool numeric = std::find(hint.force_categorical.begin(), hint.force_categorical.end(),
                                 name) == hint.force_categorical.end();
        if (numeric)
            for (const auto& row : cells) {
                const std::string& cell = row[static_cast<std::size_t>(c)];
                if (!is_missing(cell) && !parse_number(cell)) { numeric = false; break; }
            }

        Feature feat;
        feat.name = name;
        if (numeric) {
            feat.kind = FeatureKind::Numeric;
            std::vector<double> present;
            for (const auto& row : cells) {
                const std::string& cell = row[static_cast<std::size_t>(c)];
                if (!is_missing(cell))
                    present.push_back(*parse_number(cell));
            }
            if (present.empty())
                throw std::runtime_error("csv: column '" + name + "' has no values");
            std::sort(present.begin(), present.end());
            const double median = present[present.size() / 2];
            double lo = present.front(), hi = present.back();
            std::vector<double>& col = columns[f];
            col.reserve(cells.size());
            for (const auto& row : cells) {
                const std::string& cell = row[static_cast<std::size_t>(c)];
                col.push_back(is_missing(cell) ? median : *parse_number(cell));
            }
            if (auto it = hint.numeric_range.find(name); it != hint.numeric_range.end()) {
                lo = it->second.first;
                hi = it->second.second;
            }
            if (lo == hi)
                hi = lo + 1.0; // constant column still needs a valid range
            feat.lo = lo;
            feat.hi = hi;
        } else {
            feat.kind = FeatureKind::Categorical;
            std::vector<double>& col = columns[f];
            col.reserve(cells.size());
            for (const auto& row : cells) {
                std::string cell = row[static_cast<std::size_t>(c)];
                if (is_missing(cell))
                    cell = "missing";
                int idx = feat.level_index(cell);
                if (idx < 0) {
                    feat.levels.push_back(cell);
                    idx = static_cast<int>(feat.levels.size()) - 1;
                }
                col.push_back(static_cast<double>(idx));
            }
        }
        features.push_back(std::move(feat));
    }

    data.schema = FeatureSchema(std::move(features));
    for (const auto& row : cells) {
        const std::string& label = row[static_cast<std::size_t>(label_col)];
        int idx = -1;
        for (std::size_t k = 0; k < data.label_names.size(); ++k)
            if (data.label_names[k] == label)
                idx = static_cast<int>(k);
        if (idx < 0) {
            data.label_names.push_back(label);
            idx = static_cast<int>(data.label_names.size()) - 1;
        }
        data.labels.push_back(idx);
    }
    data.rows.reserve(cells.size());
    for (std::size_t r = 0; r < cells.size(); ++r) {
        Instance x;
        x.values.reserve(feature_cols.size());
        for (std::size_t f = 0; f < feature_cols.size(); ++f)
            x.values.push_back(columns[f][r]);
        data.rows.push_back(std::move(x));
    }
    return data;
}

Dataset load_csv(const std::string& path, const SchemaHint& hint)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("csv: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), hint);
}

namespace {

std::string csv_escape(const std::string& cell)
{
    if (cell.find_first_of(",\"\n") == std::string::npos)
        return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_cell(const Feature& f, double v)
{
    if (f.kind == FeatureKind::Categorical)
        return f.levels[static_cast<std::size_t>(v)];
    return format_double(v);
}

} // namespace

void write_csv(const Dataset& data, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("csv: cannot open " + path + " for writing");
    for (int i = 0; i < data.schema.size(); ++i)
        out << csv_escape(data.schema.at(i).name) << ',';
    out << csv_escape(data.label_column) << '\n';
    for (int r = 0; r < data.n_rows(); ++r) {
        for (int i = 0; i < data.schema.size(); ++i)
            out << csv_escape(format_cell(data.schema.at(i), data.rows[static_cast<std::size_t>(r)][i])) << ',';
        out << csv_escape(data.label_names[static_cast<std::size_t>(data.labels[static_cast<std::size_t>(r)])]) << '\n';
    }
}

} // namespace ciu
