#include "ciu/vocabulary.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ciu {

IndexSet make_index_set(std::vector<int> indices)
{
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return indices;
}

IndexSet index_set_union(const IndexSet& a, const IndexSet& b)
{
    IndexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool index_subset(const IndexSet& inner, const IndexSet& outer)
{
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

Vocabulary::Vocabulary(std::vector<Concept> concepts, int n_features)
    : concepts_(std::move(concepts)), n_features_(n_features)
{
    std::set<std::string> seen;
    for (Concept& c : concepts_) {
        if (!seen.insert(c.name).second)
            throw std::invalid_argument("vocabulary: concept '" + c.name + "' defined twice");

        IndexSet expanded;
        for (std::size_t e = 0; e < c.parts.size(); ++e) {
            const auto& part = c.parts[e];
            if (std::holds_alternative<int>(part)) {
                const int idx = std::get<int>(part);
                if (idx < 0 || idx >= n_features_)
                    throw std::invalid_argument("vocabulary: concept '" + c.name + "', entry "
                                                + std::to_string(e + 1) + ": feature index "
                                                + std::to_string(idx + 1) + " out of range 1.."
                                                + std::to_string(n_features_));
                expanded = index_set_union(expanded, {idx});
            } else {
                const std::string& ref = std::get<std::string>(part);
                if (ref == c.name)
                    throw std::invalid_argument("vocabulary: concept '" + c.name
                                                + "' references itself (cycle)");
                const Concept* target = nullptr;
                for (const Concept& prev : concepts_) {
                    if (&prev == &c) break;
                    if (prev.name == ref) { target = &prev; break; }
                }
                if (!target) {
                    const bool later = std::any_of(concepts_.begin(), concepts_.end(),
                                                   [&](const Concept& k) { return k.name == ref; });
                    if (later)
                        throw std::invalid_argument("vocabulary: concept '" + c.name + "', entry "
                                                    + std::to_string(e + 1) + ": reference to '" + ref
                                                    + "' before its definition (cycle)");
                    throw std::invalid_argument("vocabulary: concept '" + c.name + "', entry "
                                                + std::to_string(e + 1) + ": unknown reference '"
                                                + ref + "'");
                }
                expanded = index_set_union(expanded, target->indices);
            }
        }
        if (expanded.empty())
            throw std::invalid_argument("vocabulary: concept '" + c.name + "' is empty");
        c.indices = std::move(expanded);
    }
}

const Concept* Vocabulary::find(const std::string& name) const
{
    for (const Concept& c : concepts_)
        if (c.name == name)
            return &c;
    return nullptr;
}

int Vocabulary::depth_of(const std::string& name) const
{
    const Concept* c = find(name);
    if (!c)
        throw std::invalid_argument("vocabulary: unknown concept '" + name + "'");
    int depth = 1;
    for (const auto& part : c->parts)
        if (std::holds_alternative<std::string>(part))
            depth = std::max(depth, 1 + depth_of(std::get<std::string>(part)));
    return depth;
}

std::vector<std::string> Vocabulary::top_level_concepts() const
{
    std::vector<std::string> out;
    for (const Concept& c : concepts_) {
        if (static_cast<int>(c.indices.size()) == n_features_)
            continue; // the root covers everything; it is the target, not a bar
        bool maximal = true;
        for (const Concept& other : concepts_) {
            if (&other == &c || static_cast<int>(other.indices.size()) == n_features_)
                continue;
            if (c.indices != other.indices && index_subset(c.indices, other.indices)) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            out.push_back(c.name);
    }
    return out;
}

LevelsStructure Vocabulary::to_levels_structure() const
{
    if (n_features_ > kMaxPlayers)
        throw std::invalid_argument("vocabulary: levels-structure expansion is capped at "
                                    + std::to_string(kMaxPlayers) + " features");

    int max_depth = 0;
    for (const Concept& c : concepts_)
        if (static_cast<int>(c.indices.size()) != n_features_)
            max_depth = std::max(max_depth, depth_of(c.name));

    std::vector<Partition> levels;
    levels.push_back(singleton_partition(n_features_));

    for (int d = 1; d <= max_depth; ++d) {
        // Maximal concepts of depth <= d (excluding the all-features root).
        std::vector<const Concept*> chosen;
        for (const Concept& c : concepts_) {
            if (static_cast<int>(c.indices.size()) == n_features_ || depth_of(c.name) > d)
                continue;
            bool maximal = true;
            for (const Concept& other : concepts_) {
                if (&other == &c || static_cast<int>(other.indices.size()) == n_features_
                    || depth_of(other.name) > d)
                    continue;
                if (c.indices != other.indices && index_subset(c.indices, other.indices)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal)
                chosen.push_back(&c);
        }

        Partition level;
        Mask covered = 0;
        for (const Concept* c : chosen) {
            const Coalition block = Coalition::of(c->indices);
            if ((covered & block.mask()) != 0)
                throw std::invalid_argument("vocabulary: concepts overlap at abstraction level "
                                            + std::to_string(d));
            covered |= block.mask();
            level.push_back(block);
        }
        for (int i = 0; i < n_features_; ++i)
            if (!((covered >> i) & 1u))
                level.push_back(Coalition::single(i));
        levels.push_back(canonical_partition(std::move(level)));
    }

    if (levels.back().size() != 1)
        levels.push_back({Coalition::all(n_features_)});
    return LevelsStructure::validate(std::move(levels));
}

std::string Vocabulary::block_name(Coalition block, const FeatureSchema& schema) const
{
    for (const Concept& c : concepts_)
        if (Coalition::of(c.indices) == block)
            return c.name;
    const std::vector<int> members = block.members();
    if (members.size() == 1)
        return schema.at(members.front()).name;
    std::string joined;
    for (int i : members) {
        if (!joined.empty()) joined += "+";
        joined += schema.at(i).name;
    }
    return joined;
}

Vocabulary parse_vocabulary_text(const std::string& text, int n_features)
{
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("vocabulary: ") + e.what());
    }
    if (!doc.is_object())
        throw std::runtime_error("vocabulary: top level must be an object of concept -> entries");

    std::vector<Concept> concepts;
    for (const auto& [name, value] : doc.items()) {
        Concept c;
        c.name = name;
        const nlohmann::ordered_json entries = value.is_array()
            ? value
            : nlohmann::ordered_json::array({value});
        for (std::size_t e = 0; e < entries.size(); ++e) {
            const auto& entry = entries[e];
            if (entry.is_number_integer()) {
                // File indices are 1-based; internal are 0-based.
                c.parts.emplace_back(entry.get<int>() - 1);
            } else if (entry.is_string()) {
                c.parts.emplace_back(entry.get<std::string>());
            } else {
                throw std::runtime_error("vocabulary: concept '" + name + "', entry "
                                         + std::to_string(e + 1)
                                         + ": expected a feature index or a concept name");
            }
        }
        concepts.push_back(std::move(c));
    }
    return Vocabulary(std::move(concepts), n_features);
}

Vocabulary parse_vocabulary(const std::string& path, int n_features)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("vocabulary: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_vocabulary_text(buf.str(), n_features);
}

std::string levels_to_json(const LevelsStructure& ls)
{
    nlohmann::json levels = nlohmann::json::array();
    for (int k = 0; k <= ls.degree(); ++k) {
        nlohmann::json level = nlohmann::json::array();
        for (Coalition block : ls.level(k)) {
            nlohmann::json jb = nlohmann::json::array();
            for (int p : block.members())
                jb.push_back(p + 1);
            level.push_back(std::move(jb));
        }
        levels.push_back(std::move(level));
    }
    nlohmann::json j;
    j["levels"] = std::move(levels);
    return j.dump(2) + "\n";
}

LevelsStructure levels_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("levels file: ") + e.what());
    }
    std::vector<Partition> levels;
    for (const auto& jlevel : j.at("levels")) {
        Partition level;
        for (const auto& jblock : jlevel) {
            std::vector<int> members;
            for (const auto& p : jblock)
                members.push_back(p.get<int>() - 1);
            level.push_back(Coalition::of(members));
        }
        levels.push_back(std::move(level));
    }
    return LevelsStructure::validate(std::move(levels));
}

} // namespace ciu
