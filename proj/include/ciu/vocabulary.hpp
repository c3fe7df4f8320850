/** @file vocabulary.hpp
 *  @brief Named feature coalitions ("intermediate concepts") and their files.
 *
 *  A vocabulary maps concept names to feature index sets; a concept may be
 *  declared as a union of feature indices and previously defined concepts.
 *  Vocabulary files are JSON objects in declaration order with 1-based
 *  feature indices, e.g.
 *
 *      { "PRICE": [1, 2],
 *        "COMFORT": [3, 4, 5],
 *        "TECH": ["COMFORT", 6],
 *        "CAR": ["PRICE", "TECH"] }
 *
 *  Indices are converted to 0-based exactly once, at parse time. The same
 *  format serializes levels structures as nested arrays.
 */

#ifndef CIU_VOCABULARY_HPP
#define CIU_VOCABULARY_HPP

#include <string>
#include <variant>
#include <vector>

#include "ciu/levels.hpp"
#include "ciu/schema.hpp"

namespace ciu {

/// Sorted, duplicate-free set of 0-based feature indices; not capped like
/// Coalition since no 2^N enumeration happens over features here.
using IndexSet = std::vector<int>;

IndexSet make_index_set(std::vector<int> indices);
IndexSet index_set_union(const IndexSet& a, const IndexSet& b);
bool index_subset(const IndexSet& inner, const IndexSet& outer);

struct Concept {
    std::string name;
    /// Declared constituents: feature indices (0-based) and concept names.
    std::vector<std::variant<int, std::string>> parts;
    /// Fully expanded feature indices.
    IndexSet indices;
};

class Vocabulary {
public:
    Vocabulary() = default;

    /// Concepts expand in declaration order; references must point to
    /// already-defined concepts (acyclic by construction), indices must be
    /// valid for n_features.
    Vocabulary(std::vector<Concept> concepts, int n_features);

    const std::vector<Concept>& concepts() const { return concepts_; }
    const Concept* find(const std::string& name) const;
    int n_features() const { return n_features_; }
    bool empty() const { return concepts_.empty(); }

    /// Nesting depth: 1 for index-only concepts, 1 + max part depth else.
    int depth_of(const std::string& name) const;

    /// Concepts not strictly contained in another concept, excluding any
    /// concept covering the whole feature set (the root, e.g. CAR).
    std::vector<std::string> top_level_concepts() const;

    /** Expands the vocabulary into a levels structure over the features:
     *  level 0 is singletons, level k groups the maximal concepts of nesting
     *  depth <= k (uncovered features stay singletons), the last level is
     *  the grand coalition. Throws when same-depth concepts overlap.
     */
    LevelsStructure to_levels_structure() const;

    /// Display name for a block: the matching concept name, the feature
    /// name for singletons, else the joined feature names.
    std::string block_name(Coalition block, const FeatureSchema& schema) const;

private:
    std::vector<Concept> concepts_;
    int n_features_ = 0;
};

/// Parses the JSON vocabulary format (1-based indices, name references).
/// Diagnostics carry the offending concept name and entry position.
Vocabulary parse_vocabulary_text(const std::string& text, int n_features);
Vocabulary parse_vocabulary(const std::string& path, int n_features);

/// Levels structure <-> nested-array JSON (1-based player indices).
std::string levels_to_json(const LevelsStructure& ls);
LevelsStructure levels_from_json(const std::string& text);

} // namespace ciu

#endif // CIU_VOCABULARY_HPP
