/** @file explanation.hpp
 *  @brief Explanation documents: the machine-readable product of a run.
 *
 *  A document records what was explained (instance, model, output), how
 *  (method, baseline, abstraction level) and the per-concept numbers, and
 *  serializes to canonical JSON (alphabetical keys, shortest round-trip
 *  numbers) so identical runs produce identical bytes.
 */

#ifndef CIU_EXPLANATION_HPP
#define CIU_EXPLANATION_HPP

#include <string>
#include <vector>

#include "ciu/ciu.hpp"
#include "ciu/shapley.hpp"

namespace ciu {

struct ExplanationEntry {
    std::string name;
    std::vector<int> indices; // 1-based, for display and files

    // ciu / influence methods
    double ci = 0.0;
    double cu = 0.0;
    double influence = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;
    double y = 0.0;
    bool cu_degenerate = false;
    bool exhaustive = false;
    long n_evals = 0;

    // shapley method
    double phi = 0.0;
    double stderr_ = 0.0;

    bool operator==(const ExplanationEntry&) const = default;
};

struct DrilldownSection {
    std::string concept_name;
    std::vector<ExplanationEntry> entries;

    bool operator==(const DrilldownSection&) const = default;
};

struct ExplanationDocument {
    std::string method; // "ciu" | "influence" | "shapley"
    std::string model_id;
    std::string instance_id;
    std::string instance_description;
    int output_index = 0;
    std::string output_name;
    double output_value = 0.0;
    double baseline = 0.5;
    std::string level; // render hint ("top", "features", or a number)
    std::vector<ExplanationEntry> entries;
    std::vector<DrilldownSection> drilldowns;

    bool operator==(const ExplanationDocument&) const = default;
};

ExplanationEntry entry_from_result(const CiuResult& r);
ExplanationEntry entry_from_attribution(const std::string& name, const std::vector<int>& indices0,
                                        double phi, double stderr_value);

std::string document_to_json(const ExplanationDocument& doc);
ExplanationDocument document_from_json(const std::string& text);

} // namespace ciu

#endif // CIU_EXPLANATION_HPP
