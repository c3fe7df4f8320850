/** @file datasets.hpp
 *  @brief Bundled example datasets and named instances.
 *
 *  Both datasets are synthetic recreations shaped like their well-known
 *  namesakes, generated deterministically so the repository is
 *  self-contained and the demo pipelines are reproducible:
 *
 *   - titanic: 2207 rows, features class, gender, age, sibsp, parch, fare,
 *     embarked (in that order, so the WEALTH vocabulary indices {1,6} mean
 *     {class, fare}), label `survived` in {died, survived}. Survival is
 *     drawn from a logistic ground truth with realistic marginals; a few
 *     ages are missing to exercise imputation.
 *   - cars: the full 1728-row cartesian product of six categorical
 *     features (buying, maint, doors, persons, lug_boot, safety), labeled
 *     unacc/acc/good/vgood by a fixed hierarchical rule set; rows are in
 *     lexicographic order with the last feature varying fastest.
 */

#ifndef CIU_DATASETS_HPP
#define CIU_DATASETS_HPP

#include <cstdint>
#include <string>

#include "ciu/schema.hpp"

namespace ciu {

Dataset make_titanic_dataset(std::uint64_t seed = 7519);
Dataset make_cars_dataset();

/// The 'johnny_d' fixture: 8-year-old boy travelling 1st class, fare 72,
/// no relatives aboard, embarked in Southampton. Resolved against the
/// schema by feature name.
Instance johnny_d_instance(const FeatureSchema& schema);

/// Named instances for --instance lookups ("johnny_d" for now).
Instance named_instance(const std::string& name, const FeatureSchema& schema);

} // namespace ciu

#endif // CIU_DATASETS_HPP
