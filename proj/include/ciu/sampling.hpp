/** @file sampling.hpp
 *  @brief Output-range estimation by perturbing a feature coalition.
 *
 *  Only the features in the explained set move; everything else stays at the
 *  instance's value, and the instance itself is always evaluated. Candidate
 *  values are all levels for categorical features and an evenly spaced grid
 *  for numeric ones. When the cartesian product of candidates fits in the
 *  evaluation budget the subspace is enumerated exhaustively; otherwise the
 *  sampler emits a deterministic stream (instance, per-feature axis sweeps,
 *  then Latin-hypercube chunks) and takes the first `budget` points, so a
 *  larger budget always evaluates a superset of points.
 */

#ifndef CIU_SAMPLING_HPP
#define CIU_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "ciu/predictor.hpp"
#include "ciu/vocabulary.hpp"

namespace ciu {

struct SamplerConfig {
    int budget = 10000;   // model evaluations per estimate, x included
    int grid_points = 21; // per numeric feature
    std::uint64_t seed = 2020;
};

struct MinMaxEstimate {
    std::vector<double> ymin;   // per output j
    std::vector<double> ymax;   // per output j
    std::vector<double> y_at_x; // f(x)
    long n_evals = 0;
    bool exhaustive = false;

    double range(int j) const
    {
        return ymax[static_cast<std::size_t>(j)] - ymin[static_cast<std::size_t>(j)];
    }
};

MinMaxEstimate estimate_minmax(const Predictor& model, const Instance& x,
                               const IndexSet& s, const SamplerConfig& cfg = {});

/// The exact evaluation points the estimate would use, in stream order
/// (exposed for the sampling-monotonicity property and for tests).
std::vector<Instance> perturbation_points(const FeatureSchema& schema, const Instance& x,
                                          const IndexSet& s, const SamplerConfig& cfg);

} // namespace ciu

#endif // CIU_SAMPLING_HPP
