/** @file ciu.hpp
 *  @brief Contextual Importance, Contextual Utility and Contextual Influence.
 *
 *  For an instance x, an output j, an explained feature set {i} and a target
 *  set {I} with {i} within {I}:
 *
 *    CI  = (ymax_{i}(x) - ymin_{i}(x)) / (ymax_{I}(x) - ymin_{I}(x))
 *    CU  = |(y_j(x) - yumin_{i}(x)) / (ymax_{i}(x) - ymin_{i}(x))|
 *          with yumin = ymin when the output utility slope A is positive,
 *          yumin = ymax when it is negative
 *    phi = CI * (CU - phi0)
 *
 *  where the ranges come from perturbing only the features in the set while
 *  the rest stays at x (see sampling.hpp). CI is contextual: it depends on x
 *  unless the model is linear, in which case it collapses to the normalized
 *  weight sum of the set.
 */

#ifndef CIU_CIU_HPP
#define CIU_CIU_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ciu/sampling.hpp"
#include "ciu/vocabulary.hpp"

namespace ciu {

/// Output utility u_j(y_j) = A*y_j + b. Classification probabilities use the
/// identity; only the sign of A enters the CU formula.
struct UtilityMap {
    double A = 1.0;
    double b = 0.0;
};

struct CiuConfig {
    SamplerConfig sampler;
    UtilityMap utility;
    double baseline = 0.5;         // phi0, a utility value
    double degenerate_tol = 1e-12; // range below this counts as degenerate
};

/// Target set's output range is below tolerance: CI is undefined there.
class degenerate_target_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CuEstimate {
    double value = 0.5;
    bool degenerate = false; // range collapsed; value is the neutral 0.5
};

struct CiuResult {
    std::string concept_name;
    IndexSet explained; // {i}
    IndexSet target;    // {I}
    int output = 0;     // j

    double ci = 0.0;
    double cu = 0.0;
    double influence = 0.0;
    double baseline = 0.5;

    double ymin = 0.0; // raw range of the explained set
    double ymax = 0.0;
    double y = 0.0; // y_j(x)
    double target_ymin = 0.0;
    double target_ymax = 0.0;

    bool cu_degenerate = false;
    bool exhaustive = false;
    long n_evals = 0;
};

double contextual_importance(const Predictor& model, const Instance& x, const IndexSet& s,
                             const IndexSet& target, int output, const CiuConfig& cfg = {});

CuEstimate contextual_utility(const Predictor& model, const Instance& x, const IndexSet& s,
                              int output, const CiuConfig& cfg = {});

/// phi = ci * (cu - phi0), exactly.
double contextual_influence(double ci, double cu, double phi0);

/// Analytic importance of s relative to target for a positive-weight linear
/// model: sum of weights over s divided by sum over target.
double linear_joint_importance(const std::vector<double>& weights, const IndexSet& s,
                               const IndexSet& target);

struct ExplainOptions {
    /// Abstraction level into the vocabulary's levels structure; -1 selects
    /// the level just below the grand coalition (the "top concepts").
    int level = -1;
};

/// One CiuResult per block of the selected abstraction level, target = all
/// features, sorted by CI descending then concept name.
std::vector<CiuResult> explain_instance(const Predictor& model, const Instance& x,
                                        const Vocabulary& vocab, int output,
                                        const CiuConfig& cfg = {}, const ExplainOptions& opts = {});

/// CIU of each declared constituent of the concept, relative to the concept
/// (target = the parent's index set).
std::vector<CiuResult> drilldown(const Predictor& model, const Instance& x,
                                 const Vocabulary& vocab, const std::string& concept_name,
                                 int output, const CiuConfig& cfg = {});

} // namespace ciu

#endif // CIU_CIU_HPP
