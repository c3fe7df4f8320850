/** @file shapley.hpp
 *  @brief Shapley-value computation: closed form, exact and Monte Carlo.
 *
 *  Three routes, from strongest assumptions to none:
 *   - linear_shapley: phi_i = w_i * (x_i - E[X_i]) for linear models,
 *   - exact_shapley_game: permutation-average of marginal contributions for
 *     an explicit game, via the subset form
 *       phi_i = sum_{S without i} |S|! (n-|S|-1)! / n! * (v(S u i) - v(S)),
 *   - monte_carlo_shapley: permutation sampling against a background set for
 *     arbitrary predictors, with per-feature standard errors.
 */

#ifndef CIU_SHAPLEY_HPP
#define CIU_SHAPLEY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ciu/game.hpp"
#include "ciu/predictor.hpp"
#include "ciu/vocabulary.hpp"

namespace ciu {

/// Exhaustive permutation-form Shapley is capped here (n! growth).
inline constexpr int kMaxShapleyPlayers = 12;

/// Background sample used for mean effects and replacement draws.
struct BackgroundSet {
    std::vector<Instance> rows;

    /// Per-feature arithmetic means.
    std::vector<double> feature_means(const FeatureSchema& schema) const;
};

/// Additive feature attribution: g(z') = phi0 + sum phi_i z'_i over binary
/// simplified inputs. For exact Shapley on a linear model, g at z' = all-ones
/// reproduces f(x).
struct AfaExplanation {
    double phi0 = 0.0;
    std::vector<double> attributions;

    double value_at_ones() const;
};

struct MonteCarloShapley {
    std::vector<double> attributions;
    std::vector<double> stderrs;
    int n_permutations = 0;
};

/// phi_i = w_i * (x_i - mean(X_i)); sums to f(x) - f(E[X]) for linear f.
std::vector<double> linear_shapley(const std::vector<double>& weights, const Instance& x,
                                   const BackgroundSet& background);

/// AFA view of the linear closed form: phi0 = f(E[X]).
AfaExplanation linear_shapley_afa(const LinearModel& model, const Instance& x,
                                  const BackgroundSet& background);

PayoffVector exact_shapley_game(const Game& g);

/// Permutation sampling: each sampled permutation draws one background row;
/// features after the prefix take that row's values jointly. Deterministic
/// for a fixed seed; unbiased in the number of permutations.
MonteCarloShapley monte_carlo_shapley(const Predictor& model, const Instance& x,
                                      const BackgroundSet& background, int output,
                                      int n_permutations, std::uint64_t seed);

/// Sums attributions within each top-level concept; uncovered features keep
/// their own entry, so the grand total is preserved. Overlapping concepts
/// would double-count and are rejected.
std::vector<std::pair<std::string, double>> group_attribution(
    const std::vector<double>& attributions, const Vocabulary& vocab,
    const FeatureSchema& schema);

} // namespace ciu

#endif // CIU_SHAPLEY_HPP
