#include "ciu/shapley.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ciu/rng.hpp"

namespace ciu {

std::vector<double> BackgroundSet::feature_means(const FeatureSchema& schema) const
{
    if (rows.empty())
        throw std::invalid_argument("background: empty set");
    std::vector<double> means(static_cast<std::size_t>(schema.size()), 0.0);
    for (const Instance& row : rows) {
        schema.validate(row.values);
        for (int i = 0; i < schema.size(); ++i)
            means[static_cast<std::size_t>(i)] += row[i];
    }
    for (double& m : means)
        m /= static_cast<double>(rows.size());
    return means;
}

double AfaExplanation::value_at_ones() const
{
    double g = phi0;
    for (double phi : attributions)
        g += phi;
    return g;
}

std::vector<double> linear_shapley(const std::vector<double>& weights, const Instance& x,
                                   const BackgroundSet& background)
{
    if (background.rows.empty())
        throw std::invalid_argument("linear_shapley: empty background");
    if (x.values.size() != weights.size())
        throw std::invalid_argument("linear_shapley: weight/instance arity mismatch");
    for (const Instance& row : background.rows)
        if (row.values.size() != weights.size())
            throw std::invalid_argument("linear_shapley: background arity mismatch");

    std::vector<double> means(weights.size(), 0.0);
    for (const Instance& row : background.rows)
        for (std::size_t i = 0; i < weights.size(); ++i)
            means[i] += row.values[i];
    for (double& m : means)
        m /= static_cast<double>(background.rows.size());

    std::vector<double> phi(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i)
        phi[i] = weights[i] * (x.values[i] - means[i]);
    return phi;
}

AfaExplanation linear_shapley_afa(const LinearModel& model, const Instance& x,
                                  const BackgroundSet& background)
{
    // Work in utility space: the model is linear in u_i(x_i).
    const std::vector<double> means = background.feature_means(model.schema());
    AfaExplanation afa;
    afa.phi0 = model.intercept();
    afa.attributions.resize(model.weights().size());
    for (std::size_t i = 0; i < model.weights().size(); ++i) {
        const auto& u = model.utilities()[i];
        afa.phi0 += model.weights()[i] * u(means[i]);
        afa.attributions[i] = model.weights()[i] * (u(x.values[i]) - u(means[i]));
    }
    return afa;
}

PayoffVector exact_shapley_game(const Game& g)
{
    const int n = g.n_players();
    if (n > kMaxShapleyPlayers)
        throw std::invalid_argument("exact_shapley_game: capped at "
                                    + std::to_string(kMaxShapleyPlayers) + " players");
    if (n == 0)
        return {};

    std::vector<double> factorial(static_cast<std::size_t>(n) + 1, 1.0);
    for (int k = 1; k <= n; ++k)
        factorial[static_cast<std::size_t>(k)] = factorial[static_cast<std::size_t>(k - 1)] * k;

    PayoffVector phi(static_cast<std::size_t>(n), 0.0);
    const Mask count = Mask{1} << n;
    for (int i = 0; i < n; ++i) {
        const Mask bit = Mask{1} << i;
        double sum = 0.0;
        for (Mask s = 0; s < count; ++s) {
            if (s & bit)
                continue;
            const int size = std::popcount(s);
            const double weight = factorial[static_cast<std::size_t>(size)]
                                  * factorial[static_cast<std::size_t>(n - size - 1)];
            sum += weight * (g.table()[s | bit] - g.table()[s]);
        }
        phi[static_cast<std::size_t>(i)] = sum / factorial[static_cast<std::size_t>(n)];
    }
    return phi;
}

MonteCarloShapley monte_carlo_shapley(const Predictor& model, const Instance& x,
                                      const BackgroundSet& background, int output,
                                      int n_permutations, std::uint64_t seed)
{
    if (background.rows.empty())
        throw std::invalid_argument("monte_carlo_shapley: empty background");
    if (n_permutations < 1)
        throw std::invalid_argument("monte_carlo_shapley: need at least one permutation");
    if (output < 0 || output >= model.n_outputs())
        throw std::invalid_argument("monte_carlo_shapley: output index out of range");
    model.schema().validate(x.values);

    const int n = model.schema().size();
    std::vector<double> sum(static_cast<std::size_t>(n), 0.0);
    std::vector<double> sum_sq(static_cast<std::size_t>(n), 0.0);

    Rng master(seed);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int p = 0; p < n_permutations; ++p) {
        Rng rng = master.fork(static_cast<std::uint64_t>(p) + 1);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        const Instance& bg =
            background.rows[rng.bounded(static_cast<std::uint32_t>(background.rows.size()))];

        // Walk the permutation, switching features from background to x.
        Instance probe = bg;
        double prev = model.predict(probe)[static_cast<std::size_t>(output)];
        for (int i : order) {
            probe.values[static_cast<std::size_t>(i)] = x[i];
            const double cur = model.predict(probe)[static_cast<std::size_t>(output)];
            const double marginal = cur - prev;
            sum[static_cast<std::size_t>(i)] += marginal;
            sum_sq[static_cast<std::size_t>(i)] += marginal * marginal;
            prev = cur;
        }
    }

    MonteCarloShapley out;
    out.n_permutations = n_permutations;
    out.attributions.resize(static_cast<std::size_t>(n));
    out.stderrs.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double mean = sum[static_cast<std::size_t>(i)] / n_permutations;
        out.attributions[static_cast<std::size_t>(i)] = mean;
        if (n_permutations > 1) {
            const double var = std::max(0.0, (sum_sq[static_cast<std::size_t>(i)]
                                              - n_permutations * mean * mean)
                                                 / (n_permutations - 1));
            out.stderrs[static_cast<std::size_t>(i)] =
                std::sqrt(var / static_cast<double>(n_permutations));
        }
    }
    return out;
}

std::vector<std::pair<std::string, double>> group_attribution(
    const std::vector<double>& attributions, const Vocabulary& vocab,
    const FeatureSchema& schema)
{
    if (static_cast<int>(attributions.size()) != schema.size())
        throw std::invalid_argument("group_attribution: attribution arity mismatch");

    std::vector<std::pair<std::string, double>> out;
    std::vector<bool> covered(attributions.size(), false);
    for (const std::string& name : vocab.top_level_concepts()) {
        const Concept* c = vocab.find(name);
        double total = 0.0;
        for (int i : c->indices) {
            if (covered[static_cast<std::size_t>(i)])
                throw std::invalid_argument(
                    "group_attribution: concepts overlap on feature '" + schema.at(i).name
                    + "'; sums would double-count");
            covered[static_cast<std::size_t>(i)] = true;
            total += attributions[static_cast<std::size_t>(i)];
        }
        out.emplace_back(name, total);
    }
    for (std::size_t i = 0; i < attributions.size(); ++i)
        if (!covered[i])
            out.emplace_back(schema.at(static_cast<int>(i)).name, attributions[i]);
    return out;
}

} // namespace ciu
