#include "ciu/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ciu/rng.hpp"

namespace ciu {

namespace {

constexpr int kLhsChunk = 64;

std::vector<double> candidate_values(const Feature& f, int grid_points)
{
    std::vector<double> vals;
    if (f.kind == FeatureKind::Categorical) {
        for (std::size_t l = 0; l < f.levels.size(); ++l)
            vals.push_back(static_cast<double>(l));
    } else {
        for (int k = 0; k < grid_points; ++k)
            vals.push_back(f.lo + (f.hi - f.lo) * static_cast<double>(k)
                                   / static_cast<double>(grid_points - 1));
    }
    return vals;
}

std::vector<Instance> build_points(const FeatureSchema& schema, const Instance& x,
                                   const IndexSet& s, const SamplerConfig& cfg,
                                   bool& exhaustive_out)
{
    if (cfg.budget < 1)
        throw std::invalid_argument("sampler: budget must be at least 1");
    if (cfg.grid_points < 2)
        throw std::invalid_argument("sampler: need at least 2 grid points");
    if (s.empty())
        throw std::invalid_argument("sampler: empty feature set");
    schema.validate(x.values);
    for (int i : s)
        if (i < 0 || i >= schema.size())
            throw std::invalid_argument("sampler: feature index out of range");

    std::vector<std::vector<double>> candidates;
    candidates.reserve(s.size());
    double log_combos = 0.0;
    for (int i : s) {
        candidates.push_back(candidate_values(schema.at(i), cfg.grid_points));
        log_combos += std::log(static_cast<double>(candidates.back().size()));
    }
    const bool exhaustive =
        log_combos <= std::log(static_cast<double>(cfg.budget)) + 1e-12;
    exhaustive_out = exhaustive;

    std::vector<Instance> points;
    points.push_back(x);

    if (exhaustive) {
        // Cartesian product of candidate values over the explained features.
        std::vector<std::size_t> at(s.size(), 0);
        Instance probe = x;
        for (;;) {
            for (std::size_t d = 0; d < s.size(); ++d)
                probe.values[static_cast<std::size_t>(s[d])] = candidates[d][at[d]];
            points.push_back(probe);
            std::size_t d = 0;
            while (d < s.size() && ++at[d] == candidates[d].size()) {
                at[d] = 0;
                ++d;
            }
            if (d == s.size())
                break;
        }
        return points;
    }

    // Sampled stream: axis sweeps first, then LHS chunks until the budget.
    for (std::size_t d = 0; d < s.size()
                             && static_cast<int>(points.size()) < cfg.budget; ++d) {
        Instance probe = x;
        for (double v : candidates[d]) {
            if (static_cast<int>(points.size()) >= cfg.budget)
                break;
            probe.values[static_cast<std::size_t>(s[d])] = v;
            points.push_back(probe);
        }
    }

    Rng master(cfg.seed);
    for (std::uint64_t chunk = 0; static_cast<int>(points.size()) < cfg.budget; ++chunk) {
        Rng rng = master.fork(chunk);
        // One Latin-hypercube chunk: each dimension visits every stratum once.
        std::vector<std::vector<int>> strata(s.size());
        for (std::size_t d = 0; d < s.size(); ++d) {
            strata[d].resize(kLhsChunk);
            for (int k = 0; k < kLhsChunk; ++k)
                strata[d][static_cast<std::size_t>(k)] = k;
            rng.shuffle(strata[d]);
        }
        for (int k = 0; k < kLhsChunk && static_cast<int>(points.size()) < cfg.budget; ++k) {
            Instance probe = x;
            for (std::size_t d = 0; d < s.size(); ++d) {
                const Feature& f = schema.at(s[static_cast<std::size_t>(d)]);
                const double u = (static_cast<double>(strata[d][static_cast<std::size_t>(k)])
                                  + rng.uniform())
                                 / static_cast<double>(kLhsChunk);
                double v;
                if (f.kind == FeatureKind::Categorical) {
                    const auto n_levels = static_cast<double>(f.levels.size());
                    v = std::min(n_levels - 1.0, std::floor(u * n_levels));
                } else {
                    v = f.lo + (f.hi - f.lo) * u;
                }
                probe.values[static_cast<std::size_t>(s[d])] = v;
            }
            points.push_back(probe);
        }
    }
    return points;
}

} // namespace

std::vector<Instance> perturbation_points(const FeatureSchema& schema, const Instance& x,
                                          const IndexSet& s, const SamplerConfig& cfg)
{
    bool exhaustive = false;
    return build_points(schema, x, s, cfg, exhaustive);
}

MinMaxEstimate estimate_minmax(const Predictor& model, const Instance& x,
                               const IndexSet& s, const SamplerConfig& cfg)
{
    bool exhaustive = false;
    const std::vector<Instance> points = build_points(model.schema(), x, s, cfg, exhaustive);

    MinMaxEstimate est;
    est.y_at_x = model.predict(x);
    est.ymin = est.y_at_x;
    est.ymax = est.y_at_x;
    est.n_evals = static_cast<long>(points.size());
    est.exhaustive = exhaustive;

    for (const Instance& p : points) {
        const std::vector<double> y = model.predict(p);
        for (std::size_t j = 0; j < y.size(); ++j) {
            est.ymin[j] = std::min(est.ymin[j], y[j]);
            est.ymax[j] = std::max(est.ymax[j], y[j]);
        }
    }
    return est;
}

} // namespace ciu
