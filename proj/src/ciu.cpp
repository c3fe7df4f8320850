#include "ciu/ciu.hpp"

#include <algorithm>
#include <cmath>

namespace ciu {

namespace {

void check_sets(const IndexSet& s, const IndexSet& target)
{
    if (s.empty() || target.empty())
        throw std::invalid_argument("ciu: index sets must be nonempty");
    if (!index_subset(s, target))
        throw std::invalid_argument("ciu: the explained set must be contained in the target set");
}

double clamp01(double v)
{
    return std::min(1.0, std::max(0.0, v));
}

double ci_from_estimates(const MinMaxEstimate& part, const MinMaxEstimate& whole, int j,
                         double degenerate_tol)
{
    const double denom = whole.range(j);
    if (denom <= degenerate_tol)
        throw degenerate_target_error(
            "ciu: output " + std::to_string(j)
            + " is insensitive to the target set (range below tolerance)");
    return clamp01(part.range(j) / denom);
}

CuEstimate cu_from_estimate(const MinMaxEstimate& est, int j, const CiuConfig& cfg)
{
    const double range = est.range(j);
    if (range <= cfg.degenerate_tol)
        return CuEstimate{0.5, true}; // neutral, flagged
    const double yumin = cfg.utility.A >= 0.0 ? est.ymin[static_cast<std::size_t>(j)]
                                              : est.ymax[static_cast<std::size_t>(j)];
    const double cu = std::fabs((est.y_at_x[static_cast<std::size_t>(j)] - yumin) / range);
    return CuEstimate{clamp01(cu), false};
}

CiuResult make_result(std::string name, IndexSet s, IndexSet target, int j,
                      const MinMaxEstimate& part, const MinMaxEstimate& whole,
                      const CiuConfig& cfg)
{
    CiuResult r;
    r.concept_name = std::move(name);
    r.explained = std::move(s);
    r.target = std::move(target);
    r.output = j;
    // A degenerate target is an error for the scalar operation, but inside a
    // document every concept still needs a renderable row: CI becomes 0 and
    // CU is flagged neutral.
    r.ci = whole.range(j) <= cfg.degenerate_tol
        ? 0.0
        : ci_from_estimates(part, whole, j, cfg.degenerate_tol);
    const CuEstimate cu = cu_from_estimate(part, j, cfg);
    r.cu = cu.value;
    r.cu_degenerate = cu.degenerate;
    r.baseline = cfg.baseline;
    r.influence = contextual_influence(r.ci, r.cu, cfg.baseline);
    r.ymin = part.ymin[static_cast<std::size_t>(j)];
    r.ymax = part.ymax[static_cast<std::size_t>(j)];
    r.y = part.y_at_x[static_cast<std::size_t>(j)];
    r.target_ymin = whole.ymin[static_cast<std::size_t>(j)];
    r.target_ymax = whole.ymax[static_cast<std::size_t>(j)];
    r.exhaustive = part.exhaustive && whole.exhaustive;
    r.n_evals = part.n_evals + whole.n_evals;
    return r;
}

void sort_results(std::vector<CiuResult>& results)
{
    std::sort(results.begin(), results.end(), [](const CiuResult& a, const CiuResult& b) {
        if (a.ci != b.ci)
            return a.ci > b.ci;
        return a.concept_name < b.concept_name;
    });
}

void check_output(const Predictor& model, int output)
{
    if (output < 0 || output >= model.n_outputs())
        throw std::invalid_argument("ciu: output index " + std::to_string(output)
                                    + " out of range");
}

} // namespace

double contextual_importance(const Predictor& model, const Instance& x, const IndexSet& s,
                             const IndexSet& target, int output, const CiuConfig& cfg)
{
    check_sets(s, target);
    check_output(model, output);
    const MinMaxEstimate part = estimate_minmax(model, x, s, cfg.sampler);
    const MinMaxEstimate whole = s == target ? part : estimate_minmax(model, x, target, cfg.sampler);
    return ci_from_estimates(part, whole, output, cfg.degenerate_tol);
}

CuEstimate contextual_utility(const Predictor& model, const Instance& x, const IndexSet& s,
                              int output, const CiuConfig& cfg)
{
    if (s.empty())
        throw std::invalid_argument("ciu: index set must be nonempty");
    check_output(model, output);
    return cu_from_estimate(estimate_minmax(model, x, s, cfg.sampler), output, cfg);
}

double contextual_influence(double ci, double cu, double phi0)
{
    return ci * (cu - phi0);
}

double linear_joint_importance(const std::vector<double>& weights, const IndexSet& s,
                               const IndexSet& target)
{
    check_sets(s, target);
    double num = 0.0, den = 0.0;
    for (int i : target) {
        if (i < 0 || i >= static_cast<int>(weights.size()))
            throw std::invalid_argument("linear_joint_importance: index out of range");
        if (weights[static_cast<std::size_t>(i)] <= 0.0)
            throw std::invalid_argument("linear_joint_importance: weights must be positive");
        den += weights[static_cast<std::size_t>(i)];
    }
    for (int i : s)
        num += weights[static_cast<std::size_t>(i)];
    if (den == 0.0)
        throw std::invalid_argument("linear_joint_importance: zero denominator");
    return num / den;
}

std::vector<CiuResult> explain_instance(const Predictor& model, const Instance& x,
                                        const Vocabulary& vocab, int output,
                                        const CiuConfig& cfg, const ExplainOptions& opts)
{
    if (vocab.empty())
        throw std::invalid_argument("explain: empty vocabulary");
    check_output(model, output);

    const LevelsStructure ls = vocab.to_levels_structure();
    const int level = opts.level < 0 ? std::max(0, ls.degree() - 1) : opts.level;
    const Partition& blocks = ls.level(level); // throws on out-of-range

    IndexSet all_features;
    for (int i = 0; i < model.schema().size(); ++i)
        all_features.push_back(i);
    const MinMaxEstimate whole = estimate_minmax(model, x, all_features, cfg.sampler);

    std::vector<CiuResult> results;
    results.reserve(blocks.size());
    for (Coalition block : blocks) {
        IndexSet s = block.members();
        const MinMaxEstimate part = estimate_minmax(model, x, s, cfg.sampler);
        results.push_back(make_result(vocab.block_name(block, model.schema()), std::move(s),
                                      all_features, output, part, whole, cfg));
    }
    sort_results(results);
    return results;
}

std::vector<CiuResult> drilldown(const Predictor& model, const Instance& x,
                                 const Vocabulary& vocab, const std::string& concept_name,
                                 int output, const CiuConfig& cfg)
{
    check_output(model, output);
    const Concept* parent = vocab.find(concept_name);
    if (!parent)
        throw std::invalid_argument("drilldown: unknown concept '" + concept_name + "'");
    if (parent->parts.size() < 2)
        throw std::invalid_argument("drilldown: concept '" + concept_name
                                    + "' has fewer than two constituents");

    const MinMaxEstimate whole = estimate_minmax(model, x, parent->indices, cfg.sampler);

    std::vector<CiuResult> results;
    results.reserve(parent->parts.size());
    for (const auto& part : parent->parts) {
        std::string name;
        IndexSet s;
        if (std::holds_alternative<int>(part)) {
            const int idx = std::get<int>(part);
            name = model.schema().at(idx).name;
            s = {idx};
        } else {
            name = std::get<std::string>(part);
            s = vocab.find(name)->indices;
        }
        const MinMaxEstimate est = estimate_minmax(model, x, s, cfg.sampler);
        results.push_back(make_result(std::move(name), std::move(s), parent->indices, output,
                                      est, whole, cfg));
    }
    sort_results(results);
    return results;
}

} // namespace ciu
