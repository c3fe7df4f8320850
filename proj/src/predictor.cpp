#include "ciu/predictor.hpp"

#include <stdexcept>

namespace ciu {

int Predictor::output_index(const std::string& name) const
{
    const auto& names = output_names();
    for (std::size_t j = 0; j < names.size(); ++j)
        if (names[j] == name)
            return static_cast<int>(j);
    throw std::invalid_argument("predictor: unknown output '" + name + "'");
}

AffineMap AffineMap::unit_from_range(double lo, double hi)
{
    if (!(lo < hi))
        throw std::invalid_argument("AffineMap: range needs lo < hi");
    return AffineMap{1.0 / (hi - lo), -lo / (hi - lo)};
}

LinearModel::LinearModel(FeatureSchema schema, double intercept, std::vector<double> weights,
                         std::vector<AffineMap> utilities)
    : schema_(std::move(schema)),
      intercept_(intercept),
      weights_(std::move(weights)),
      utilities_(std::move(utilities))
{
    if (static_cast<int>(weights_.size()) != schema_.size()
        || static_cast<int>(utilities_.size()) != schema_.size())
        throw std::invalid_argument("LinearModel: weights/utilities arity mismatch");
}

LinearModel LinearModel::with_unit_utilities(FeatureSchema schema, double intercept,
                                             std::vector<double> weights)
{
    std::vector<AffineMap> utilities;
    utilities.reserve(static_cast<std::size_t>(schema.size()));
    for (int i = 0; i < schema.size(); ++i) {
        const Feature& f = schema.at(i);
        if (f.kind == FeatureKind::Numeric)
            utilities.push_back(AffineMap::unit_from_range(f.lo, f.hi));
        else if (f.levels.size() > 1)
            utilities.push_back(AffineMap{1.0 / (static_cast<double>(f.levels.size()) - 1.0), 0.0});
        else
            utilities.push_back(AffineMap{0.0, 0.0});
    }
    return LinearModel(std::move(schema), intercept, std::move(weights), std::move(utilities));
}

std::vector<double> LinearModel::predict(const Instance& x) const
{
    double y = intercept_;
    for (int i = 0; i < schema_.size(); ++i)
        y += weights_[static_cast<std::size_t>(i)]
             * utilities_[static_cast<std::size_t>(i)](x[i]);
    return {y};
}

} // namespace ciu
