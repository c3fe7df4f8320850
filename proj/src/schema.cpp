#include "ciu/schema.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "ciu/game_io.hpp"

namespace ciu {

int Feature::level_index(const std::string& value) const
{
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (levels[i] == value)
            return static_cast<int>(i);
    return -1;
}

FeatureSchema::FeatureSchema(std::vector<Feature> features)
    : features_(std::move(features))
{
    std::set<std::string> names;
    for (const Feature& f : features_) {
        if (!names.insert(f.name).second)
            throw std::invalid_argument("schema: duplicate feature name '" + f.name + "'");
        if (f.kind == FeatureKind::Numeric) {
            if (!(f.lo < f.hi))
                throw std::invalid_argument("schema: feature '" + f.name + "' needs lo < hi");
        } else {
            if (f.levels.empty())
                throw std::invalid_argument("schema: categorical feature '" + f.name + "' has no levels");
            std::set<std::string> uniq(f.levels.begin(), f.levels.end());
            if (uniq.size() != f.levels.size())
                throw std::invalid_argument("schema: categorical feature '" + f.name + "' has duplicate levels");
        }
    }
}

int FeatureSchema::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < features_.size(); ++i)
        if (features_[i].name == name)
            return static_cast<int>(i);
    return -1;
}

void FeatureSchema::validate(const std::vector<double>& instance) const
{
    if (instance.size() != features_.size())
        throw std::invalid_argument("instance: expected " + std::to_string(features_.size())
                                    + " values, got " + std::to_string(instance.size()));
    for (std::size_t i = 0; i < features_.size(); ++i) {
        const Feature& f = features_[i];
        const double v = instance[i];
        if (!std::isfinite(v))
            throw std::invalid_argument("instance: feature '" + f.name + "' is not finite");
        if (f.kind == FeatureKind::Numeric) {
            if (v < f.lo || v > f.hi)
                throw std::invalid_argument("instance: feature '" + f.name + "' = "
                                            + format_double(v) + " outside ["
                                            + format_double(f.lo) + ", " + format_double(f.hi) + "]");
        } else {
            const int idx = static_cast<int>(v);
            if (v != static_cast<double>(idx) || idx < 0
                || idx >= static_cast<int>(f.levels.size()))
                throw std::invalid_argument("instance: feature '" + f.name
                                            + "' has invalid level index " + format_double(v));
        }
    }
}

std::string describe_instance(const FeatureSchema& schema, const Instance& x)
{
    std::string out;
    for (int i = 0; i < schema.size(); ++i) {
        const Feature& f = schema.at(i);
        if (i > 0) out += ", ";
        out += f.name + "=";
        if (f.kind == FeatureKind::Categorical)
            out += f.levels[static_cast<std::size_t>(x[i])];
        else
            out += format_double(x[i]);
    }
    return out;
}

} // namespace ciu
