/** @file schema.hpp
 *  @brief Feature schemas, instances and labeled datasets.
 *
 *  Instances are stored as flat double vectors: numeric features hold their
 *  raw value, categorical features hold the level index. The schema carries
 *  the interpretation (declared range or level list) and validates values.
 */

#ifndef CIU_SCHEMA_HPP
#define CIU_SCHEMA_HPP

#include <optional>
#include <string>
#include <vector>

namespace ciu {

enum class FeatureKind { Numeric, Categorical };

struct Feature {
    std::string name;
    FeatureKind kind = FeatureKind::Numeric;
    double lo = 0.0; // numeric range, lo < hi
    double hi = 1.0;
    std::vector<std::string> levels; // categorical, nonempty and duplicate-free

    int level_index(const std::string& value) const; // -1 when unknown
};

class FeatureSchema {
public:
    FeatureSchema() = default;
    explicit FeatureSchema(std::vector<Feature> features);

    int size() const { return static_cast<int>(features_.size()); }
    const Feature& at(int i) const { return features_[static_cast<std::size_t>(i)]; }
    const std::vector<Feature>& features() const { return features_; }
    int index_of(const std::string& name) const; // -1 when absent

    /// Throws std::invalid_argument naming the first invalid cell.
    void validate(const std::vector<double>& instance) const;

private:
    std::vector<Feature> features_;
};

/// One row of feature values in schema order.
struct Instance {
    std::vector<double> values;

    double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
    int size() const { return static_cast<int>(values.size()); }
};

/// Renders an instance as human-readable `name=value` pairs.
std::string describe_instance(const FeatureSchema& schema, const Instance& x);

struct Dataset {
    FeatureSchema schema;
    std::vector<Instance> rows;
    std::vector<int> labels;              // index into label_names
    std::vector<std::string> label_names; // first-appearance order
    std::string label_column;

    int n_rows() const { return static_cast<int>(rows.size()); }
    int n_classes() const { return static_cast<int>(label_names.size()); }
};

} // namespace ciu

#endif // CIU_SCHEMA_HPP
