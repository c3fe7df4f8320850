/** @file predictor.hpp
 *  @brief The black-box prediction interface and the analytic linear model.
 *
 *  A Predictor maps a schema-conformant instance to a fixed-arity output
 *  vector (class probabilities or regression values). Predictors are
 *  immutable after construction and safe for unsynchronized concurrent
 *  evaluation.
 */

#ifndef CIU_PREDICTOR_HPP
#define CIU_PREDICTOR_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ciu/schema.hpp"

namespace ciu {

class Predictor {
public:
    virtual ~Predictor() = default;

    virtual std::vector<double> predict(const Instance& x) const = 0;
    virtual int n_outputs() const = 0;
    virtual const FeatureSchema& schema() const = 0;
    /// Output names; class labels for classifiers, {"y"} style otherwise.
    virtual const std::vector<std::string>& output_names() const = 0;

    int output_index(const std::string& name) const;
};

/// Affine map u(x) = a*x + b, used for per-feature utility transforms.
struct AffineMap {
    double a = 1.0;
    double b = 0.0;

    double operator()(double x) const { return a * x + b; }

    /// The increasing map sending [lo, hi] onto [0, 1].
    static AffineMap unit_from_range(double lo, double hi);
};

/** Weighted-sum utility model y = w0 + sum_i w_i * u_i(x_i).
 *
 *  With positive weights and u_i ranging over [0, 1] this is the classic
 *  N-attribute utility function; it serves as the analytic ground truth for
 *  the importance identities (the importance of a feature set equals its
 *  normalized weight sum, independent of the instance).
 */
class LinearModel : public Predictor {
public:
    LinearModel(FeatureSchema schema, double intercept, std::vector<double> weights,
                std::vector<AffineMap> utilities);

    /// Convenience: utilities normalize each numeric feature's declared range
    /// onto [0, 1] (categorical features map level index over max index).
    static LinearModel with_unit_utilities(FeatureSchema schema, double intercept,
                                           std::vector<double> weights);

    std::vector<double> predict(const Instance& x) const override;
    int n_outputs() const override { return 1; }
    const FeatureSchema& schema() const override { return schema_; }
    const std::vector<std::string>& output_names() const override { return output_names_; }

    const std::vector<double>& weights() const { return weights_; }
    const std::vector<AffineMap>& utilities() const { return utilities_; }
    double intercept() const { return intercept_; }

private:
    FeatureSchema schema_;
    double intercept_;
    std::vector<double> weights_;
    std::vector<AffineMap> utilities_;
    std::vector<std::string> output_names_{"y"};
};

/// Wraps an arbitrary function as a Predictor; handy for synthetic models
/// in tests and for extending the toolkit without new classes.
class CallablePredictor : public Predictor {
public:
    CallablePredictor(FeatureSchema schema, std::vector<std::string> output_names,
                      std::function<std::vector<double>(const Instance&)> fn)
        : schema_(std::move(schema)), output_names_(std::move(output_names)), fn_(std::move(fn)) {}

    std::vector<double> predict(const Instance& x) const override { return fn_(x); }
    int n_outputs() const override { return static_cast<int>(output_names_.size()); }
    const FeatureSchema& schema() const override { return schema_; }
    const std::vector<std::string>& output_names() const override { return output_names_; }

private:
    FeatureSchema schema_;
    std::vector<std::string> output_names_;
    std::function<std::vector<double>(const Instance&)> fn_;
};

} // namespace ciu

#endif // CIU_PREDICTOR_HPP
