/** @file random_forest.hpp
 *  @brief A small deterministic random-forest classifier.
 *
 *  Gini-impurity CART trees on bootstrap samples with per-split feature
 *  subsampling. Categorical features are split on their level index like
 *  numeric ones (deep trees can isolate any level set). The predicted
 *  probability of class j is the fraction of trees voting j; training is
 *  bit-reproducible for a fixed seed and input ordering.
 */

#ifndef CIU_RANDOM_FOREST_HPP
#define CIU_RANDOM_FOREST_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ciu/predictor.hpp"

namespace ciu {

struct RfHyperparams {
    int n_trees = 500;
    int max_depth = 12;
    int min_leaf = 2;
    int mtry = 0; // features per split; 0 means ceil(sqrt(n_features))
    std::uint64_t seed = 1;
};

struct SplitSpec {
    double train_fraction = 0.75;
    std::uint64_t seed = 42;
};

class RandomForest : public Predictor {
public:
    struct Node {
        int feature = -1;     // -1 marks a leaf
        double threshold = 0; // go left when value <= threshold
        int left = -1;
        int right = -1;
        int klass = -1; // leaf majority class
    };

    static RandomForest train(const Dataset& data, const std::vector<int>& row_indices,
                              const RfHyperparams& hp);

    std::vector<double> predict(const Instance& x) const override;
    int n_outputs() const override { return static_cast<int>(class_names_.size()); }
    const FeatureSchema& schema() const override { return schema_; }
    const std::vector<std::string>& output_names() const override { return class_names_; }

    int n_trees() const { return static_cast<int>(trees_.size()); }
    const RfHyperparams& hyperparams() const { return hp_; }

    std::string to_json() const;
    static RandomForest from_json(const std::string& text);
    void save(const std::string& path) const;
    static RandomForest load(const std::string& path);

private:
    RandomForest() = default;

    FeatureSchema schema_;
    std::vector<std::string> class_names_;
    RfHyperparams hp_;
    std::vector<std::vector<Node>> trees_;
};

/// Seeded shuffle split, training on the first train_fraction of rows;
/// returns the forest and its held-out accuracy. Rejects single-class data.
std::pair<RandomForest, double> train_random_forest(const Dataset& data,
                                                    const RfHyperparams& hp = {},
                                                    const SplitSpec& split = {});

} // namespace ciu

#endif // CIU_RANDOM_FOREST_HPP
