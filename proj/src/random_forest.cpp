#include "ciu/random_forest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ciu/rng.hpp"

namespace ciu {

namespace {

struct TreeBuilder {
    const Dataset& data;
    const RfHyperparams& hp;
    int n_classes;
    int mtry;
    Rng rng;
    std::vector<RandomForest::Node> nodes;

    int majority(const std::vector<int>& idx) const
    {
        std::vector<int> counts(static_cast<std::size_t>(n_classes), 0);
        for (int r : idx)
            ++counts[static_cast<std::size_t>(data.labels[static_cast<std::size_t>(r)])];
        int best = 0;
        for (int k = 1; k < n_classes; ++k)
            if (counts[static_cast<std::size_t>(k)] > counts[static_cast<std::size_t>(best)])
                best = k;
        return best;
    }

    bool pure(const std::vector<int>& idx) const
    {
        const int first = data.labels[static_cast<std::size_t>(idx.front())];
        for (int r : idx)
            if (data.labels[static_cast<std::size_t>(r)] != first)
                return false;
        return true;
    }

    // Best Gini split on one feature; returns impurity or +inf if no split.
    struct Split {
        double impurity = std::numeric_limits<double>::infinity();
        double threshold = 0.0;
    };

    Split best_split_on(const std::vector<int>& idx, int feature) const
    {
        std::vector<std::pair<double, int>> vals;
        vals.reserve(idx.size());
        for (int r : idx)
            vals.emplace_back(data.rows[static_cast<std::size_t>(r)][feature],
                              data.labels[static_cast<std::size_t>(r)]);
        std::sort(vals.begin(), vals.end());

        const int total = static_cast<int>(vals.size());
        std::vector<int> right_counts(static_cast<std::size_t>(n_classes), 0);
        for (const auto& [v, y] : vals)
            ++right_counts[static_cast<std::size_t>(y)];
        std::vector<int> left_counts(static_cast<std::size_t>(n_classes), 0);

        Split best;
        int n_left = 0;
        for (int i = 0; i < total - 1; ++i) {
            const int y = vals[static_cast<std::size_t>(i)].second;
            ++left_counts[static_cast<std::size_t>(y)];
            --right_counts[static_cast<std::size_t>(y)];
            ++n_left;
            if (vals[static_cast<std::size_t>(i)].first
                == vals[static_cast<std::size_t>(i + 1)].first)
                continue;
            const int n_right = total - n_left;
            if (n_left < hp.min_leaf || n_right < hp.min_leaf)
                continue;
            double gini_l = 1.0, gini_r = 1.0;
            for (int k = 0; k < n_classes; ++k) {
                const double pl = static_cast<double>(left_counts[static_cast<std::size_t>(k)]) / n_left;
                const double pr = static_cast<double>(right_counts[static_cast<std::size_t>(k)]) / n_right;
                gini_l -= pl * pl;
                gini_r -= pr * pr;
            }
            const double impurity = (n_left * gini_l + n_right * gini_r) / total;
            if (impurity < best.impurity) {
                best.impurity = impurity;
                best.threshold = 0.5 * (vals[static_cast<std::size_t>(i)].first
                                        + vals[static_cast<std::size_t>(i + 1)].first);
            }
        }
        return best;
    }

    int build(std::vector<int> idx, int depth)
    {
        const int me = static_cast<int>(nodes.size());
        nodes.emplace_back();
        nodes[static_cast<std::size_t>(me)].klass = majority(idx);

        if (depth >= hp.max_depth || static_cast<int>(idx.size()) < 2 * hp.min_leaf || pure(idx))
            return me;

        // Per-split feature subsample without replacement.
        const int n_features = data.schema.size();
        std::vector<int> features(static_cast<std::size_t>(n_features));
        std::iota(features.begin(), features.end(), 0);
        for (int i = 0; i < mtry; ++i) {
            const int j = i + static_cast<int>(rng.bounded(static_cast<std::uint32_t>(n_features - i)));
            std::swap(features[static_cast<std::size_t>(i)], features[static_cast<std::size_t>(j)]);
        }

        int best_feature = -1;
        Split best;
        for (int i = 0; i < mtry; ++i) {
            const int f = features[static_cast<std::size_t>(i)];
            const Split s = best_split_on(idx, f);
            if (s.impurity < best.impurity) {
                best = s;
                best_feature = f;
            }
        }
        if (best_feature < 0)
            return me;

        std::vector<int> left, right;
        for (int r : idx) {
            if (data.rows[static_cast<std::size_t>(r)][best_feature] <= best.threshold)
                left.push_back(r);
            else
                right.push_back(r);
        }
        idx.clear();
        idx.shrink_to_fit();

        nodes[static_cast<std::size_t>(me)].feature = best_feature;
        nodes[static_cast<std::size_t>(me)].threshold = best.threshold;
        const int l = build(std::move(left), depth + 1);
        nodes[static_cast<std::size_t>(me)].left = l;
        const int r = build(std::move(right), depth + 1);
        nodes[static_cast<std::size_t>(me)].right = r;
        return me;
    }
};

int tree_vote(const std::vector<RandomForest::Node>& tree, const Instance& x)
{
    int at = 0;
    while (tree[static_cast<std::size_t>(at)].feature >= 0) {
        const auto& node = tree[static_cast<std::size_t>(at)];
        at = x[node.feature] <= node.threshold ? node.left : node.right;
    }
    return tree[static_cast<std::size_t>(at)].klass;
}

} // namespace

RandomForest RandomForest::train(const Dataset& data, const std::vector<int>& row_indices,
                                 const RfHyperparams& hp)
{
    if (row_indices.empty())
        throw std::invalid_argument("random forest: empty training set");
    if (data.n_classes() < 2)
        throw std::invalid_argument("random forest: need at least two classes");
    {
        const int first = data.labels[static_cast<std::size_t>(row_indices.front())];
        bool varied = false;
        for (int r : row_indices)
            if (data.labels[static_cast<std::size_t>(r)] != first) { varied = true; break; }
        if (!varied)
            throw std::invalid_argument("random forest: training labels are all one class");
    }

    RandomForest rf;
    rf.schema_ = data.schema;
    rf.class_names_ = data.label_names;
    rf.hp_ = hp;

    const int n_features = data.schema.size();
    const int mtry = hp.mtry > 0
        ? std::min(hp.mtry, n_features)
        : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_features))));

    Rng master(hp.seed);
    const int n = static_cast<int>(row_indices.size());
    for (int t = 0; t < hp.n_trees; ++t) {
        Rng tree_rng = master.fork(static_cast<std::uint64_t>(t) + 1);
        std::vector<int> sample;
        sample.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            sample.push_back(row_indices[tree_rng.bounded(static_cast<std::uint32_t>(n))]);
        TreeBuilder builder{data, hp, data.n_classes(), mtry, tree_rng.fork(0x7ee5), {}};
        builder.build(std::move(sample), 0);
        rf.trees_.push_back(std::move(builder.nodes));
    }
    return rf;
}

std::vector<double> RandomForest::predict(const Instance& x) const
{
    schema_.validate(x.values);
    std::vector<double> probs(class_names_.size(), 0.0);
    for (const auto& tree : trees_)
        probs[static_cast<std::size_t>(tree_vote(tree, x))] += 1.0;
    for (double& p : probs)
        p /= static_cast<double>(trees_.size());
    return probs;
}

std::pair<RandomForest, double> train_random_forest(const Dataset& data,
                                                    const RfHyperparams& hp,
                                                    const SplitSpec& split)
{
    if (data.n_rows() == 0)
        throw std::invalid_argument("train: empty dataset");
    if (!(split.train_fraction > 0.0 && split.train_fraction < 1.0))
        throw std::invalid_argument("train: train_fraction must be in (0, 1)");

    std::vector<int> order(static_cast<std::size_t>(data.n_rows()));
    std::iota(order.begin(), order.end(), 0);
    Rng rng(split.seed);
    rng.shuffle(order);

    const int n_train = std::max(1, static_cast<int>(std::floor(
        split.train_fraction * static_cast<double>(data.n_rows()))));
    std::vector<int> train_rows(order.begin(), order.begin() + n_train);
    std::vector<int> test_rows(order.begin() + n_train, order.end());
    if (test_rows.empty())
        throw std::invalid_argument("train: empty test split");

    RandomForest rf = RandomForest::train(data, train_rows, hp);

    int correct = 0;
    for (int r : test_rows) {
        const std::vector<double> probs = rf.predict(data.rows[static_cast<std::size_t>(r)]);
        int best = 0;
        for (std::size_t k = 1; k < probs.size(); ++k)
            if (probs[k] > probs[static_cast<std::size_t>(best)])
                best = static_cast<int>(k);
        if (best == data.labels[static_cast<std::size_t>(r)])
            ++correct;
    }
    const double accuracy = static_cast<double>(correct) / static_cast<double>(test_rows.size());
    return {std::move(rf), accuracy};
}

namespace {

nlohmann::json schema_to_json(const FeatureSchema& schema)
{
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < schema.size(); ++i) {
        const Feature& f = schema.at(i);
        nlohmann::json jf;
        jf["name"] = f.name;
        if (f.kind == FeatureKind::Numeric) {
            jf["kind"] = "numeric";
            jf["lo"] = f.lo;
            jf["hi"] = f.hi;
        } else {
            jf["kind"] = "categorical";
            jf["levels"] = f.levels;
        }
        arr.push_back(std::move(jf));
    }
    return arr;
}

FeatureSchema schema_from_json(const nlohmann::json& arr)
{
    std::vector<Feature> features;
    for (const auto& jf : arr) {
        Feature f;
        f.name = jf.at("name").get<std::string>();
        if (jf.at("kind") == "numeric") {
            f.kind = FeatureKind::Numeric;
            f.lo = jf.at("lo").get<double>();
            f.hi = jf.at("hi").get<double>();
        } else {
            f.kind = FeatureKind::Categorical;
            f.levels = jf.at("levels").get<std::vector<std::string>>();
        }
        features.push_back(std::move(f));
    }
    return FeatureSchema(std::move(features));
}

} // namespace

std::string RandomForest::to_json() const
{
    nlohmann::json j;
    j["format"] = "ciukit.random_forest.v1";
    j["schema"] = schema_to_json(schema_);
    j["classes"] = class_names_;
    j["hyperparams"] = {{"n_trees", hp_.n_trees},
                        {"max_depth", hp_.max_depth},
                        {"min_leaf", hp_.min_leaf},
                        {"mtry", hp_.mtry},
                        {"seed", hp_.seed}};
    nlohmann::json trees = nlohmann::json::array();
    for (const auto& tree : trees_) {
        nlohmann::json jt = nlohmann::json::array();
        for (const Node& n : tree)
            jt.push_back({n.feature, n.threshold, n.left, n.right, n.klass});
        trees.push_back(std::move(jt));
    }
    j["trees"] = std::move(trees);
    return j.dump();
}

RandomForest RandomForest::from_json(const std::string& text)
{
    const nlohmann::json j = nlohmann::json::parse(text);
    if (j.value("format", "") != "ciukit.random_forest.v1")
        throw std::runtime_error("model file: unrecognized format tag");
    RandomForest rf;
    rf.schema_ = schema_from_json(j.at("schema"));
    rf.class_names_ = j.at("classes").get<std::vector<std::string>>();
    const auto& hp = j.at("hyperparams");
    rf.hp_.n_trees = hp.at("n_trees").get<int>();
    rf.hp_.max_depth = hp.at("max_depth").get<int>();
    rf.hp_.min_leaf = hp.at("min_leaf").get<int>();
    rf.hp_.mtry = hp.at("mtry").get<int>();
    rf.hp_.seed = hp.at("seed").get<std::uint64_t>();
    for (const auto& jt : j.at("trees")) {
        std::vector<Node> tree;
        tree.reserve(jt.size());
        for (const auto& jn : jt) {
            Node n;
            n.feature = jn.at(0).get<int>();
            n.threshold = jn.at(1).get<double>();
            n.left = jn.at(2).get<int>();
            n.right = jn.at(3).get<int>();
            n.klass = jn.at(4).get<int>();
            tree.push_back(n);
        }
        rf.trees_.push_back(std::move(tree));
    }
    return rf;
}

void RandomForest::save(const std::string& path) const
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("model: cannot open " + path + " for writing");
    out << to_json();
}

RandomForest RandomForest::load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("model: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

} // namespace ciu
