#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ciu/ciu.hpp"
#include "ciu/cli.hpp"
#include "ciu/csv.hpp"
#include "ciu/datasets.hpp"
#include "ciu/explanation.hpp"
#include "ciu/game_io.hpp"
#include "ciu/random_forest.hpp"
#include "ciu/render.hpp"
#include "ciu/shapley.hpp"

namespace py = pybind11;
using namespace ciu;

namespace {

Coalition coalition_from_list(const std::vector<int>& members)
{
    return Coalition::of(members);
}

py::dict result_to_dict(const CiuResult& r)
{
    py::dict d;
    d["concept"] = r.concept_name;
    d["explained"] = r.explained;
    d["target"] = r.target;
    d["output"] = r.output;
    d["ci"] = r.ci;
    d["cu"] = r.cu;
    d["influence"] = r.influence;
    d["baseline"] = r.baseline;
    d["ymin"] = r.ymin;
    d["ymax"] = r.ymax;
    d["y"] = r.y;
    d["cu_degenerate"] = r.cu_degenerate;
    d["exhaustive"] = r.exhaustive;
    d["n_evals"] = r.n_evals;
    return d;
}

CiuConfig make_config(int budget, int grid_points, std::uint64_t seed, double baseline,
                      double utility_slope)
{
    CiuConfig cfg;
    cfg.sampler.budget = budget;
    cfg.sampler.grid_points = grid_points;
    cfg.sampler.seed = seed;
    cfg.baseline = baseline;
    cfg.utility.A = utility_slope;
    return cfg;
}

} // namespace

PYBIND11_MODULE(ciukit, m)
{
    m.doc() = "Contextual importance/utility explanations over feature coalitions, "
              "with a cooperative-game core and a Shapley baseline";

    // ---- cooperative game primitives
    py::class_<Game>(m, "Game")
        .def(py::init([](int n, std::vector<double> worth) {
                 return Game(n, std::move(worth));
             }),
             py::arg("n_players"), py::arg("worth"))
        .def_property_readonly("n_players", &Game::n_players)
        .def("worth",
             [](const Game& g, const std::vector<int>& coalition) {
                 return g.worth(coalition_from_list(coalition));
             })
        .def("table", [](const Game& g) {
            return std::vector<double>(g.table().begin(), g.table().end());
        });

    m.def("unanimity_game",
          [](const std::vector<int>& t, int n) { return unanimity_game(coalition_from_list(t), n); },
          py::arg("t"), py::arg("n_players"));

    m.def("harsanyi_dividends",
          [](const Game& g) { return harsanyi_dividends(g).dividends; });

    m.def("reconstruct_from_dividends",
          [](int n, std::vector<double> dividends) {
              return reconstruct_from_dividends(DividendTable{n, std::move(dividends)});
          },
          py::arg("n_players"), py::arg("dividends"));

    m.def("game_properties", [](const Game& g) {
        const PropertyReport r = game_properties(g);
        py::dict d;
        d["monotonic"] = r.monotonic;
        d["zero_monotonic"] = r.zero_monotonic;
        d["superadditive"] = r.superadditive;
        d["convex"] = r.convex;
        d["nonnegative"] = r.nonnegative;
        return d;
    });

    m.def("is_imputation",
          [](const Game& g, PayoffVector x, double tol) { return is_imputation(g, x, tol); },
          py::arg("game"), py::arg("payoff"), py::arg("tol") = kWorthTolerance);
    m.def("in_core",
          [](const Game& g, PayoffVector x, double tol) { return in_core(g, x, tol); },
          py::arg("game"), py::arg("payoff"), py::arg("tol") = kWorthTolerance);
    m.def("exact_shapley_game", &exact_shapley_game);

    m.def("quotient_levels_nested",
          [](const std::vector<std::vector<std::vector<int>>>& levels, int k) {
              std::vector<Partition> parts;
              for (const auto& level : levels) {
                  Partition p;
                  for (const auto& block : level)
                      p.push_back(coalition_from_list(block));
                  parts.push_back(std::move(p));
              }
              const QuotientLevels q = quotient_levels(LevelsStructure::validate(parts), k);
              std::vector<std::vector<std::vector<std::vector<int>>>> out;
              for (const auto& level : q.nested()) {
                  std::vector<std::vector<std::vector<int>>> jl;
                  for (const auto& group : level) {
                      std::vector<std::vector<int>> jg;
                      for (const Coalition& block : group)
                          jg.push_back(block.members());
                      jl.push_back(std::move(jg));
                  }
                  out.push_back(std::move(jl));
              }
              return out;
          },
          py::arg("levels"), py::arg("k"),
          "Quotient of a levels structure (0-based player lists), as nested block sets");

    // ---- data and models
    py::class_<FeatureSchema>(m, "FeatureSchema")
        .def_property_readonly("size", &FeatureSchema::size)
        .def("feature_names", [](const FeatureSchema& s) {
            std::vector<std::string> names;
            for (int i = 0; i < s.size(); ++i)
                names.push_back(s.at(i).name);
            return names;
        });

    py::class_<Dataset>(m, "Dataset")
        .def_property_readonly("n_rows", &Dataset::n_rows)
        .def_property_readonly("schema", [](const Dataset& d) { return d.schema; })
        .def_property_readonly("label_names", [](const Dataset& d) { return d.label_names; })
        .def("row", [](const Dataset& d, int i) { return d.rows.at(static_cast<std::size_t>(i)).values; })
        .def("label", [](const Dataset& d, int i) { return d.labels.at(static_cast<std::size_t>(i)); });

    m.def("load_csv",
          [](const std::string& path, const std::string& label_column) {
              SchemaHint hint;
              hint.label_column = label_column;
              return load_csv(path, hint);
          },
          py::arg("path"), py::arg("label_column") = "");

    m.def("numeric_unit_schema",
          [](int n) {
              std::vector<Feature> features;
              for (int i = 0; i < n; ++i)
                  features.push_back(Feature{"x" + std::to_string(i + 1), FeatureKind::Numeric,
                                             0.0, 1.0, {}});
              return FeatureSchema(std::move(features));
          },
          py::arg("n_features"), "Schema of n numeric features on [0, 1]");
    m.def("make_titanic_dataset", &make_titanic_dataset, py::arg("seed") = 7519);
    m.def("make_cars_dataset", &make_cars_dataset);

    py::class_<Predictor>(m, "Predictor")
        .def("predict",
             [](const Predictor& p, std::vector<double> values) {
                 return p.predict(Instance{std::move(values)});
             })
        .def_property_readonly("output_names", &Predictor::output_names)
        .def_property_readonly("schema", &Predictor::schema);

    py::class_<LinearModel, Predictor>(m, "LinearModel")
        .def(py::init([](FeatureSchema schema, double intercept, std::vector<double> weights) {
                 return LinearModel::with_unit_utilities(std::move(schema), intercept,
                                                         std::move(weights));
             }),
             py::arg("schema"), py::arg("intercept"), py::arg("weights"));

    py::class_<RandomForest, Predictor>(m, "RandomForest")
        .def_static("load", &RandomForest::load)
        .def("save", &RandomForest::save)
        .def_property_readonly("n_trees", &RandomForest::n_trees);

    m.def("train_random_forest",
          [](const Dataset& data, int n_trees, int max_depth, int min_leaf, int mtry,
             std::uint64_t seed, double train_fraction, std::uint64_t split_seed) {
              RfHyperparams hp{n_trees, max_depth, min_leaf, mtry, seed};
              SplitSpec split{train_fraction, split_seed};
              auto [model, accuracy] = train_random_forest(data, hp, split);
              return py::make_tuple(std::move(model), accuracy);
          },
          py::arg("data"), py::arg("n_trees") = 500, py::arg("max_depth") = 12,
          py::arg("min_leaf") = 2, py::arg("mtry") = 0, py::arg("seed") = 1,
          py::arg("train_fraction") = 0.75, py::arg("split_seed") = 42);

    // ---- vocabulary and the engine
    py::class_<Vocabulary>(m, "Vocabulary")
        .def("top_level_concepts", &Vocabulary::top_level_concepts)
        .def("concept_indices", [](const Vocabulary& v, const std::string& name) {
            const Concept* c = v.find(name);
            if (!c)
                throw std::invalid_argument("unknown concept '" + name + "'");
            return c->indices;
        });

    m.def("parse_vocabulary_text", &parse_vocabulary_text, py::arg("text"),
          py::arg("n_features"));
    m.def("parse_vocabulary", &parse_vocabulary, py::arg("path"), py::arg("n_features"));

    m.def("contextual_importance",
          [](const Predictor& model, std::vector<double> x, IndexSet s, IndexSet target,
             int output, int budget, int grid_points, std::uint64_t seed) {
              return contextual_importance(model, Instance{std::move(x)}, s, target, output,
                                           make_config(budget, grid_points, seed, 0.5, 1.0));
          },
          py::arg("model"), py::arg("x"), py::arg("s"), py::arg("target"), py::arg("output") = 0,
          py::arg("budget") = 10000, py::arg("grid_points") = 21, py::arg("seed") = 2020);

    m.def("contextual_utility",
          [](const Predictor& model, std::vector<double> x, IndexSet s, int output, int budget,
             int grid_points, std::uint64_t seed, double utility_slope) {
              const CuEstimate cu =
                  contextual_utility(model, Instance{std::move(x)}, s, output,
                                     make_config(budget, grid_points, seed, 0.5, utility_slope));
              return py::make_tuple(cu.value, cu.degenerate);
          },
          py::arg("model"), py::arg("x"), py::arg("s"), py::arg("output") = 0,
          py::arg("budget") = 10000, py::arg("grid_points") = 21, py::arg("seed") = 2020,
          py::arg("utility_slope") = 1.0);

    m.def("contextual_influence", &contextual_influence, py::arg("ci"), py::arg("cu"),
          py::arg("baseline"));
    m.def("linear_joint_importance", &linear_joint_importance, py::arg("weights"), py::arg("s"),
          py::arg("target"));

    m.def("explain_instance",
          [](const Predictor& model, std::vector<double> x, const Vocabulary& vocab, int output,
             int budget, int grid_points, std::uint64_t seed, double baseline, int level) {
              ExplainOptions opts;
              opts.level = level;
              const auto results =
                  explain_instance(model, Instance{std::move(x)}, vocab, output,
                                   make_config(budget, grid_points, seed, baseline, 1.0), opts);
              py::list out;
              for (const CiuResult& r : results)
                  out.append(result_to_dict(r));
              return out;
          },
          py::arg("model"), py::arg("x"), py::arg("vocab"), py::arg("output") = 0,
          py::arg("budget") = 10000, py::arg("grid_points") = 21, py::arg("seed") = 2020,
          py::arg("baseline") = 0.5, py::arg("level") = -1);

    m.def("drilldown",
          [](const Predictor& model, std::vector<double> x, const Vocabulary& vocab,
             const std::string& concept_name, int output, int budget, int grid_points,
             std::uint64_t seed, double baseline) {
              const auto results =
                  drilldown(model, Instance{std::move(x)}, vocab, concept_name, output,
                            make_config(budget, grid_points, seed, baseline, 1.0));
              py::list out;
              for (const CiuResult& r : results)
                  out.append(result_to_dict(r));
              return out;
          },
          py::arg("model"), py::arg("x"), py::arg("vocab"), py::arg("concept"),
          py::arg("output") = 0, py::arg("budget") = 10000, py::arg("grid_points") = 21,
          py::arg("seed") = 2020, py::arg("baseline") = 0.5);

    // ---- shapley baseline
    m.def("linear_shapley",
          [](std::vector<double> weights, std::vector<double> x,
             std::vector<std::vector<double>> background) {
              BackgroundSet bg;
              for (auto& row : background)
                  bg.rows.push_back(Instance{std::move(row)});
              return linear_shapley(weights, Instance{std::move(x)}, bg);
          },
          py::arg("weights"), py::arg("x"), py::arg("background"));

    m.def("monte_carlo_shapley",
          [](const Predictor& model, std::vector<double> x,
             std::vector<std::vector<double>> background, int output, int n_permutations,
             std::uint64_t seed) {
              BackgroundSet bg;
              for (auto& row : background)
                  bg.rows.push_back(Instance{std::move(row)});
              const MonteCarloShapley mc = monte_carlo_shapley(
                  model, Instance{std::move(x)}, bg, output, n_permutations, seed);
              return py::make_tuple(mc.attributions, mc.stderrs);
          },
          py::arg("model"), py::arg("x"), py::arg("background"), py::arg("output") = 0,
          py::arg("n_permutations") = 2000, py::arg("seed") = 99);

    m.def("johnny_d_values", [](const FeatureSchema& schema) {
        return johnny_d_instance(schema).values;
    });

    m.def("run_cli",
          [](std::vector<std::string> args) { return run_cli(std::move(args)); },
          "Run a ciukit CLI command in-process");
}
