#include "ciu/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>

#include "ciu/rng.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "ciu/ciu.hpp"
#include "ciu/csv.hpp"
#include "ciu/datasets.hpp"
#include "ciu/explanation.hpp"
#include "ciu/game_io.hpp"
#include "ciu/random_forest.hpp"
#include "ciu/render.hpp"
#include "ciu/shapley.hpp"

namespace ciu {

namespace {

namespace fs = std::filesystem;

std::string resolve_path(const std::string& path)
{
    if (fs::exists(path) || path.empty())
        return path;
    if (const char* dir = std::getenv("CIUKIT_DATA_DIR")) {
        const fs::path candidate = fs::path(dir) / path;
        if (fs::exists(candidate))
            return candidate.string();
    }
    return path;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

std::string fixed4(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

/// "johnny_d", "row:<k>" (1-based, needs --data), or comma-separated values
/// in schema order (categorical by level name, numeric by number).
Instance parse_instance_spec(const std::string& spec, const FeatureSchema& schema,
                             const Dataset* data)
{
    if (spec.rfind("row:", 0) == 0) {
        if (!data)
            throw std::runtime_error("--instance row:<k> needs --data to index into");
        const int row = std::stoi(spec.substr(4));
        if (row < 1 || row > data->n_rows())
            throw std::runtime_error("instance row " + std::to_string(row) + " out of range 1.."
                                     + std::to_string(data->n_rows()));
        return data->rows[static_cast<std::size_t>(row - 1)];
    }
    if (spec.find(',') == std::string::npos && schema.size() != 1)
        return named_instance(spec, schema);

    const std::vector<std::string> cells = split_csv_record(spec);
    if (static_cast<int>(cells.size()) != schema.size())
        throw std::runtime_error("instance spec has " + std::to_string(cells.size())
                                 + " values, schema has " + std::to_string(schema.size()));
    Instance x;
    for (int i = 0; i < schema.size(); ++i) {
        const Feature& f = schema.at(i);
        const std::string& cell = cells[static_cast<std::size_t>(i)];
        if (f.kind == FeatureKind::Categorical) {
            const int level = f.level_index(cell);
            if (level < 0)
                throw std::runtime_error("feature '" + f.name + "': unknown level '" + cell + "'");
            x.values.push_back(static_cast<double>(level));
        } else {
            x.values.push_back(std::stod(cell));
        }
    }
    schema.validate(x.values);
    return x;
}

std::vector<int> parse_players_1based(const std::string& csv)
{
    std::vector<int> out;
    std::stringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty())
            out.push_back(std::stoi(tok) - 1);
    return out;
}

std::vector<double> parse_doubles(const std::string& csv)
{
    std::vector<double> out;
    std::stringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty())
            out.push_back(std::stod(tok));
    return out;
}

struct ExplainSettings {
    std::string model_path;
    std::string data_path;
    std::string voc_path;
    std::string instance_spec;
    std::string class_name;
    int output_index = -1;
    std::string method = "ciu";
    double baseline = 0.5;
    std::string level = "top";
    int budget = 10000;
    int grid_points = 21;
    std::uint64_t seed = 2020;
    std::vector<std::string> drill;
    std::string out_json, out_svg, out_svg_data, out_text, template_path;
};

void add_output_flags(CLI::App* cmd, ExplainSettings& s)
{
    cmd->add_option("--out-json", s.out_json, "Write the explanation document JSON here");
    cmd->add_option("--out-svg", s.out_svg, "Write the bar plot SVG here");
    cmd->add_option("--out-svg-data", s.out_svg_data, "Write the bar plot data JSON here");
    cmd->add_option("--out-text", s.out_text, "Write the text rendering here");
    cmd->add_option("--template", s.template_path, "Concept line template file");
}

void emit_document(const ExplanationDocument& doc, const ExplainSettings& s)
{
    const TextTemplate tmpl = s.template_path.empty()
        ? TextTemplate::standard()
        : TextTemplate::load(resolve_path(s.template_path));
    const std::string text = render_text(doc, tmpl);
    if (!s.out_json.empty())
        write_file(s.out_json, document_to_json(doc));
    if (!s.out_svg.empty() || !s.out_svg_data.empty()) {
        const BarPlot plot = render_barplot(doc);
        if (!s.out_svg.empty())
            write_file(s.out_svg, plot.svg);
        if (!s.out_svg_data.empty())
            write_file(s.out_svg_data, plot.data_json);
    }
    if (!s.out_text.empty())
        write_file(s.out_text, text);
    else
        std::cout << text;
}

int resolve_output(const RandomForest& model, const ExplainSettings& s, const Instance& x)
{
    if (!s.class_name.empty())
        return model.output_index(s.class_name);
    if (s.output_index >= 0) {
        if (s.output_index >= model.n_outputs())
            throw std::runtime_error("--output-index out of range");
        return s.output_index;
    }
    // Default: explain the predicted class.
    const std::vector<double> probs = model.predict(x);
    int best = 0;
    for (std::size_t k = 1; k < probs.size(); ++k)
        if (probs[k] > probs[static_cast<std::size_t>(best)])
            best = static_cast<int>(k);
    return best;
}

ExplanationDocument build_ciu_document(const RandomForest& model, const Instance& x,
                                       const std::string& instance_id, const Vocabulary& vocab,
                                       int output, const ExplainSettings& s)
{
    CiuConfig cfg;
    cfg.sampler.budget = s.budget;
    cfg.sampler.grid_points = s.grid_points;
    cfg.sampler.seed = s.seed;
    cfg.baseline = s.baseline;

    ExplainOptions opts;
    if (s.level == "features")
        opts.level = 0;
    else if (s.level != "top")
        opts.level = std::stoi(s.level);

    ExplanationDocument doc;
    doc.method = s.method;
    doc.model_id = fs::path(s.model_path).filename().string();
    doc.instance_id = instance_id;
    doc.instance_description = describe_instance(model.schema(), x);
    doc.output_index = output;
    doc.output_name = model.output_names()[static_cast<std::size_t>(output)];
    doc.output_value = model.predict(x)[static_cast<std::size_t>(output)];
    doc.baseline = s.baseline;
    doc.level = s.level;

    for (const CiuResult& r : explain_instance(model, x, vocab, output, cfg, opts))
        doc.entries.push_back(entry_from_result(r));
    for (const std::string& concept_name : s.drill) {
        DrilldownSection section;
        section.concept_name = concept_name;
        for (const CiuResult& r : drilldown(model, x, vocab, concept_name, output, cfg))
            section.entries.push_back(entry_from_result(r));
        doc.drilldowns.push_back(std::move(section));
    }
    return doc;
}

ExplanationDocument build_shapley_document(const RandomForest& model, const Instance& x,
                                           const std::string& instance_id,
                                           const BackgroundSet& background,
                                           const Vocabulary* vocab, int output,
                                           int n_permutations, std::uint64_t seed,
                                           const std::string& model_path)
{
    const MonteCarloShapley mc =
        monte_carlo_shapley(model, x, background, output, n_permutations, seed);

    ExplanationDocument doc;
    doc.method = "shapley";
    doc.model_id = fs::path(model_path).filename().string();
    doc.instance_id = instance_id;
    doc.instance_description = describe_instance(model.schema(), x);
    doc.output_index = output;
    doc.output_name = model.output_names()[static_cast<std::size_t>(output)];
    doc.output_value = model.predict(x)[static_cast<std::size_t>(output)];
    doc.baseline = 0.0;
    doc.level = "features";

    for (int i = 0; i < model.schema().size(); ++i)
        doc.entries.push_back(entry_from_attribution(
            model.schema().at(i).name, {i}, mc.attributions[static_cast<std::size_t>(i)],
            mc.stderrs[static_cast<std::size_t>(i)]));

    if (vocab) {
        DrilldownSection groups;
        groups.concept_name = "concept groups";
        for (const auto& [name, total] : group_attribution(mc.attributions, *vocab, model.schema())) {
            const Concept* c = vocab->find(name);
            const std::vector<int> indices = c ? c->indices
                                               : std::vector<int>{model.schema().index_of(name)};
            double var = 0.0;
            for (int i : indices)
                var += mc.stderrs[static_cast<std::size_t>(i)] * mc.stderrs[static_cast<std::size_t>(i)];
            groups.entries.push_back(entry_from_attribution(name, indices, total, std::sqrt(var)));
        }
        doc.drilldowns.push_back(std::move(groups));
    }
    return doc;
}

// ---------------------------------------------------------------- demos

struct DemoSpec {
    std::string name;           // dataset tag: "titanic" or "cars"
    std::string instance_id;    // fixture name or row:<k>
    std::string class_name;     // explained output
    std::vector<std::string> drill;
    std::string voc_json;       // vocabulary file content
};

int run_demo(const DemoSpec& demo, const std::string& data_dir, const std::string& out_dir,
             std::uint64_t train_seed, std::uint64_t sampler_seed)
{
    fs::create_directories(out_dir);
    const fs::path out(out_dir);

    // The default --data-dir is the checkout's data/; fall back to
    // $CIUKIT_DATA_DIR when running from elsewhere.
    std::string base = data_dir;
    if (!fs::exists(base))
        if (const char* env = std::getenv("CIUKIT_DATA_DIR"))
            base = env;
    const std::string csv_path = resolve_path((fs::path(base) / (demo.name + ".csv")).string());
    const Dataset data = load_csv(csv_path);

    RfHyperparams hp;
    hp.seed = train_seed;
    SplitSpec split; // 75/25, seed 42
    auto [model, accuracy] = train_random_forest(data, hp, split);
    model.save((out / (demo.name + "_model.json")).string());

    // Reload so the pipeline runs against the persisted artifact.
    const RandomForest reloaded = RandomForest::load((out / (demo.name + "_model.json")).string());

    const Vocabulary vocab = parse_vocabulary_text(demo.voc_json, data.schema.size());
    const Dataset* row_source = &data;
    const Instance x = parse_instance_spec(demo.instance_id, data.schema, row_source);
    const int output = reloaded.output_index(demo.class_name);
    const double prob = reloaded.predict(x)[static_cast<std::size_t>(output)];

    ExplainSettings s;
    s.model_path = demo.name + "_model.json";
    s.instance_spec = demo.instance_id;
    s.class_name = demo.class_name;
    s.seed = sampler_seed;
    s.drill = demo.drill;

    ExplanationDocument ciu_doc = build_ciu_document(reloaded, x, demo.instance_id, vocab, output, s);
    write_file((out / "explanation.json").string(), document_to_json(ciu_doc));
    write_file((out / "explanation.txt").string(), render_text(ciu_doc));
    BarPlot ciu_plot = render_barplot(ciu_doc);
    write_file((out / "barplot.svg").string(), ciu_plot.svg);
    write_file((out / "barplot_data.json").string(), ciu_plot.data_json);

    ExplainSettings si = s;
    si.method = "influence";
    ExplanationDocument infl_doc = build_ciu_document(reloaded, x, demo.instance_id, vocab, output, si);
    write_file((out / "influence.json").string(), document_to_json(infl_doc));
    write_file((out / "influence.txt").string(), render_text(infl_doc));
    BarPlot infl_plot = render_barplot(infl_doc);
    write_file((out / "influence.svg").string(), infl_plot.svg);
    write_file((out / "influence_data.json").string(), infl_plot.data_json);

    // Background = the training split, matching the reported accuracy.
    std::vector<int> order(static_cast<std::size_t>(data.n_rows()));
    std::iota(order.begin(), order.end(), 0);
    Rng rng(split.seed);
    rng.shuffle(order);
    const int n_train = static_cast<int>(std::floor(split.train_fraction * data.n_rows()));
    BackgroundSet background;
    for (int k = 0; k < n_train; ++k)
        background.rows.push_back(data.rows[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])]);

    ExplanationDocument shap_doc = build_shapley_document(
        reloaded, x, demo.instance_id, background, &vocab, output, 2000, 99,
        demo.name + "_model.json");
    write_file((out / "shapley.json").string(), document_to_json(shap_doc));
    write_file((out / "shapley.txt").string(), render_text(shap_doc));
    BarPlot shap_plot = render_barplot(shap_doc);
    write_file((out / "shapley.svg").string(), shap_plot.svg);
    write_file((out / "shapley_data.json").string(), shap_plot.data_json);

    std::ostringstream summary;
    summary << "dataset      : " << demo.name << "\n";
    summary << "rows         : " << data.n_rows() << "\n";
    summary << "test_accuracy: " << fixed4(accuracy) << "\n";
    summary << "instance     : " << demo.instance_id << "\n";
    summary << "class        : " << demo.class_name << "\n";
    summary << "probability  : " << fixed4(prob) << "\n";
    for (const ExplanationEntry& e : infl_doc.entries)
        summary << "influence[" << e.name << "] = " << fixed4(e.influence) << "\n";
    write_file((out / "summary.txt").string(), summary.str());
    std::cout << summary.str();
    return 0;
}

const char* kTitanicVoc = R"({
  "WEALTH": [1, 6],
  "FAMILY": [4, 5],
  "Gender": [2],
  "Age": [3],
  "Embarkment port": [7]
}
)";

const char* kCarsVoc = R"({
  "PRICE": [1, 2],
  "COMFORT": [3, 4, 5],
  "TECH": ["COMFORT", 6],
  "CAR": ["PRICE", "TECH"]
}
)";

} // namespace

int run_cli(std::vector<std::string> args)
{
    CLI::App app{"ciukit: contextual importance/utility explanations over feature coalitions"};
    app.require_subcommand(1);

    // ---- train
    struct {
        std::string data, label, out;
        RfHyperparams hp;
        SplitSpec split;
    } train_opt;
    CLI::App* train = app.add_subcommand("train", "Train a random forest on a CSV dataset");
    train->add_option("--data", train_opt.data, "CSV file with a header row")->required();
    train->add_option("--label", train_opt.label, "Label column (default: last column)");
    train->add_option("--out", train_opt.out, "Model output path")->required();
    train->add_option("--trees", train_opt.hp.n_trees, "Number of trees");
    train->add_option("--max-depth", train_opt.hp.max_depth, "Maximum tree depth");
    train->add_option("--min-leaf", train_opt.hp.min_leaf, "Minimum samples per leaf");
    train->add_option("--mtry", train_opt.hp.mtry, "Features per split (0 = sqrt)");
    train->add_option("--seed", train_opt.hp.seed, "Training seed");
    train->add_option("--split-seed", train_opt.split.seed, "Train/test shuffle seed");
    train->add_option("--train-frac", train_opt.split.train_fraction, "Training fraction");

    // ---- explain / drilldown
    ExplainSettings ex;
    CLI::App* explain = app.add_subcommand("explain", "Explain one instance with CIU");
    std::string drill_concept;
    CLI::App* drill = app.add_subcommand("drilldown", "CIU of a concept's constituents");
    for (CLI::App* cmd : {explain, drill}) {
        cmd->add_option("--model", ex.model_path, "Trained model JSON")->required();
        cmd->add_option("--instance", ex.instance_spec,
                        "Named fixture, row:<k> into --data, or comma-separated values")
            ->required();
        cmd->add_option("--data", ex.data_path, "Dataset CSV (for row:<k> instances)");
        cmd->add_option("--voc", ex.voc_path, "Vocabulary file")->required();
        cmd->add_option("--class", ex.class_name, "Output class name");
        cmd->add_option("--output-index", ex.output_index, "Output index (alternative to --class)");
        cmd->add_option("--baseline", ex.baseline, "Influence baseline phi0");
        cmd->add_option("--budget", ex.budget, "Model evaluations per estimate");
        cmd->add_option("--grid-points", ex.grid_points, "Grid points per numeric feature");
        cmd->add_option("--seed", ex.seed, "Sampler seed");
        add_output_flags(cmd, ex);
    }
    explain->add_option("--method", ex.method, "ciu or influence")
        ->check(CLI::IsMember({"ciu", "influence"}));
    explain->add_option("--level", ex.level, "Abstraction level: top, features, or an integer");
    explain->add_option("--drilldown", ex.drill, "Also drill into this concept (repeatable)");
    drill->add_option("--concept", drill_concept, "Concept to drill into")->required();

    // ---- shapley
    struct {
        std::string model, instance, data, background, voc, class_name;
        int output_index = -1;
        int permutations = 2000;
        std::uint64_t seed = 99;
    } sh;
    ExplainSettings sh_out; // reuse the output flags
    CLI::App* shapley = app.add_subcommand("shapley", "Monte Carlo Shapley attribution");
    shapley->add_option("--model", sh.model, "Trained model JSON")->required();
    shapley->add_option("--instance", sh.instance, "Instance spec")->required();
    shapley->add_option("--data", sh.data, "Dataset CSV (for row:<k> instances)");
    shapley->add_option("--background", sh.background, "Background CSV (default: --data)");
    shapley->add_option("--voc", sh.voc, "Vocabulary for concept group sums");
    shapley->add_option("--class", sh.class_name, "Output class name");
    shapley->add_option("--output-index", sh.output_index, "Output index");
    shapley->add_option("--permutations", sh.permutations, "Sampled permutations");
    shapley->add_option("--seed", sh.seed, "Sampling seed");
    add_output_flags(shapley, sh_out);

    // ---- game utilities
    CLI::App* game = app.add_subcommand("game", "Cooperative-game utilities on game files");
    game->require_subcommand(1);
    struct {
        std::string in, out, payoff, players, partition, levels;
        int n = 0, k = 0;
        double tol = kWorthTolerance;
    } g;
    CLI::App* dividends = game->add_subcommand("dividends", "Print the Harsanyi dividend table");
    dividends->add_option("--in", g.in, "Game file")->required();
    CLI::App* properties = game->add_subcommand("properties", "Structural property report");
    properties->add_option("--in", g.in, "Game file")->required();
    CLI::App* check = game->add_subcommand("check", "Imputation and core membership of a payoff");
    check->add_option("--in", g.in, "Game file")->required();
    check->add_option("--payoff", g.payoff, "Comma-separated payoff vector")->required();
    check->add_option("--tol", g.tol, "Comparison tolerance");
    CLI::App* unanimity = game->add_subcommand("unanimity", "Write the unanimity game u_T");
    unanimity->add_option("--t", g.players, "1-based players of T, comma separated")->required();
    unanimity->add_option("--n", g.n, "Player count")->required();
    unanimity->add_option("--out", g.out, "Output game file")->required();
    CLI::App* induced = game->add_subcommand("induced", "Induced game on a partition");
    induced->add_option("--in", g.in, "Game file")->required();
    induced->add_option("--partition", g.partition, "JSON blocks, e.g. [[1,2],[3]]")->required();
    induced->add_option("--out", g.out, "Output game file")->required();
    CLI::App* quotient = game->add_subcommand("quotient", "Quotient of a levels structure");
    quotient->add_option("--levels", g.levels, "Levels structure JSON file")->required();
    quotient->add_option("--k", g.k, "Quotient level")->required();

    // ---- demos and data
    struct {
        std::string data_dir = "data";
        std::string out_dir;
        std::uint64_t train_seed = 1;
        std::uint64_t sampler_seed = 2020;
    } demo_opt;
    CLI::App* demo_titanic = app.add_subcommand("demo-titanic",
                                                "End-to-end run on the bundled titanic data");
    CLI::App* demo_cars = app.add_subcommand("demo-cars",
                                             "End-to-end run on the bundled cars data");
    for (CLI::App* cmd : {demo_titanic, demo_cars}) {
        cmd->add_option("--data-dir", demo_opt.data_dir, "Directory holding the CSVs");
        cmd->add_option("--out-dir", demo_opt.out_dir, "Output directory")->required();
        cmd->add_option("--train-seed", demo_opt.train_seed, "Forest training seed");
        cmd->add_option("--seed", demo_opt.sampler_seed, "Sampler seed");
    }

    struct {
        std::string out_dir = "data";
        std::uint64_t seed = 7519;
    } mk;
    CLI::App* make_data = app.add_subcommand("make-data", "Regenerate the bundled datasets");
    make_data->add_option("--out-dir", mk.out_dir, "Output directory");
    make_data->add_option("--seed", mk.seed, "Titanic generator seed");

    // Parsing: CLI11 throws for bad flags; everything else surfaces as
    // exceptions converted to exit code 1 with a diagnostic on stderr.
    // CLI11's vector overload consumes a reversed argument list.
    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*train) {
            SchemaHint hint;
            hint.label_column = train_opt.label;
            const Dataset data = load_csv(resolve_path(train_opt.data), hint);
            auto [model, accuracy] = train_random_forest(data, train_opt.hp, train_opt.split);
            model.save(train_opt.out);
            std::cout << "n_rows=" << data.n_rows() << "\n";
            std::cout << "n_classes=" << data.n_classes() << "\n";
            std::cout << "test_accuracy=" << fixed4(accuracy) << "\n";
            return 0;
        }

        if (*explain || *drill) {
            const RandomForest model = RandomForest::load(resolve_path(ex.model_path));
            std::unique_ptr<Dataset> data;
            if (!ex.data_path.empty())
                data = std::make_unique<Dataset>(load_csv(resolve_path(ex.data_path)));
            const Instance x = parse_instance_spec(ex.instance_spec, model.schema(), data.get());
            const Vocabulary vocab =
                parse_vocabulary(resolve_path(ex.voc_path), model.schema().size());
            const int output = resolve_output(model, ex, x);

            if (*drill) {
                CiuConfig cfg;
                cfg.sampler.budget = ex.budget;
                cfg.sampler.grid_points = ex.grid_points;
                cfg.sampler.seed = ex.seed;
                cfg.baseline = ex.baseline;

                ExplanationDocument doc;
                doc.method = "ciu";
                doc.model_id = fs::path(ex.model_path).filename().string();
                doc.instance_id = ex.instance_spec;
                doc.instance_description = describe_instance(model.schema(), x);
                doc.output_index = output;
                doc.output_name = model.output_names()[static_cast<std::size_t>(output)];
                doc.output_value = model.predict(x)[static_cast<std::size_t>(output)];
                doc.baseline = ex.baseline;
                doc.level = "drilldown:" + drill_concept;
                for (const CiuResult& r : drilldown(model, x, vocab, drill_concept, output, cfg))
                    doc.entries.push_back(entry_from_result(r));
                emit_document(doc, ex);
                return 0;
            }

            const ExplanationDocument doc =
                build_ciu_document(model, x, ex.instance_spec, vocab, output, ex);
            emit_document(doc, ex);
            return 0;
        }

        if (*shapley) {
            const RandomForest model = RandomForest::load(resolve_path(sh.model));
            std::unique_ptr<Dataset> data;
            if (!sh.data.empty())
                data = std::make_unique<Dataset>(load_csv(resolve_path(sh.data)));
            const Instance x = parse_instance_spec(sh.instance, model.schema(), data.get());

            BackgroundSet background;
            if (!sh.background.empty() || data) {
                const Dataset bg = !sh.background.empty()
                    ? load_csv(resolve_path(sh.background))
                    : *data;
                background.rows = bg.rows;
            } else {
                throw std::runtime_error("shapley needs --background or --data");
            }

            std::unique_ptr<Vocabulary> vocab;
            if (!sh.voc.empty())
                vocab = std::make_unique<Vocabulary>(
                    parse_vocabulary(resolve_path(sh.voc), model.schema().size()));

            ExplainSettings resolve;
            resolve.class_name = sh.class_name;
            resolve.output_index = sh.output_index;
            const int output = resolve_output(model, resolve, x);
            const ExplanationDocument doc = build_shapley_document(
                model, x, sh.instance, background, vocab.get(), output, sh.permutations,
                sh.seed, sh.model);
            emit_document(doc, sh_out);
            return 0;
        }

        if (*game) {
            if (*dividends) {
                const Game loaded = load_game(resolve_path(g.in));
                const DividendTable table = harsanyi_dividends(loaded);
                char hex[16];
                for (Mask m = 1; m < (Mask{1} << loaded.n_players()); ++m) {
                    std::snprintf(hex, sizeof(hex), "0x%x", m);
                    std::cout << hex << " " << format_double(table.dividends[m]) << "\n";
                }
            } else if (*properties) {
                const Game loaded = load_game(resolve_path(g.in));
                const PropertyReport r = game_properties(loaded);
                const AxiomReport a = check_value_axioms(loaded);
                std::cout << "monotonic=" << (r.monotonic ? "true" : "false") << "\n"
                          << "zero_monotonic=" << (r.zero_monotonic ? "true" : "false") << "\n"
                          << "superadditive=" << (r.superadditive ? "true" : "false") << "\n"
                          << "convex=" << (r.convex ? "true" : "false") << "\n"
                          << "nonnegative=" << (r.nonnegative ? "true" : "false") << "\n"
                          << "efficiency_sum=" << (a.efficiency_sum ? "true" : "false") << "\n"
                          << "additivity=" << (a.additivity ? "true" : "false") << "\n";
            } else if (*check) {
                const Game loaded = load_game(resolve_path(g.in));
                const PayoffVector x = parse_doubles(g.payoff);
                const bool imputation = is_imputation(loaded, x, g.tol);
                const bool core = in_core(loaded, x, g.tol);
                std::cout << "imputation=" << (imputation ? "true" : "false") << "\n"
                          << "core=" << (core ? "true" : "false") << "\n";
            } else if (*unanimity) {
                const Coalition t = Coalition::of(parse_players_1based(g.players));
                save_game(unanimity_game(t, g.n), g.out);
                std::cout << "wrote " << g.out << "\n";
            } else if (*induced) {
                const Game loaded = load_game(resolve_path(g.in));
                const nlohmann::json jp = nlohmann::json::parse(g.partition);
                Partition partition;
                for (const auto& jb : jp) {
                    std::vector<int> members;
                    for (const auto& p : jb)
                        members.push_back(p.get<int>() - 1);
                    partition.push_back(Coalition::of(members));
                }
                save_game(induced_game(loaded, partition), g.out);
                std::cout << "wrote " << g.out << "\n";
            } else if (*quotient) {
                std::ifstream in(resolve_path(g.levels), std::ios::binary);
                if (!in)
                    throw std::runtime_error("cannot open " + g.levels);
                std::ostringstream buf;
                buf << in.rdbuf();
                const LevelsStructure ls = levels_from_json(buf.str());
                const QuotientLevels q = quotient_levels(ls, g.k);
                nlohmann::json out = nlohmann::json::array();
                for (const auto& level : q.nested()) {
                    nlohmann::json jl = nlohmann::json::array();
                    for (const auto& group : level) {
                        nlohmann::json jg = nlohmann::json::array();
                        for (const Coalition& block : group) {
                            nlohmann::json jb = nlohmann::json::array();
                            for (int p : block.members())
                                jb.push_back(p + 1);
                            jg.push_back(std::move(jb));
                        }
                        jl.push_back(std::move(jg));
                    }
                    out.push_back(std::move(jl));
                }
                std::cout << out.dump(2) << "\n";
            }
            return 0;
        }

        if (*demo_titanic) {
            DemoSpec demo;
            demo.name = "titanic";
            demo.instance_id = "johnny_d";
            demo.class_name = "survived";
            demo.drill = {"FAMILY", "WEALTH"};
            demo.voc_json = kTitanicVoc;
            return run_demo(demo, demo_opt.data_dir, demo_opt.out_dir, demo_opt.train_seed,
                            demo_opt.sampler_seed);
        }
        if (*demo_cars) {
            DemoSpec demo;
            demo.name = "cars";
            demo.instance_id = "row:1098";
            demo.class_name = "vgood";
            demo.drill = {"PRICE", "TECH", "COMFORT"};
            demo.voc_json = kCarsVoc;
            return run_demo(demo, demo_opt.data_dir, demo_opt.out_dir, demo_opt.train_seed,
                            demo_opt.sampler_seed);
        }
        if (*make_data) {
            fs::create_directories(mk.out_dir);
            const fs::path out(mk.out_dir);
            write_csv(make_titanic_dataset(mk.seed), (out / "titanic.csv").string());
            write_csv(make_cars_dataset(), (out / "cars.csv").string());
            write_file((out / "titanic.voc").string(), kTitanicVoc);
            write_file((out / "cars.voc").string(), kCarsVoc);
            std::cout << "wrote titanic.csv cars.csv titanic.voc cars.voc under " << mk.out_dir
                      << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace ciu
