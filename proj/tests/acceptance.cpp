// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Heavier end-to-end checks live here rather than in the unit
// suites; the bundled datasets are located via CIUKIT_DATA_DIR.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ciu/ciu.hpp"
#include "ciu/cli.hpp"
#include "ciu/csv.hpp"
#include "ciu/datasets.hpp"
#include "ciu/random_forest.hpp"
#include "ciu/rng.hpp"
#include "ciu/shapley.hpp"

using namespace ciu;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, bool ok, const std::string& detail = "")
{
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                detail.empty() ? "" : " - ", detail.c_str());
    if (!ok)
        ++failures;
}

std::string data_dir()
{
    if (const char* env = std::getenv("CIUKIT_DATA_DIR"))
        return env;
    return "data";
}

FeatureSchema unit_schema(int n)
{
    std::vector<Feature> features;
    for (int i = 0; i < n; ++i)
        features.push_back(Feature{"x" + std::to_string(i + 1), FeatureKind::Numeric,
                                   0.0, 1.0, {}});
    return FeatureSchema(std::move(features));
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- 1: dividend round trip -------------------------------------------

void criterion_dividend_round_trip()
{
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(101);
    bool ok = true;
    for (int rep = 0; rep < 200 && ok; ++rep) {
        const int n = 2 + static_cast<int>(rng.bounded(7)); // 2..8
        const Game g = Game::from_fn(n, [&](Coalition) { return rng.uniform(-5.0, 5.0); });
        const Game back = reconstruct_from_dividends(harsanyi_dividends(g));
        for (Mask m = 0; m < (Mask{1} << n); ++m)
            if (std::fabs(back.table()[m] - g.table()[m]) > 1e-9)
                ok = false;
    }
    const double elapsed = seconds_since(t0);
    char detail[96];
    std::snprintf(detail, sizeof(detail), "200 games, %.3f s", elapsed);
    criterion(1, "dividend round trip within 1e-9", ok && elapsed < 5.0, detail);
}

// ---- 2: unanimity basis ------------------------------------------------

void criterion_unanimity_basis()
{
    bool ok = true;
    for (int n = 1; n <= 6 && ok; ++n)
        for (Mask t = 1; t < (Mask{1} << n) && ok; ++t) {
            const DividendTable d = harsanyi_dividends(unanimity_game(Coalition(t), n));
            for (Mask s = 1; s < (Mask{1} << n); ++s)
                if (d.dividends[s] != (s == t ? 1.0 : 0.0))
                    ok = false;
        }
    criterion(2, "unanimity dividends are the exact indicator, n <= 6", ok);
}

// ---- 3: the printed quotient structure ---------------------------------

void criterion_quotient_example()
{
    const LevelsStructure ls = LevelsStructure::validate({
        singleton_partition(6),
        {Coalition::of({0, 1}), Coalition::of({2, 3}), Coalition::of({4, 5})},
        {Coalition::of({0, 1, 2, 3}), Coalition::of({4, 5})},
        {Coalition::all(6)},
    });
    const auto nested = quotient_levels(ls, 1).nested();

    using Blocks = std::vector<Coalition>;
    const std::vector<std::vector<Blocks>> expected = {
        {{Coalition::of({0, 1})}, {Coalition::of({2, 3})}, {Coalition::of({4, 5})}},
        {{Coalition::of({0, 1}), Coalition::of({2, 3})}, {Coalition::of({4, 5})}},
        {{Coalition::of({0, 1}), Coalition::of({2, 3}), Coalition::of({4, 5})}},
    };
    criterion(3, "six-player quotient at k=1 matches the printed structure", nested == expected);
}

// ---- 4: linear CI oracle ------------------------------------------------

void criterion_linear_ci_oracle()
{
    Rng rng(700);
    bool ok = true;
    for (int rep = 0; rep < 50 && ok; ++rep) {
        const int n = 2 + static_cast<int>(rng.bounded(5)); // 2..6
        std::vector<double> w(static_cast<std::size_t>(n));
        for (double& wi : w)
            wi = rng.uniform(0.05, 2.0);
        const LinearModel m = LinearModel::with_unit_utilities(unit_schema(n), 0.0, w);

        IndexSet target;
        for (int i = 0; i < n; ++i)
            if (rng.uniform() < 0.8)
                target.push_back(i);
        if (target.empty())
            target.push_back(0);
        IndexSet s;
        for (int i : target)
            if (rng.uniform() < 0.5)
                s.push_back(i);
        if (s.empty())
            s.push_back(target.front());

        CiuConfig cfg;
        cfg.sampler.grid_points = 3; // corners included: exact for linear models
        cfg.sampler.budget = 1000;
        const double expected = linear_joint_importance(w, s, target);

        double first = -1.0;
        for (int k = 0; k < 20 && ok; ++k) {
            Instance x;
            for (int i = 0; i < n; ++i)
                x.values.push_back(rng.uniform());
            const double ci = contextual_importance(m, x, s, target, 0, cfg);
            if (std::fabs(ci - expected) > 1e-6)
                ok = false;
            if (first < 0.0)
                first = ci;
            else if (std::fabs(ci - first) > 1e-6)
                ok = false;
        }
    }
    criterion(4, "exhaustive-grid CI equals the linear weight ratio, instance-independent", ok);
}

// ---- 5: normalization ---------------------------------------------------

void criterion_normalization()
{
    Rng rng(900);
    bool ok = true;
    for (int rep = 0; rep < 1000 && ok; ++rep) {
        const int n = 2 + static_cast<int>(rng.bounded(4));
        const int family = rep % 3;
        std::vector<double> w(static_cast<std::size_t>(n));
        for (double& wi : w)
            wi = rng.uniform(0.1, 1.0);

        std::unique_ptr<Predictor> model;
        if (family == 0) {
            model = std::make_unique<LinearModel>(
                LinearModel::with_unit_utilities(unit_schema(n), 0.0, w));
        } else if (family == 1) {
            model = std::make_unique<CallablePredictor>(
                unit_schema(n), std::vector<std::string>{"y"}, [w, n](const Instance& x) {
                    double y = 0.0;
                    for (int i = 0; i < n; ++i)
                        y += w[static_cast<std::size_t>(i)] * x[i] * x[i];
                    return std::vector<double>{y};
                });
        } else {
            model = std::make_unique<CallablePredictor>(
                unit_schema(n), std::vector<std::string>{"y"}, [w, n](const Instance& x) {
                    double y = 1.0;
                    for (int i = 0; i < n; ++i)
                        y *= 0.5 + w[static_cast<std::size_t>(i)] * x[i];
                    return std::vector<double>{y};
                });
        }

        IndexSet target;
        for (int i = 0; i < n; ++i)
            if (rng.uniform() < 0.6)
                target.push_back(i);
        if (target.empty())
            target.push_back(static_cast<int>(rng.bounded(static_cast<std::uint32_t>(n))));

        Instance x;
        for (int i = 0; i < n; ++i)
            x.values.push_back(rng.uniform());

        CiuConfig cfg;
        cfg.sampler.budget = 200;
        cfg.sampler.seed = rng.next_u64();
        if (contextual_importance(*model, x, target, target, 0, cfg) != 1.0)
            ok = false;
    }
    criterion(5, "CI(s = target) is exactly 1 over 1000 randomized triples", ok);
}

// ---- 6: XOR non-additivity ----------------------------------------------

void criterion_xor_witness()
{
    FeatureSchema schema({Feature{"b1", FeatureKind::Categorical, 0, 1, {"0", "1"}},
                          Feature{"b2", FeatureKind::Categorical, 0, 1, {"0", "1"}}});
    const CallablePredictor m(schema, {"y"}, [](const Instance& x) {
        return std::vector<double>{static_cast<double>((x[0] != 0.0) != (x[1] != 0.0))};
    });
    const Instance x{{1.0, 1.0}};

    // Brute-force oracle over the four corners.
    const auto corner_range = [&](bool vary0, bool vary1) {
        double lo = 1e300, hi = -1e300;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                if (!vary0 && a != 1) continue;
                if (!vary1 && b != 1) continue;
                const double y = m.predict(Instance{{1.0 * a, 1.0 * b}})[0];
                lo = std::min(lo, y);
                hi = std::max(hi, y);
            }
        return hi - lo;
    };
    const double oracle_c0 = corner_range(true, false) / corner_range(true, true);
    const double oracle_c1 = corner_range(false, true) / corner_range(true, true);
    const double oracle_c01 = 1.0;

    const double c0 = contextual_importance(m, x, {0}, {0, 1}, 0);
    const double c1 = contextual_importance(m, x, {1}, {0, 1}, 0);
    const double c01 = contextual_importance(m, x, {0, 1}, {0, 1}, 0);

    const bool engine_matches_oracle = std::fabs(c0 - oracle_c0) < 1e-12
                                       && std::fabs(c1 - oracle_c1) < 1e-12
                                       && std::fabs(c01 - oracle_c01) < 1e-12;
    const double margin = std::fabs(c01 - (c0 + c1));
    char detail[96];
    std::snprintf(detail, sizeof(detail), "|CI(union) - sum| = %.3f", margin);
    criterion(6, "XOR witness: coalition CI is not the sum of its parts",
              engine_matches_oracle && margin > 0.1, detail);
}

// ---- 7..10: the two experiments -----------------------------------------

struct ExperimentState {
    bool influence_identity_ok = true;
    long results_seen = 0;

    void absorb(const std::vector<CiuResult>& results)
    {
        for (const CiuResult& r : results) {
            ++results_seen;
            if (r.influence != r.ci * (r.cu - r.baseline))
                influence_identity_ok = false;
            if (r.ci < 0.0 || r.ci > 1.0 || r.cu < 0.0 || r.cu > 1.0)
                influence_identity_ok = false;
        }
    }
};

void run_experiments()
{
    ExperimentState state;

    // Titanic: accuracy band and the johnny_d explanation shape.
    {
        const auto t0 = std::chrono::steady_clock::now();
        const Dataset data = load_csv((fs::path(data_dir()) / "titanic.csv").string());
        auto [model, accuracy] = train_random_forest(data); // defaults: seeded split
        const double train_seconds = seconds_since(t0);
        char detail[96];
        std::snprintf(detail, sizeof(detail), "accuracy %.4f, %.1f s", accuracy, train_seconds);
        criterion(8, "titanic forest accuracy in [0.77, 0.85], under 60 s",
                  accuracy >= 0.77 && accuracy <= 0.85 && train_seconds < 60.0, detail);

        const Vocabulary vocab =
            parse_vocabulary((fs::path(data_dir()) / "titanic.voc").string(), data.schema.size());
        const Instance johnny = johnny_d_instance(data.schema);
        const int survived = model.output_index("survived");
        const double prob = model.predict(johnny)[static_cast<std::size_t>(survived)];

        CiuConfig cfg; // defaults: budget 10000, grid 21, baseline 0.5
        const auto results = explain_instance(model, johnny, vocab, survived, cfg);
        state.absorb(results);

        bool shape_ok = results.size() == 5;
        double phi_family = 1e9, phi_wealth = 1e9;
        for (const CiuResult& r : results) {
            if (r.ci < 0.0 || r.ci > 1.0 || r.cu < 0.0 || r.cu > 1.0)
                shape_ok = false;
            if (r.concept_name == "FAMILY")
                phi_family = r.influence;
            if (r.concept_name == "WEALTH")
                phi_wealth = r.influence;
        }
        const bool bands_ok = prob >= 0.50 && prob <= 0.75
                              && phi_family >= -0.15 && phi_family <= 0.20
                              && phi_wealth >= -0.15 && phi_wealth <= 0.20;
        std::snprintf(detail, sizeof(detail), "p=%.4f phi_FAMILY=%.4f phi_WEALTH=%.4f",
                      prob, phi_family, phi_wealth);
        criterion(9, "johnny_d probability and five-concept explanation in band",
                  shape_ok && bands_ok, detail);

        state.absorb(drilldown(model, johnny, vocab, "FAMILY", survived, cfg));
        state.absorb(drilldown(model, johnny, vocab, "WEALTH", survived, cfg));
    }

    // Cars: classification of #1098 and the vocabulary structure.
    {
        const Dataset data = load_csv((fs::path(data_dir()) / "cars.csv").string());
        auto [model, accuracy] = train_random_forest(data);
        const Vocabulary vocab =
            parse_vocabulary((fs::path(data_dir()) / "cars.voc").string(), data.schema.size());
        const Instance& x = data.rows[1097]; // 1-based row 1098

        const std::vector<double> probs = model.predict(x);
        int argmax = 0;
        for (std::size_t k = 1; k < probs.size(); ++k)
            if (probs[k] > probs[static_cast<std::size_t>(argmax)])
                argmax = static_cast<int>(k);
        const bool classified_vgood = data.label_names[static_cast<std::size_t>(argmax)] == "vgood";

        const int vgood = model.output_index("vgood");
        CiuConfig cfg;
        const auto top = explain_instance(model, x, vocab, vgood, cfg);
        state.absorb(top);
        std::set<std::string> top_names;
        for (const CiuResult& r : top)
            top_names.insert(r.concept_name);
        const bool top_ok = top_names == std::set<std::string>{"PRICE", "TECH"};

        const auto tech = drilldown(model, x, vocab, "TECH", vgood, cfg);
        state.absorb(tech);
        std::set<std::string> tech_names;
        for (const CiuResult& r : tech)
            tech_names.insert(r.concept_name);
        const bool tech_ok = tech_names == std::set<std::string>{"COMFORT", "safety"};

        char detail[128];
        std::snprintf(detail, sizeof(detail), "P(vgood)=%.4f, top={PRICE,TECH}:%s, drill:%s",
                      probs[static_cast<std::size_t>(vgood)], top_ok ? "yes" : "no",
                      tech_ok ? "yes" : "no");
        criterion(10, "cars #1098 classified vgood with the expected concept structure",
                  classified_vgood && top_ok && tech_ok && accuracy > 0.9, detail);
    }

    // A linear sweep feeds the corpus too.
    {
        Rng rng(41);
        const Vocabulary vocab = parse_vocabulary_text(R"({"A": [1, 2], "B": [3]})", 3);
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<double> w = {rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0),
                                     rng.uniform(0.1, 1.0)};
            const LinearModel m = LinearModel::with_unit_utilities(unit_schema(3), 0.0, w);
            Instance x{{rng.uniform(), rng.uniform(), rng.uniform()}};
            CiuConfig cfg;
            cfg.baseline = rng.uniform();
            state.absorb(explain_instance(m, x, vocab, 0, cfg));
        }
    }

    char detail[64];
    std::snprintf(detail, sizeof(detail), "%ld results checked", state.results_seen);
    criterion(7, "influence identity phi = CI*(CU - phi0) exact on every emitted result",
              state.influence_identity_ok && state.results_seen > 0, detail);
}

// ---- 11: shapley efficiency and Monte Carlo agreement -------------------

void criterion_shapley()
{
    Rng rng(1300);
    bool efficiency_ok = true;
    for (int rep = 0; rep < 200 && efficiency_ok; ++rep) {
        const int n = 2 + static_cast<int>(rng.bounded(7)); // 2..8
        const Game g = Game::from_fn(n, [&](Coalition) { return rng.uniform(-3.0, 3.0); });
        const PayoffVector phi = exact_shapley_game(g);
        double total = 0.0;
        for (double p : phi)
            total += p;
        if (std::fabs(total - g.worth(g.grand())) > 1e-9)
            efficiency_ok = false;
    }

    bool mc_ok = true;
    for (int rep = 0; rep < 5 && mc_ok; ++rep) {
        const int n = 3 + static_cast<int>(rng.bounded(3));
        std::vector<double> w(static_cast<std::size_t>(n));
        for (double& wi : w)
            wi = rng.uniform(-1.0, 1.0);
        FeatureSchema schema = unit_schema(n);
        const CallablePredictor m(schema, {"y"}, [w, n](const Instance& x) {
            double y = 0.0;
            for (int i = 0; i < n; ++i)
                y += w[static_cast<std::size_t>(i)] * x[i];
            return std::vector<double>{y};
        });
        BackgroundSet bg;
        for (int r = 0; r < 40; ++r) {
            Instance row;
            for (int i = 0; i < n; ++i)
                row.values.push_back(rng.uniform());
            bg.rows.push_back(std::move(row));
        }
        Instance x;
        for (int i = 0; i < n; ++i)
            x.values.push_back(rng.uniform());

        const MonteCarloShapley mc = monte_carlo_shapley(m, x, bg, 0, 2000, rng.next_u64());
        const std::vector<double> exact = linear_shapley(w, x, bg);
        for (int i = 0; i < n; ++i) {
            const double tol = std::max(3.0 * mc.stderrs[static_cast<std::size_t>(i)], 1e-9);
            if (std::fabs(mc.attributions[static_cast<std::size_t>(i)]
                          - exact[static_cast<std::size_t>(i)]) > tol)
                mc_ok = false;
        }
    }
    criterion(11, "shapley efficiency within 1e-9; Monte Carlo within 3 stderr of closed form",
              efficiency_ok && mc_ok);
}

// ---- 12: byte-identical demo runs ---------------------------------------

bool dirs_byte_identical(const fs::path& a, const fs::path& b, std::string& why)
{
    std::set<std::string> names_a, names_b;
    for (const auto& entry : fs::directory_iterator(a))
        names_a.insert(entry.path().filename().string());
    for (const auto& entry : fs::directory_iterator(b))
        names_b.insert(entry.path().filename().string());
    if (names_a != names_b) {
        why = "differing file sets";
        return false;
    }
    for (const std::string& name : names_a) {
        std::ifstream fa(a / name, std::ios::binary);
        std::ifstream fb(b / name, std::ios::binary);
        std::ostringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        if (sa.str() != sb.str()) {
            why = "bytes differ in " + name;
            return false;
        }
    }
    return true;
}

void criterion_demo_goldens()
{
    const fs::path base = fs::temp_directory_path() / "ciukit_acceptance";
    fs::remove_all(base);
    fs::create_directories(base);

    bool ok = true;
    std::string why;
    for (const std::string demo : {"demo-titanic", "demo-cars"}) {
        const fs::path run1 = base / (demo + "_1");
        const fs::path run2 = base / (demo + "_2");
        const int rc1 = run_cli({demo, "--data-dir", data_dir(), "--out-dir", run1.string()});
        const int rc2 = run_cli({demo, "--data-dir", data_dir(), "--out-dir", run2.string()});
        if (rc1 != 0 || rc2 != 0) {
            ok = false;
            why = demo + " exited nonzero";
            break;
        }
        if (!dirs_byte_identical(run1, run2, why)) {
            ok = false;
            why = demo + ": " + why;
            break;
        }
    }
    criterion(12, "demo-titanic and demo-cars runs are byte-identical", ok, why);
}

} // namespace

int main()
{
    std::printf("ciukit acceptance suite (data dir: %s)\n", data_dir().c_str());
    criterion_dividend_round_trip();
    criterion_unanimity_basis();
    criterion_quotient_example();
    criterion_linear_ci_oracle();
    criterion_normalization();
    criterion_xor_witness();
    run_experiments(); // criteria 7..10
    criterion_shapley();
    criterion_demo_goldens();

    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
