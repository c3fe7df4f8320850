#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ciu/csv.hpp"
#include "ciu/datasets.hpp"
#include "ciu/predictor.hpp"
#include "ciu/random_forest.hpp"
#include "ciu/rng.hpp"

using namespace ciu;

namespace {

Dataset tiny_separable(int n_rows)
{
    // One numeric feature; label flips at 0.5 with a clean margin.
    Dataset d;
    d.label_column = "y";
    d.label_names = {"lo", "hi"};
    d.schema = FeatureSchema({Feature{"x", FeatureKind::Numeric, 0.0, 1.0, {}}});
    Rng rng(5);
    for (int i = 0; i < n_rows; ++i) {
        const double v = rng.uniform();
        d.rows.push_back(Instance{{v}});
        d.labels.push_back(v > 0.5 ? 1 : 0);
    }
    return d;
}

} // namespace

TEST_CASE("csv parsing and schema inference")
{
    const std::string text =
        "name,score,\"band, quoted\",grade\n"
        "alice,1.5,x,good\n"
        "bob,2.5,y,bad\n"
        "carl,NA,x,good\n"
        "dave,3.5,,bad\n"
        ",4.5,y,\n"; // missing label: dropped
    const Dataset d = parse_csv(text);
    CHECK(d.n_rows() == 4);
    CHECK(d.label_column == "grade");
    CHECK(d.label_names == std::vector<std::string>{"good", "bad"});
    CHECK(d.schema.size() == 3);
    CHECK(d.schema.at(0).kind == FeatureKind::Categorical); // names
    CHECK(d.schema.at(1).kind == FeatureKind::Numeric);
    CHECK(d.schema.at(1).name == "score");
    CHECK(d.schema.at(2).name == "band, quoted");
    // NA score was median-imputed: values 1.5, 2.5, 3.5 -> median 2.5.
    CHECK(d.rows[2][1] == doctest::Approx(2.5));
    // Missing categorical became its own level.
    CHECK(d.schema.at(2).level_index("missing") >= 0);
}

TEST_CASE("csv error paths")
{
    CHECK_THROWS(parse_csv(""));
    CHECK_THROWS(parse_csv("a,b\n1,2,3\n")); // ragged row
    CHECK_THROWS(load_csv("/nonexistent/file.csv"));
    SchemaHint hint;
    hint.label_column = "nope";
    CHECK_THROWS(parse_csv("a,b\n1,2\n", hint));
}

TEST_CASE("single-column csv")
{
    const Dataset d = parse_csv("v,label\n3.5,a\n4.5,b\n");
    CHECK(d.schema.size() == 1);
    CHECK(d.schema.at(0).kind == FeatureKind::Numeric);

    // A single data row still infers a one-feature numeric schema.
    const Dataset one = parse_csv("v,label\n3.5,a\n");
    CHECK(one.n_rows() == 1);
    CHECK(one.schema.size() == 1);
    CHECK(one.schema.at(0).kind == FeatureKind::Numeric);
}

TEST_CASE("schema hints")
{
    SchemaHint hint;
    hint.force_categorical = {"code"};
    hint.numeric_range["v"] = {0.0, 10.0};
    const Dataset d = parse_csv("code,v,label\n1,3.5,a\n2,4.5,b\n", hint);
    CHECK(d.schema.at(0).kind == FeatureKind::Categorical);
    CHECK(d.schema.at(1).lo == 0.0);
    CHECK(d.schema.at(1).hi == 10.0);
}

TEST_CASE("linear model evaluation")
{
    FeatureSchema schema({Feature{"a", FeatureKind::Numeric, 0.0, 1.0, {}},
                          Feature{"b", FeatureKind::Numeric, 0.0, 1.0, {}}});

    SUBCASE("max utilities reach the weight sum")
    {
        const LinearModel m = LinearModel::with_unit_utilities(schema, 0.0, {0.5, 0.5});
        CHECK(m.predict(Instance{{1.0, 1.0}})[0] == doctest::Approx(1.0));
    }
    SUBCASE("weighted mix")
    {
        const LinearModel m = LinearModel::with_unit_utilities(schema, 0.0, {0.3, 0.7});
        CHECK(m.predict(Instance{{0.0, 1.0}})[0] == doctest::Approx(0.7));
    }
    SUBCASE("weights summing to one keep predictions in [0,1] over the domain")
    {
        const LinearModel m = LinearModel::with_unit_utilities(schema, 0.0, {0.25, 0.75});
        Rng rng(2);
        for (int rep = 0; rep < 500; ++rep) {
            const double y = m.predict(Instance{{rng.uniform(), rng.uniform()}})[0];
            CHECK(y >= 0.0);
            CHECK(y <= 1.0);
        }
    }
    SUBCASE("arity mismatch is rejected")
    {
        CHECK_THROWS_AS(LinearModel::with_unit_utilities(schema, 0.0, {1.0}),
                        std::invalid_argument);
    }
}

TEST_CASE("random forest on separable data")
{
    const Dataset d = tiny_separable(400);
    auto [rf, accuracy] = train_random_forest(d, RfHyperparams{50, 8, 2, 0, 3});
    CHECK(accuracy == doctest::Approx(1.0));
    const std::vector<double> p = rf.predict(Instance{{0.9}});
    CHECK(p[1] > 0.9);
    CHECK(p[0] + p[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("random forest training is reproducible for a fixed seed")
{
    const Dataset d = make_cars_dataset();
    RfHyperparams hp;
    hp.n_trees = 30;
    hp.seed = 9;
    auto [a, acc_a] = train_random_forest(d, hp);
    auto [b, acc_b] = train_random_forest(d, hp);
    CHECK(acc_a == acc_b);
    CHECK(a.to_json() == b.to_json());

    hp.seed = 10;
    auto [c, acc_c] = train_random_forest(d, hp);
    CHECK(a.to_json() != c.to_json());
}

TEST_CASE("random forest persistence round trip reproduces predictions")
{
    const Dataset d = make_cars_dataset();
    RfHyperparams hp;
    hp.n_trees = 20;
    hp.seed = 4;
    auto [rf, accuracy] = train_random_forest(d, hp);

    const std::string path = (std::filesystem::temp_directory_path()
                              / "ciukit_rf_roundtrip.json").string();
    rf.save(path);
    const RandomForest back = RandomForest::load(path);
    std::remove(path.c_str());

    Rng rng(6);
    for (int rep = 0; rep < 50; ++rep) {
        const Instance& x = d.rows[rng.bounded(static_cast<std::uint32_t>(d.n_rows()))];
        CHECK(rf.predict(x) == back.predict(x)); // bit-exact
    }
}

TEST_CASE("degenerate training sets are rejected")
{
    Dataset d = tiny_separable(50);
    for (int& l : d.labels)
        l = 0; // one class only
    CHECK_THROWS_AS(train_random_forest(d), std::invalid_argument);
    Dataset empty;
    CHECK_THROWS_AS(train_random_forest(empty), std::invalid_argument);
}

TEST_CASE("bundled datasets")
{
    SUBCASE("titanic shape and fixture")
    {
        const Dataset d = make_titanic_dataset();
        CHECK(d.n_rows() == 2207);
        CHECK(d.schema.size() == 7);
        CHECK(d.schema.at(0).name == "class");
        CHECK(d.schema.at(5).name == "fare");
        const Instance x = johnny_d_instance(d.schema);
        CHECK(d.schema.at(0).levels[static_cast<std::size_t>(x[0])] == "1st");
        CHECK(x[2] == 8.0);
        CHECK(x[5] == 72.0);
        CHECK_THROWS(named_instance("nobody", d.schema));
    }
    SUBCASE("cars is the full lexicographic product with vgood at row 1098")
    {
        const Dataset d = make_cars_dataset();
        CHECK(d.n_rows() == 1728);
        CHECK(d.label_names == std::vector<std::string>{"unacc", "acc", "good", "vgood"});
        // 1-based row 1098 is (med, med, 2, 4, big, high).
        const Instance& x = d.rows[1097];
        CHECK(d.schema.at(0).levels[static_cast<std::size_t>(x[0])] == "med");
        CHECK(d.schema.at(2).levels[static_cast<std::size_t>(x[2])] == "2");
        CHECK(d.schema.at(5).levels[static_cast<std::size_t>(x[5])] == "high");
        CHECK(d.label_names[static_cast<std::size_t>(d.labels[1097])] == "vgood");
        // Hard gates: two-seaters and low safety are never acceptable.
        for (int r = 0; r < d.n_rows(); ++r) {
            const Instance& row = d.rows[static_cast<std::size_t>(r)];
            if (d.schema.at(3).levels[static_cast<std::size_t>(row[3])] == "2"
                || d.schema.at(5).levels[static_cast<std::size_t>(row[5])] == "low")
                CHECK(d.labels[static_cast<std::size_t>(r)] == 0);
        }
    }
}
