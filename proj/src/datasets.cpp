#include "ciu/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ciu/rng.hpp"

namespace ciu {

namespace {

double sigmoid(double z)
{
    return 1.0 / (1.0 + std::exp(-z));
}

int pick(Rng& rng, const std::vector<double>& probs)
{
    double u = rng.uniform();
    for (std::size_t k = 0; k < probs.size(); ++k) {
        if (u < probs[k])
            return static_cast<int>(k);
        u -= probs[k];
    }
    return static_cast<int>(probs.size()) - 1;
}

struct TitanicRow {
    int klass;
    int gender; // 0 male, 1 female
    double age;
    bool age_missing;
    int sibsp;
    int parch;
    double fare;
    int embarked;
    int survived;
};

} // namespace

Dataset make_titanic_dataset(std::uint64_t seed)
{
    const std::vector<std::string> classes = {"1st", "2nd", "3rd", "deck crew",
                                              "engineering crew", "restaurant staff",
                                              "victualling crew"};
    const std::vector<int> class_counts = {324, 284, 709, 66, 324, 69, 431};
    const std::vector<std::string> ports = {"Southampton", "Cherbourg", "Queenstown", "Belfast"};

    const std::vector<double> female_prob = {0.44, 0.37, 0.28, 0.02, 0.01, 0.25, 0.05};
    const std::vector<double> class_effect = {1.4, 0.7, 0.0, 0.55, 0.1, -0.7, 0.0};

    Rng rng(seed);
    std::vector<TitanicRow> rows;
    rows.reserve(2207);

    for (std::size_t c = 0; c < classes.size(); ++c) {
        const bool crew = c >= 3;
        for (int k = 0; k < class_counts[c]; ++k) {
            TitanicRow row{};
            row.klass = static_cast<int>(c);
            row.gender = rng.uniform() < female_prob[c] ? 1 : 0;

            if (crew) {
                row.age = std::clamp(std::round(30.0 + 8.0 * rng.normal()), 18.0, 65.0);
            } else {
                const double child_prob = c == 0 ? 0.08 : 0.12;
                if (rng.uniform() < child_prob)
                    row.age = std::clamp(std::round(rng.uniform(1.0, 12.0)), 1.0, 12.0);
                else {
                    const double mean = c == 0 ? 39.0 : (c == 1 ? 29.0 : 25.0);
                    row.age = std::clamp(std::round(mean + 13.0 * rng.normal()), 13.0, 80.0);
                }
            }

            const bool child = row.age <= 16.0;
            if (crew) {
                row.sibsp = 0;
                row.parch = 0;
            } else if (child) {
                row.sibsp = pick(rng, {0.35, 0.35, 0.15, 0.10, 0.05});
                row.parch = pick(rng, {0.25, 0.35, 0.35, 0.05});
            } else {
                row.sibsp = pick(rng, {0.55, 0.35, 0.07, 0.03});
                row.parch = pick(rng, {0.60, 0.18, 0.16, 0.06});
            }

            if (crew)
                row.fare = 0.0;
            else if (c == 0)
                row.fare = std::clamp(30.0 + 45.0 * std::fabs(rng.normal()), 26.0, 300.0);
            else if (c == 1)
                row.fare = std::clamp(10.0 + 8.0 * std::fabs(rng.normal()), 10.0, 75.0);
            else
                row.fare = std::clamp(3.0 + 6.0 * std::fabs(rng.normal()), 3.0, 56.0);
            row.fare = std::round(row.fare * 100.0) / 100.0;

            row.embarked = crew ? (rng.uniform() < 0.6 ? 0 : 3)
                                : pick(rng, {0.70, 0.19, 0.09, 0.02});

            // Logistic ground truth; the generated age drives survival even
            // when the recorded age is missing.
            double z = -2.2;
            if (row.gender == 1) z += 3.0;
            z += class_effect[c];
            if (row.age <= 10.0)
                z += 2.1;
            else if (row.age <= 16.0)
                z += 0.9;
            else
                z -= 0.014 * (row.age - 30.0);
            z += 0.0025 * row.fare;
            z += -0.06 * row.sibsp - 0.03 * row.parch;
            if (row.embarked == 1) z += 0.2;
            if (row.embarked == 2) z -= 0.05;
            row.survived = rng.uniform() < sigmoid(z) ? 1 : 0;

            row.age_missing = !crew && rng.uniform() < 0.035;
            rows.push_back(row);
        }
    }

    std::vector<int> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    // Missing ages are median-imputed the way load_csv would.
    std::vector<double> present;
    for (const TitanicRow& r : rows)
        if (!r.age_missing)
            present.push_back(r.age);
    std::sort(present.begin(), present.end());
    const double median_age = present[present.size() / 2];

    double age_lo = present.front(), age_hi = present.back();
    double fare_lo = rows.front().fare, fare_hi = rows.front().fare;
    int sibsp_hi = 0, parch_hi = 0;
    for (const TitanicRow& r : rows) {
        fare_lo = std::min(fare_lo, r.fare);
        fare_hi = std::max(fare_hi, r.fare);
        sibsp_hi = std::max(sibsp_hi, r.sibsp);
        parch_hi = std::max(parch_hi, r.parch);
    }

    Dataset data;
    data.label_column = "survived";
    data.label_names = {"died", "survived"};
    data.schema = FeatureSchema({
        Feature{"class", FeatureKind::Categorical, 0, 1, classes},
        Feature{"gender", FeatureKind::Categorical, 0, 1, {"male", "female"}},
        Feature{"age", FeatureKind::Numeric, age_lo, age_hi, {}},
        Feature{"sibsp", FeatureKind::Numeric, 0, static_cast<double>(sibsp_hi), {}},
        Feature{"parch", FeatureKind::Numeric, 0, static_cast<double>(parch_hi), {}},
        Feature{"fare", FeatureKind::Numeric, fare_lo, fare_hi, {}},
        Feature{"embarked", FeatureKind::Categorical, 0, 1, ports},
    });

    for (int idx : order) {
        const TitanicRow& r = rows[static_cast<std::size_t>(idx)];
        Instance x;
        x.values = {static_cast<double>(r.klass), static_cast<double>(r.gender),
                    r.age_missing ? median_age : r.age, static_cast<double>(r.sibsp),
                    static_cast<double>(r.parch), r.fare, static_cast<double>(r.embarked)};
        data.rows.push_back(std::move(x));
        data.labels.push_back(r.survived);
    }
    return data;
}

Dataset make_cars_dataset()
{
    const std::vector<std::vector<std::string>> levels = {
        {"vhigh", "high", "med", "low"}, // buying
        {"vhigh", "high", "med", "low"}, // maint
        {"2", "3", "4", "5more"},        // doors
        {"2", "4", "more"},              // persons
        {"small", "med", "big"},         // lug_boot
        {"low", "med", "high"},          // safety
    };
    const std::vector<std::string> names = {"buying", "maint", "doors",
                                            "persons", "lug_boot", "safety"};

    // Hierarchical rule set: price from (buying, maint), comfort from
    // (doors, persons, lug_boot), tech from (comfort, safety), verdict from
    // (price, tech). Two hard gates: 2-seaters and low safety are unacc.
    static const int price_table[4][4] = {
        {0, 0, 1, 2}, {0, 1, 2, 2}, {1, 2, 2, 3}, {2, 2, 3, 3}};
    static const int comfort_table[4][3] = {
        {0, 1, 2}, {0, 1, 2}, {1, 2, 2}, {1, 2, 2}};
    static const int tech_med[3] = {0, 1, 2};
    static const int tech_high[3] = {1, 2, 3};
    static const int car_table[4][4] = {
        {0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 2, 3}, {0, 1, 2, 3}};

    Dataset data;
    data.label_column = "verdict";
    data.label_names = {"unacc", "acc", "good", "vgood"};

    std::vector<Feature> features;
    for (std::size_t i = 0; i < names.size(); ++i)
        features.push_back(Feature{names[i], FeatureKind::Categorical, 0, 1, levels[i]});
    data.schema = FeatureSchema(std::move(features));

    for (int b = 0; b < 4; ++b)
        for (int m = 0; m < 4; ++m)
            for (int d = 0; d < 4; ++d)
                for (int p = 0; p < 3; ++p)
                    for (int l = 0; l < 3; ++l)
                        for (int s = 0; s < 3; ++s) {
                            int label = 0;
                            if (p != 0 && s != 0) {
                                int comfort = comfort_table[d][l];
                                if (p == 2 && d >= 1)
                                    comfort = std::min(2, comfort + 1);
                                const int tech = s == 1 ? tech_med[comfort] : tech_high[comfort];
                                label = car_table[price_table[b][m]][tech];
                            }
                            Instance x;
                            x.values = {static_cast<double>(b), static_cast<double>(m),
                                        static_cast<double>(d), static_cast<double>(p),
                                        static_cast<double>(l), static_cast<double>(s)};
                            data.rows.push_back(std::move(x));
                            data.labels.push_back(label);
                        }
    return data;
}

Instance johnny_d_instance(const FeatureSchema& schema)
{
    const std::vector<std::pair<std::string, std::string>> categorical = {
        {"class", "1st"}, {"gender", "male"}, {"embarked", "Southampton"}};
    const std::vector<std::pair<std::string, double>> numeric = {
        {"age", 8.0}, {"sibsp", 0.0}, {"parch", 0.0}, {"fare", 72.0}};

    Instance x;
    x.values.assign(static_cast<std::size_t>(schema.size()), 0.0);
    for (const auto& [name, value] : categorical) {
        const int i = schema.index_of(name);
        if (i < 0)
            throw std::invalid_argument("johnny_d: schema lacks feature '" + name + "'");
        const int level = schema.at(i).level_index(value);
        if (level < 0)
            throw std::invalid_argument("johnny_d: feature '" + name + "' lacks level '" + value + "'");
        x.values[static_cast<std::size_t>(i)] = static_cast<double>(level);
    }
    for (const auto& [name, value] : numeric) {
        const int i = schema.index_of(name);
        if (i < 0)
            throw std::invalid_argument("johnny_d: schema lacks feature '" + name + "'");
        x.values[static_cast<std::size_t>(i)] = value;
    }
    schema.validate(x.values);
    return x;
}

Instance named_instance(const std::string& name, const FeatureSchema& schema)
{
    if (name == "johnny_d")
        return johnny_d_instance(schema);
    throw std::invalid_argument("unknown named instance '" + name + "'");
}

} // namespace ciu
