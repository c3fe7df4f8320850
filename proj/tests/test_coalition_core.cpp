#include <doctest.h>

#include <cmath>

#include "ciu/game.hpp"
#include "ciu/game_io.hpp"
#include "ciu/rng.hpp"

using namespace ciu;

namespace {

// Brute-force oracles, straight from the defining sums. They stay
// independent of the transform-based implementations they check.

double dividend_oracle(const Game& g, Coalition t)
{
    double sum = 0.0;
    for_each_subset(t, [&](Coalition s) {
        const int sign = (t.size() - s.size()) % 2 == 0 ? 1 : -1;
        sum += sign * g.worth(s);
    });
    return sum;
}

bool superadditive_oracle(const Game& g)
{
    const int n = g.n_players();
    bool ok = true;
    for_each_coalition(n, [&](Coalition s) {
        for_each_coalition(n, [&](Coalition t) {
            if (!s.disjoint_with(t))
                return;
            if (g.worth(s.unite(t)) < g.worth(s) + g.worth(t))
                ok = false;
        });
    });
    return ok;
}

bool convex_oracle(const Game& g)
{
    const int n = g.n_players();
    bool ok = true;
    for_each_coalition(n, [&](Coalition s) {
        for_each_coalition(n, [&](Coalition t) {
            if (g.worth(s.unite(t)) + g.worth(s.intersect(t)) < g.worth(s) + g.worth(t) - 1e-12)
                ok = false;
        });
    });
    return ok;
}

bool monotonic_oracle(const Game& g)
{
    const int n = g.n_players();
    bool ok = true;
    for_each_coalition(n, [&](Coalition s) {
        for_each_subset(s, [&](Coalition t) {
            if (g.worth(s) < g.worth(t))
                ok = false;
        });
    });
    return ok;
}

Game random_game(int n, Rng& rng, double lo = -1.0, double hi = 1.0)
{
    return Game::from_fn(n, [&](Coalition) { return rng.uniform(lo, hi); });
}

// v(singletons)=0, v(pairs)=1, v(N)=1 on three players.
Game pairs_game()
{
    return Game::from_fn(3, [](Coalition s) { return s.size() >= 2 ? 1.0 : 0.0; });
}

} // namespace

TEST_CASE("coalition bit algebra")
{
    const Coalition s = Coalition::of({1, 2});
    CHECK(s.size() == 2);
    CHECK(s.contains(1));
    CHECK(!s.contains(0));
    CHECK(s.subset_of(Coalition::all(3)));
    CHECK(Coalition().empty());
    CHECK(Coalition() != s);
    CHECK(s.unite(Coalition::single(0)) == Coalition::all(3));
    CHECK(s.minus(Coalition::single(2)) == Coalition::single(1));
    CHECK(s.to_string(1) == "{2,3}");
    CHECK_THROWS_AS(Coalition::single(kMaxPlayers), std::invalid_argument);

    int subsets = 0;
    for_each_subset(s, [&](Coalition) { ++subsets; });
    CHECK(subsets == 4);
}

TEST_CASE("game construction enforces the invariants")
{
    CHECK_THROWS_AS(Game(2, {1.0, 0.0, 0.0, 0.0}), std::invalid_argument); // v(empty) != 0
    CHECK_THROWS_AS(Game(2, {0.0, 0.0}), std::invalid_argument);           // wrong table size
    CHECK_THROWS_AS(Game(kMaxPlayers + 1, {}), std::invalid_argument);     // capacity
    const Game g = Game::from_fn(2, [](Coalition s) { return s.size() * 1.0; });
    CHECK(g.worth(Coalition()) == 0.0);
    CHECK(g.worth(g.grand()) == 2.0);
}

TEST_CASE("unanimity game")
{
    const Game u = unanimity_game(Coalition::of({1, 2}), 3);
    CHECK(u.worth(Coalition::of({1, 2})) == 1.0);
    CHECK(u.worth(Coalition::all(3)) == 1.0);
    CHECK(u.worth(Coalition::single(1)) == 0.0);

    const Game single = unanimity_game(Coalition::single(0), 1);
    CHECK(single.worth(Coalition::single(0)) == 1.0);
    CHECK(single.worth(Coalition()) == 0.0);

    // Exactly the supersets of T carry worth 1: {0,2} and {0,1,2}.
    const Game u02 = unanimity_game(Coalition::of({0, 2}), 3);
    int ones = 0;
    for_each_coalition(3, [&](Coalition s) { ones += u02.worth(s) == 1.0 ? 1 : 0; });
    CHECK(ones == 2);

    CHECK_THROWS_AS(unanimity_game(Coalition(), 3), std::invalid_argument);
}

TEST_CASE("harsanyi dividends: worked examples")
{
    SUBCASE("unanimity game is the basis indicator")
    {
        for (int n = 1; n <= 5; ++n) {
            for (Mask t = 1; t < (Mask{1} << n); ++t) {
                const DividendTable d = harsanyi_dividends(unanimity_game(Coalition(t), n));
                for (Mask s = 1; s < (Mask{1} << n); ++s)
                    CHECK(d.dividends[s] == doctest::Approx(s == t ? 1.0 : 0.0).epsilon(1e-12));
            }
        }
    }
    SUBCASE("additive game has singleton dividends only")
    {
        const Game g = Game::from_fn(3, [](Coalition s) { return 1.0 * s.size(); });
        const DividendTable d = harsanyi_dividends(g);
        for_each_coalition(3, [&](Coalition t) {
            if (t.empty())
                return;
            CHECK(d(t) == doctest::Approx(t.size() == 1 ? 1.0 : 0.0));
        });
    }
    SUBCASE("pairs game")
    {
        const DividendTable d = harsanyi_dividends(pairs_game());
        CHECK(d(Coalition::of({0, 1})) == doctest::Approx(1.0));
        CHECK(d(Coalition::of({0, 2})) == doctest::Approx(1.0));
        CHECK(d(Coalition::of({1, 2})) == doctest::Approx(1.0));
        CHECK(d(Coalition::all(3)) == doctest::Approx(-2.0));
        CHECK(d(Coalition::single(0)) == doctest::Approx(0.0));
    }
}

TEST_CASE("dividends match the alternating-sum oracle on random games")
{
    Rng rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 2 + static_cast<int>(rng.bounded(5));
        const Game g = random_game(n, rng);
        const DividendTable d = harsanyi_dividends(g);
        for_each_coalition(n, [&](Coalition t) {
            if (t.empty())
                return;
            CHECK(d(t) == doctest::Approx(dividend_oracle(g, t)).epsilon(1e-9));
        });
    }
}

TEST_CASE("reconstruct_from_dividends")
{
    SUBCASE("explicit table")
    {
        DividendTable d{2, {0.0, 2.0, 0.0, 0.0}}; // delta({0}) = 2, others 0
        const Game g = reconstruct_from_dividends(d);
        CHECK(g.worth(Coalition::single(0)) == doctest::Approx(2.0));
        CHECK(g.worth(Coalition::single(1)) == doctest::Approx(0.0));
        CHECK(g.worth(Coalition::all(2)) == doctest::Approx(2.0));
    }
    SUBCASE("round trip on the pairs game")
    {
        const Game g = pairs_game();
        CHECK(games_equal(reconstruct_from_dividends(harsanyi_dividends(g)), g, 1e-12));
    }
    SUBCASE("incomplete table is rejected")
    {
        CHECK_THROWS_AS(reconstruct_from_dividends(DividendTable{2, {0.0, 1.0}}),
                        std::invalid_argument);
    }
    SUBCASE("random round trips")
    {
        Rng rng(42);
        for (int rep = 0; rep < 50; ++rep) {
            const Game g = random_game(2 + static_cast<int>(rng.bounded(7)), rng);
            CHECK(games_equal(reconstruct_from_dividends(harsanyi_dividends(g)), g, 1e-9));
        }
    }
}

TEST_CASE("dividends are linear in the game")
{
    Rng rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 2 + static_cast<int>(rng.bounded(5));
        const Game v = random_game(n, rng);
        const Game w = random_game(n, rng);
        const double a = rng.uniform(-2.0, 2.0);
        const double b = rng.uniform(-2.0, 2.0);
        const Game mix = Game::from_fn(n, [&](Coalition s) {
            return a * v.worth(s) + b * w.worth(s);
        });
        const DividendTable dv = harsanyi_dividends(v);
        const DividendTable dw = harsanyi_dividends(w);
        const DividendTable dm = harsanyi_dividends(mix);
        for_each_coalition(n, [&](Coalition t) {
            if (t.empty())
                return;
            CHECK(dm(t) == doctest::Approx(a * dv(t) + b * dw(t)).epsilon(1e-9));
        });
    }
}

TEST_CASE("game_properties")
{
    SUBCASE("|S|^2 is convex, superadditive, monotone")
    {
        const Game g = Game::from_fn(4, [](Coalition s) {
            return static_cast<double>(s.size() * s.size());
        });
        const PropertyReport r = game_properties(g);
        CHECK(r.convex);
        CHECK(r.superadditive);
        CHECK(r.monotonic);
        CHECK(r.zero_monotonic);
        CHECK(r.nonnegative);
    }
    SUBCASE("unanimity game is monotone and superadditive")
    {
        const PropertyReport r = game_properties(unanimity_game(Coalition::of({0, 1}), 3));
        CHECK(r.monotonic);
        CHECK(r.superadditive);
    }
    SUBCASE("direct monotonicity violation")
    {
        const Game g(2, {0.0, 5.0, 0.0, 4.0}); // v({0})=5 > v({0,1})=4
        CHECK(!game_properties(g).monotonic);
    }
    SUBCASE("flags agree with pairwise oracles on random games")
    {
        Rng rng(3);
        for (int rep = 0; rep < 40; ++rep) {
            const int n = 2 + static_cast<int>(rng.bounded(3));
            // Mix of arbitrary games and convex-by-construction games
            // (nonnegative dividends on non-singletons give convexity).
            Game g = random_game(n, rng, rep % 2 == 0 ? -1.0 : 0.0, 1.0);
            if (rep % 3 == 0) {
                DividendTable d{n, std::vector<double>(std::size_t{1} << n, 0.0)};
                for (Mask m = 1; m < (Mask{1} << n); ++m)
                    d.dividends[m] = rng.uniform(0.0, 1.0);
                g = reconstruct_from_dividends(d);
            }
            const PropertyReport r = game_properties(g);
            CHECK(r.monotonic == monotonic_oracle(g));
            CHECK(r.superadditive == superadditive_oracle(g));
            CHECK(r.convex == convex_oracle(g));
            // Implication chain on the computed flags.
            if (r.convex)
                CHECK(r.superadditive);
            if (r.superadditive)
                CHECK(r.zero_monotonic);
        }
    }
}

TEST_CASE("is_imputation")
{
    const Game u = unanimity_game(Coalition::all(3), 3);
    CHECK(is_imputation(u, {1.0 / 3, 1.0 / 3, 1.0 / 3}));

    const Game g = Game::from_fn(2, [](Coalition s) { return s.size() == 2 ? 10.0 : 0.0; });
    CHECK(!is_imputation(g, {4.0, 5.0})); // sums to 9, efficiency violated

    CHECK(is_imputation(pairs_game(), {1.0 / 3, 1.0 / 3, 1.0 / 3}));
    CHECK_THROWS_AS(is_imputation(g, {1.0}), std::invalid_argument);
}

TEST_CASE("in_core")
{
    CHECK(!in_core(pairs_game(), {1.0 / 3, 1.0 / 3, 1.0 / 3})); // any pair gets 2/3 < 1

    Rng rng(5);
    const std::vector<double> c = {0.4, 1.3, 0.2, 2.0};
    const Game additive = Game::from_fn(4, [&](Coalition s) {
        double sum = 0.0;
        for (int i : s.members())
            sum += c[static_cast<std::size_t>(i)];
        return sum;
    });
    CHECK(in_core(additive, c));

    const Game grand_only = Game::from_fn(3, [](Coalition s) {
        return s.size() == 3 ? 1.0 : 0.0;
    });
    CHECK(in_core(grand_only, {1.0, 0.0, 0.0}));

    SUBCASE("core membership implies imputation membership")
    {
        for (int rep = 0; rep < 200; ++rep) {
            const int n = 2 + static_cast<int>(rng.bounded(4));
            const Game g = random_game(n, rng);
            PayoffVector x(static_cast<std::size_t>(n));
            double sum = 0.0;
            for (double& xi : x) {
                xi = rng.uniform(-1.0, 1.0);
                sum += xi;
            }
            // Shift to efficiency so the efficiency clause never masks the test.
            const double shift = (g.worth(g.grand()) - sum) / n;
            for (double& xi : x)
                xi += shift;
            if (in_core(g, x))
                CHECK(is_imputation(g, x));
        }
    }
}

TEST_CASE("check_value_axioms")
{
    const std::vector<double> c = {1.0, 2.0};
    const Game additive = Game::from_fn(2, [&](Coalition s) {
        double sum = 0.0;
        for (int i : s.members())
            sum += c[static_cast<std::size_t>(i)];
        return sum;
    });
    CHECK(check_value_axioms(additive).additivity);

    CHECK(!check_value_axioms(unanimity_game(Coalition::all(2), 2)).additivity);

    const Game one = Game::from_fn(1, [](Coalition s) { return 1.0 * s.size(); });
    CHECK(check_value_axioms(one).efficiency_sum); // v(N)=1 equals the sum over {empty,{0}}
    CHECK(!check_value_axioms(additive).efficiency_sum);
}

TEST_CASE("game text serialization round trip")
{
    Rng rng(17);
    const Game g = random_game(4, rng);
    const std::string text = to_text(g);
    CHECK(text.rfind("n_players=4", 0) == 0);
    const Game back = game_from_text(text);
    CHECK(back.n_players() == 4);
    for_each_coalition(4, [&](Coalition s) {
        CHECK(back.worth(s) == g.worth(s)); // bit-exact via shortest round trip
    });

    CHECK_THROWS(game_from_text("bogus"));
    CHECK_THROWS(game_from_text("n_players=2\n0x0 0\n0x1 1\n")); // missing entries
}
