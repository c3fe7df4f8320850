#include "ciu/game.hpp"

#include <cmath>
#include <stdexcept>

namespace ciu {

Game::Game(int n_players, std::vector<double> worth)
    : n_(n_players), worth_(std::move(worth))
{
    if (n_ < 0)
        throw std::invalid_argument("Game: negative player count");
    if (n_ > kMaxPlayers)
        throw std::invalid_argument("Game: player count exceeds the exhaustive-enumeration cap of "
                                    + std::to_string(kMaxPlayers));
    if (worth_.size() != (std::size_t{1} << n_))
        throw std::invalid_argument("Game: worth table must have exactly 2^n entries");
    if (worth_[0] != 0.0)
        throw std::invalid_argument("Game: worth of the empty coalition must be 0");
    for (double v : worth_)
        if (!std::isfinite(v))
            throw std::invalid_argument("Game: worth table contains a non-finite value");
}

Game Game::from_fn(int n_players, const std::function<double(Coalition)>& fn)
{
    if (n_players < 0 || n_players > kMaxPlayers)
        throw std::invalid_argument("Game::from_fn: player count out of range");
    std::vector<double> worth(std::size_t{1} << n_players);
    for_each_coalition(n_players, [&](Coalition s) {
        worth[s.mask()] = s.empty() ? 0.0 : fn(s);
    });
    return Game(n_players, std::move(worth));
}

Game unanimity_game(Coalition t, int n_players)
{
    if (t.empty())
        throw std::invalid_argument("unanimity_game: T must be nonempty");
    if (!t.subset_of(Coalition::all(n_players)))
        throw std::invalid_argument("unanimity_game: T exceeds the player set");
    return Game::from_fn(n_players, [t](Coalition s) {
        return t.subset_of(s) ? 1.0 : 0.0;
    });
}

DividendTable harsanyi_dividends(const Game& g)
{
    const int n = g.n_players();
    std::vector<double> delta(g.table().begin(), g.table().end());
    // Moebius transform over the subset lattice: after processing bit i,
    // delta[mask] holds the alternating sum restricted to coordinate i.
    for (int i = 0; i < n; ++i) {
        const Mask bit = Mask{1} << i;
        const Mask count = Mask{1} << n;
        for (Mask m = 0; m < count; ++m)
            if (m & bit)
                delta[m] -= delta[m ^ bit];
    }
    return DividendTable{n, std::move(delta)};
}

Game reconstruct_from_dividends(const DividendTable& d)
{
    const int n = d.n_players;
    if (n < 0 || n > kMaxPlayers)
        throw std::invalid_argument("reconstruct_from_dividends: player count out of range");
    if (d.dividends.size() != (std::size_t{1} << n))
        throw std::invalid_argument("reconstruct_from_dividends: incomplete dividend table");
    std::vector<double> worth = d.dividends;
    worth[0] = 0.0;
    // Zeta transform: worth[S] = sum of dividends over subsets of S.
    for (int i = 0; i < n; ++i) {
        const Mask bit = Mask{1} << i;
        const Mask count = Mask{1} << n;
        for (Mask m = 0; m < count; ++m)
            if (m & bit)
                worth[m] += worth[m ^ bit];
    }
    return Game(n, std::move(worth));
}

PropertyReport game_properties(const Game& g)
{
    const int n = g.n_players();
    const Mask count = Mask{1} << n;
    PropertyReport r;

    r.nonnegative = true;
    for (Mask m = 0; m < count; ++m)
        if (g.table()[m] < 0.0) { r.nonnegative = false; break; }

    // Monotone along one-element chains iff monotone for all S >= T.
    r.monotonic = true;
    for (Mask m = 1; m < count && r.monotonic; ++m)
        for (Mask rest = m; rest != 0; rest &= rest - 1) {
            const Mask bit = rest & (0u - rest);
            if (g.table()[m] < g.table()[m ^ bit]) { r.monotonic = false; break; }
        }

    // v(S u {i}) >= v(S) + v({i}) for every S avoiding i.
    r.zero_monotonic = true;
    for (int i = 0; i < n && r.zero_monotonic; ++i) {
        const Mask bit = Mask{1} << i;
        for (Mask m = 0; m < count; ++m) {
            if (m & bit) continue;
            if (g.table()[m | bit] < g.table()[m] + g.table()[bit]) {
                r.zero_monotonic = false;
                break;
            }
        }
    }

    // All disjoint pairs via submask enumeration of each complement, ~3^n.
    r.superadditive = true;
    for (Mask s = 1; s < count && r.superadditive; ++s) {
        const Mask comp = (count - 1) ^ s;
        for (Mask t = comp; t != 0; t = (t - 1) & comp) {
            if (g.table()[s | t] < g.table()[s] + g.table()[t]) {
                r.superadditive = false;
                break;
            }
        }
    }

    // Convex iff marginal contributions grow: for all i != j and S avoiding
    // both, v(S+i+j) + v(S) >= v(S+i) + v(S+j). Equivalent to the pairwise
    // v(S u T) + v(S n T) >= v(S) + v(T) definition.
    r.convex = true;
    for (int i = 0; i < n && r.convex; ++i) {
        for (int j = i + 1; j < n && r.convex; ++j) {
            const Mask bi = Mask{1} << i;
            const Mask bj = Mask{1} << j;
            for (Mask m = 0; m < count; ++m) {
                if (m & (bi | bj)) continue;
                if (g.table()[m | bi | bj] + g.table()[m] <
                    g.table()[m | bi] + g.table()[m | bj]) {
                    r.convex = false;
                    break;
                }
            }
        }
    }

    return r;
}

bool is_imputation(const Game& g, const PayoffVector& x, double tol)
{
    if (static_cast<int>(x.size()) != g.n_players())
        throw std::invalid_argument("is_imputation: payoff vector length mismatch");
    double sum = 0.0;
    for (double xi : x) sum += xi;
    if (!approx_equal(sum, g.worth(g.grand()), tol))
        return false;
    for (int i = 0; i < g.n_players(); ++i)
        if (x[i] < g.worth(Coalition::single(i)) - tol)
            return false;
    return true;
}

bool in_core(const Game& g, const PayoffVector& x, double tol)
{
    if (static_cast<int>(x.size()) != g.n_players())
        throw std::invalid_argument("in_core: payoff vector length mismatch");
    const int n = g.n_players();
    const Mask count = Mask{1} << n;
    double total = 0.0;
    for (double xi : x) total += xi;
    if (!approx_equal(total, g.worth(g.grand()), tol))
        return false;
    for (Mask m = 1; m < count; ++m) {
        double xs = 0.0;
        for (Mask rest = m; rest != 0; rest &= rest - 1)
            xs += x[std::countr_zero(rest)];
        if (xs < g.table()[m] - tol)
            return false;
    }
    return true;
}

AxiomReport check_value_axioms(const Game& g, double tol)
{
    const int n = g.n_players();
    const Mask count = Mask{1} << n;
    AxiomReport r;

    double sum_all = 0.0;
    for (Mask m = 0; m < count; ++m)
        sum_all += g.table()[m];
    r.efficiency_sum = approx_equal(g.worth(g.grand()), sum_all, tol);

    r.additivity = true;
    for (Mask s = 1; s < count && r.additivity; ++s) {
        const Mask comp = (count - 1) ^ s;
        for (Mask t = comp; t != 0; t = (t - 1) & comp) {
            if (!approx_equal(g.table()[s | t], g.table()[s] + g.table()[t], tol)) {
                r.additivity = false;
                break;
            }
        }
    }
    return r;
}

bool games_equal(const Game& a, const Game& b, double tol)
{
    if (a.n_players() != b.n_players())
        return false;
    for (std::size_t m = 0; m < a.table().size(); ++m)
        if (!approx_equal(a.table()[m], b.table()[m], tol))
            return false;
    return true;
}

} // namespace ciu
