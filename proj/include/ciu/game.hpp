/** @file game.hpp
 *  @brief Transferable-utility cooperative games (N, v) with exact primitives.
 *
 *  A game stores the worth v(S) of every coalition S in a dense table indexed
 *  by coalition mask, with v(empty) = 0. On top of it:
 *   - unanimity games u_T (worth 1 iff T is contained in S),
 *   - Harsanyi dividends via the alternating-sign Moebius sum
 *       delta_v(T) = sum_{S subseteq T} (-1)^{|T|-|S|} v(S),
 *     and the inverse reconstruction v(S) = sum_{T subseteq S} delta_v(T),
 *   - exhaustive structural predicates (monotone, zero-monotone,
 *     superadditive, convex) and payoff predicates (imputation, core).
 *
 *  Everything is a pure function over immutable values; all equality checks
 *  on worths use an absolute tolerance (default 1e-9) because the dividend
 *  sums cancel heavily.
 */

#ifndef CIU_GAME_HPP
#define CIU_GAME_HPP

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "ciu/coalition.hpp"

namespace ciu {

inline constexpr double kWorthTolerance = 1e-9;

inline bool approx_equal(double a, double b, double tol = kWorthTolerance)
{
    return std::fabs(a - b) <= tol;
}

/// Payoff vector x = (x_i), one entry per player, in worth units.
using PayoffVector = std::vector<double>;

class Game {
public:
    /// Takes a dense worth table of size 2^n indexed by coalition mask.
    /// Requires worth[0] == 0 and every entry finite; rejects n > kMaxPlayers.
    Game(int n_players, std::vector<double> worth);

    /// Builds the table by evaluating fn on every coalition.
    static Game from_fn(int n_players, const std::function<double(Coalition)>& fn);

    int n_players() const { return n_; }
    Coalition grand() const { return Coalition::all(n_); }
    double worth(Coalition s) const { return worth_[s.mask()]; }
    std::span<const double> table() const { return worth_; }

    bool operator==(const Game&) const = default;

private:
    int n_;
    std::vector<double> worth_;
};

/// Harsanyi dividends delta_v(T) for every nonempty T (entry for the empty
/// mask is kept at 0 so the table is indexable by mask).
struct DividendTable {
    int n_players = 0;
    std::vector<double> dividends; // size 2^n, dividends[0] == 0

    double operator()(Coalition t) const { return dividends[t.mask()]; }
};

struct PropertyReport {
    bool monotonic = false;
    bool zero_monotonic = false;
    bool superadditive = false;
    bool convex = false;
    bool nonnegative = false; // v >= 0 everywhere, reported separately
};

struct AxiomReport {
    bool efficiency_sum = false; // v(N) equals the sum of v over all S
    bool additivity = false;     // v(S u T) = v(S) + v(T) for disjoint S, T
};

/// u_T: worth 1 for coalitions containing T, 0 otherwise. T must be nonempty.
Game unanimity_game(Coalition t, int n_players);

/// delta_v(T) = sum_{S subseteq T} (-1)^{|T|-|S|} v(S), all T at once via the
/// in-place Moebius transform over the subset lattice, O(n 2^n).
DividendTable harsanyi_dividends(const Game& g);

/// v(S) = sum_{T subseteq S} delta(T); inverse of harsanyi_dividends (zeta
/// transform). Requires a complete table (size 2^n, empty entry 0).
Game reconstruct_from_dividends(const DividendTable& d);

/// Exhaustive checks of the four standard structural properties plus
/// non-negativity. Monotonicity and convexity use the equivalent one-step
/// characterizations (v(S) >= v(S\{i}); marginal contributions increasing),
/// superadditivity scans all disjoint pairs.
PropertyReport game_properties(const Game& g);

/// Efficiency + individual rationality.
bool is_imputation(const Game& g, const PayoffVector& x, double tol = kWorthTolerance);

/// Efficiency + coalitional rationality, exhaustive over all 2^n coalitions.
bool in_core(const Game& g, const PayoffVector& x, double tol = kWorthTolerance);

/// The two value axioms checked verbatim: efficiency_sum tests
/// v(N) == sum_{S subseteq N} v(S); additivity tests all disjoint pairs.
AxiomReport check_value_axioms(const Game& g, double tol = kWorthTolerance);

/// True when both tables agree within tol on every coalition.
bool games_equal(const Game& a, const Game& b, double tol = kWorthTolerance);

} // namespace ciu

#endif // CIU_GAME_HPP
