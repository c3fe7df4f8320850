/** @file coalition.hpp
 *  @brief Coalitions of players encoded as fixed-width bit patterns.
 *
 *  A coalition S of players drawn from {0..n-1} is stored as a bitmask so
 *  that set algebra (union, intersection, subset tests) is O(1) and all
 *  2^n coalitions of an n-player game enumerate as the integers 0..2^n-1.
 *  The module is an exact oracle for small n; operations that materialize
 *  all coalitions are capped at kMaxPlayers players.
 */

#ifndef CIU_COALITION_HPP
#define CIU_COALITION_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ciu {

using Mask = std::uint32_t;

/// Hard cap for exhaustive 2^n operations.
inline constexpr int kMaxPlayers = 20;

class Coalition {
public:
    constexpr Coalition() = default;
    constexpr explicit Coalition(Mask mask) : mask_(mask) {}

    static Coalition of(std::initializer_list<int> players)
    {
        Mask m = 0;
        for (int p : players) {
            check_player(p);
            m |= Mask{1} << p;
        }
        return Coalition(m);
    }

    static Coalition of(const std::vector<int>& players)
    {
        Mask m = 0;
        for (int p : players) {
            check_player(p);
            m |= Mask{1} << p;
        }
        return Coalition(m);
    }

    static Coalition single(int player)
    {
        check_player(player);
        return Coalition(Mask{1} << player);
    }

    /// The grand coalition {0..n-1}.
    static Coalition all(int n)
    {
        if (n < 0 || n > kMaxPlayers)
            throw std::invalid_argument("Coalition::all: player count out of range");
        return Coalition(n == 0 ? 0 : (Mask{1} << n) - 1);
    }

    constexpr Mask mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool contains(int player) const { return (mask_ >> player) & 1u; }
    constexpr bool subset_of(Coalition other) const { return (mask_ & ~other.mask_) == 0; }
    constexpr bool disjoint_with(Coalition other) const { return (mask_ & other.mask_) == 0; }

    constexpr Coalition unite(Coalition other) const { return Coalition(mask_ | other.mask_); }
    constexpr Coalition intersect(Coalition other) const { return Coalition(mask_ & other.mask_); }
    constexpr Coalition minus(Coalition other) const { return Coalition(mask_ & ~other.mask_); }
    constexpr Coalition with(int player) const { return Coalition(mask_ | (Mask{1} << player)); }
    constexpr Coalition without(int player) const { return Coalition(mask_ & ~(Mask{1} << player)); }

    /// Lowest player index, or -1 when empty.
    constexpr int min_member() const
    {
        return mask_ == 0 ? -1 : std::countr_zero(mask_);
    }

    std::vector<int> members() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Mask m = mask_; m != 0; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }

    /// Renders as {a,b,c} with `base`-based player labels (display only).
    std::string to_string(int base = 0) const
    {
        std::string s = "{";
        bool first = true;
        for (int p : members()) {
            if (!first) s += ",";
            first = false;
            s += std::to_string(p + base);
        }
        s += "}";
        return s;
    }

    friend constexpr auto operator<=>(Coalition, Coalition) = default;

private:
    static void check_player(int p)
    {
        if (p < 0 || p >= kMaxPlayers)
            throw std::invalid_argument("Coalition: player index out of range");
    }

    Mask mask_ = 0;
};

/// Calls fn(Coalition) for every subset of t, the empty set and t included.
/// Classic descending submask walk, 2^|t| steps.
template <typename Fn>
void for_each_subset(Coalition t, Fn&& fn)
{
    const Mask full = t.mask();
    Mask s = full;
    for (;;) {
        fn(Coalition(s));
        if (s == 0) break;
        s = (s - 1) & full;
    }
}

/// Calls fn(Coalition) for all 2^n coalitions in ascending mask order.
template <typename Fn>
void for_each_coalition(int n, Fn&& fn)
{
    const Mask count = Mask{1} << n;
    for (Mask m = 0; m < count; ++m)
        fn(Coalition(m));
}

} // namespace ciu

#endif // CIU_COALITION_HPP
