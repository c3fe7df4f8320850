/** @file levels.hpp
 *  @brief Levels structures: sequences of successively coarser partitions.
 *
 *  A levels structure of degree h is a sequence B^0..B^h of partitions of
 *  the player set where B^0 is the all-singletons partition, B^h = {N}, and
 *  every block of B^k is a union of blocks of B^{k-1}. Partitions are kept
 *  in canonical form (blocks ordered by their smallest member) so that
 *  structural equality is well defined.
 */

#ifndef CIU_LEVELS_HPP
#define CIU_LEVELS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ciu/game.hpp"

namespace ciu {

/// A partition is a block list; canonical form sorts blocks by smallest member.
using Partition = std::vector<Coalition>;

enum class LevelsErrorCode {
    NotAPartition,
    NotCoarsening,
    MissingSingletonLevel,
    MissingGrandCoalition,
    LevelOutOfRange,
};

class levels_error : public std::runtime_error {
public:
    levels_error(LevelsErrorCode code, int level, const std::string& what)
        : std::runtime_error(what), code_(code), level_(level) {}

    LevelsErrorCode code() const { return code_; }
    /// Index of the first offending level, or -1 when not level-specific.
    int level() const { return level_; }

private:
    LevelsErrorCode code_;
    int level_;
};

Partition canonical_partition(Partition blocks);

/// True iff blocks are nonempty, pairwise disjoint and cover {0..n-1}.
bool is_partition_of(const Partition& blocks, int n_players);

/// All-singletons partition of {0..n-1}.
Partition singleton_partition(int n_players);

class LevelsStructure {
public:
    /// Validates B^0..B^h against the three structural constraints and
    /// returns the canonicalized structure; throws levels_error naming the
    /// first violated constraint otherwise. The player count is inferred
    /// from the union of the first level.
    static LevelsStructure validate(std::vector<Partition> levels);

    /// The trivial structure (singletons, {N}) written N-hat in the literature.
    static LevelsStructure trivial(int n_players);

    int n_players() const { return n_; }
    int degree() const { return static_cast<int>(levels_.size()) - 1; }
    const Partition& level(int k) const;
    const std::vector<Partition>& levels() const { return levels_; }

    bool operator==(const LevelsStructure&) const = default;

private:
    LevelsStructure(int n, std::vector<Partition> levels)
        : n_(n), levels_(std::move(levels)) {}

    int n_ = 0;
    std::vector<Partition> levels_;
};

/// The induced game v/B: one player per block, worth of a block set equal to
/// v of the union of its blocks. Block players are numbered in canonical
/// partition order.
Game induced_game(const Game& g, const Partition& level_partition);

/// Quotient structure B/B^k of degree h-k. Block-players are the blocks of
/// B^k in canonical order; `structure` is the levels structure over those
/// players and `base_blocks` maps block-player j back to its coalition of
/// original players.
struct QuotientLevels {
    LevelsStructure structure;
    Partition base_blocks;

    /// Materializes the nested-set view B^{k,r} = { {U in B^k : U within U'} }
    /// in terms of original players, matching the textbook presentation.
    std::vector<std::vector<std::vector<Coalition>>> nested() const;
};

QuotientLevels quotient_levels(const LevelsStructure& ls, int k);

/// Immediate players N_B(S) = {T in B : T within S}. S must be a union of
/// blocks of B.
std::vector<Coalition> immediate_players(Coalition s, const Partition& b);

} // namespace ciu

#endif // CIU_LEVELS_HPP
