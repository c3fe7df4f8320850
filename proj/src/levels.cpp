#include "ciu/levels.hpp"

#include <algorithm>

namespace ciu {

Partition canonical_partition(Partition blocks)
{
    std::sort(blocks.begin(), blocks.end(), [](Coalition a, Coalition b) {
        return a.min_member() < b.min_member();
    });
    return blocks;
}

bool is_partition_of(const Partition& blocks, int n_players)
{
    Mask seen = 0;
    for (Coalition b : blocks) {
        if (b.empty())
            return false;
        if ((seen & b.mask()) != 0)
            return false;
        seen |= b.mask();
    }
    return seen == Coalition::all(n_players).mask();
}

Partition singleton_partition(int n_players)
{
    Partition p;
    p.reserve(static_cast<std::size_t>(n_players));
    for (int i = 0; i < n_players; ++i)
        p.push_back(Coalition::single(i));
    return p;
}

LevelsStructure LevelsStructure::validate(std::vector<Partition> levels)
{
    if (levels.empty())
        throw levels_error(LevelsErrorCode::MissingSingletonLevel, 0,
                           "levels structure is empty");

    // Player set inferred from the union of the first level.
    Mask universe = 0;
    for (Coalition b : levels.front())
        universe |= b.mask();
    const int n = universe == 0 ? 0 : 32 - std::countl_zero(universe);
    if (n == 0 || universe != Coalition::all(n).mask())
        throw levels_error(LevelsErrorCode::NotAPartition, 0,
                           "level 0 does not cover a contiguous player set {0..n-1}");

    for (std::size_t k = 0; k < levels.size(); ++k) {
        levels[k] = canonical_partition(std::move(levels[k]));
        if (!is_partition_of(levels[k], n))
            throw levels_error(LevelsErrorCode::NotAPartition, static_cast<int>(k),
                               "level " + std::to_string(k) + " is not a partition of the player set");
    }

    for (Coalition b : levels.front())
        if (b.size() != 1)
            throw levels_error(LevelsErrorCode::MissingSingletonLevel, 0,
                               "level 0 must be the all-singletons partition");

    if (levels.back().size() != 1)
        throw levels_error(LevelsErrorCode::MissingGrandCoalition,
                           static_cast<int>(levels.size()) - 1,
                           "last level must be the grand coalition");

    // Successive coarsening: every block of B^k is a union of B^{k-1} blocks.
    for (std::size_t k = 1; k < levels.size(); ++k) {
        for (Coalition fine : levels[k - 1]) {
            bool embedded = false;
            for (Coalition coarse : levels[k])
                if (fine.subset_of(coarse)) { embedded = true; break; }
            if (!embedded)
                throw levels_error(LevelsErrorCode::NotCoarsening, static_cast<int>(k),
                                   "level " + std::to_string(k)
                                   + " is not a coarsening of level " + std::to_string(k - 1));
        }
    }

    return LevelsStructure(n, std::move(levels));
}

LevelsStructure LevelsStructure::trivial(int n_players)
{
    return validate({singleton_partition(n_players), {Coalition::all(n_players)}});
}

const Partition& LevelsStructure::level(int k) const
{
    if (k < 0 || k > degree())
        throw levels_error(LevelsErrorCode::LevelOutOfRange, k,
                           "level index " + std::to_string(k) + " out of range 0.."
                           + std::to_string(degree()));
    return levels_[static_cast<std::size_t>(k)];
}

Game induced_game(const Game& g, const Partition& level_partition)
{
    const Partition blocks = canonical_partition(level_partition);
    if (!is_partition_of(blocks, g.n_players()))
        throw std::invalid_argument("induced_game: not a partition of the player set");

    const int m = static_cast<int>(blocks.size());
    return Game::from_fn(m, [&](Coalition block_set) {
        Coalition unioned;
        for (int j : block_set.members())
            unioned = unioned.unite(blocks[static_cast<std::size_t>(j)]);
        return g.worth(unioned);
    });
}

QuotientLevels quotient_levels(const LevelsStructure& ls, int k)
{
    if (k < 0 || k > ls.degree())
        throw levels_error(LevelsErrorCode::LevelOutOfRange, k,
                           "quotient level " + std::to_string(k) + " out of range 0.."
                           + std::to_string(ls.degree()));

    const Partition& base = ls.level(k);

    // B^{k,r}: group the blocks of B^k by the block of B^{k+r} containing them.
    std::vector<Partition> quotient;
    for (int r = 0; r + k <= ls.degree(); ++r) {
        Partition level;
        for (Coalition coarse : ls.level(k + r)) {
            Coalition group;
            for (std::size_t j = 0; j < base.size(); ++j)
                if (base[j].subset_of(coarse))
                    group = group.with(static_cast<int>(j));
            level.push_back(group);
        }
        quotient.push_back(std::move(level));
    }

    return QuotientLevels{LevelsStructure::validate(std::move(quotient)), base};
}

std::vector<std::vector<std::vector<Coalition>>> QuotientLevels::nested() const
{
    std::vector<std::vector<std::vector<Coalition>>> out;
    for (int r = 0; r <= structure.degree(); ++r) {
        std::vector<std::vector<Coalition>> level;
        for (Coalition group : structure.level(r)) {
            std::vector<Coalition> blocks;
            for (int j : group.members())
                blocks.push_back(base_blocks[static_cast<std::size_t>(j)]);
            level.push_back(std::move(blocks));
        }
        out.push_back(std::move(level));
    }
    return out;
}

std::vector<Coalition> immediate_players(Coalition s, const Partition& b)
{
    Mask covered = 0;
    std::vector<Coalition> out;
    for (Coalition block : canonical_partition(b)) {
        if (block.subset_of(s)) {
            out.push_back(block);
            covered |= block.mask();
        }
    }
    if (covered != s.mask())
        throw std::invalid_argument("immediate_players: S is not a union of blocks of B");
    return out;
}

} // namespace ciu
