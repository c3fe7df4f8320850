/** @file rng.hpp
 *  @brief Small deterministic RNG used everywhere randomness is needed.
 *
 *  splitmix64 core with explicit bounded/uniform helpers, so that seeded
 *  runs are bit-reproducible across platforms and standard-library
 *  versions (std distributions are implementation-defined).
 */

#ifndef CIU_RNG_HPP
#define CIU_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace ciu {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n), n > 0.
    std::uint32_t bounded(std::uint32_t n)
    {
        return static_cast<std::uint32_t>((next_u64() >> 32) * n >> 32);
    }

    /// Uniform double in [0, 1).
    double uniform()
    {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (two draws per call).
    double normal()
    {
        double u1 = uniform();
        while (u1 <= 0.0)
            u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    template <typename T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[bounded(static_cast<std::uint32_t>(i))]);
    }

    /// Independent stream for a keyed subtask (per tree, per chunk, ...).
    Rng fork(std::uint64_t key) const
    {
        Rng r(state_ ^ (0x6a09e667f3bcc909ull + key * 0x9e3779b97f4a7c15ull));
        r.next_u64();
        return r;
    }

private:
    std::uint64_t state_;
};

} // namespace ciu

#endif // CIU_RNG_HPP
