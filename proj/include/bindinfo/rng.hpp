#ifndef BINDINFO_RNG_HPP
#define BINDINFO_RNG_HPP

#include <random>

namespace bindinfo::detail {

// Uniform double in (0, 1] from a mt19937_64 draw.  The mapping is pinned
// here rather than taken from std::uniform_real_distribution so seeded
// output is identical across standard-library implementations.
inline double canonical_unit(std::mt19937_64& gen) {
    return (static_cast<double>(gen() >> 11) + 1.0) * 0x1p-53;
}

} // namespace bindinfo::detail

#endif // BINDINFO_RNG_HPP
