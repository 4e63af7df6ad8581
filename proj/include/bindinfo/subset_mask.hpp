#ifndef BINDINFO_SUBSET_MASK_HPP
#define BINDINFO_SUBSET_MASK_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace bindinfo {

/*
 * Subset of variable indices, stored as a bitset.
 *
 * Variables are numbered 0..n-1 internally; bit i corresponds to variable i.
 * The CLI and file formats number variables from 1 and translate at the
 * boundary.  Up to 64 variables are representable, which covers both the
 * dense-table regime (K^N capped well below that) and the prover, which
 * manipulates subsets of up to ~40 variables without ever building tables.
 */
class SubsetMask {
public:
    constexpr SubsetMask() = default;
    constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

    static constexpr SubsetMask none() { return SubsetMask(0); }
    static constexpr SubsetMask single(int var) { return SubsetMask(std::uint64_t{1} << var); }
    static constexpr SubsetMask full(int n_vars) {
        return SubsetMask(n_vars >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_vars) - 1);
    }
    static SubsetMask of(std::initializer_list<int> vars) {
        std::uint64_t b = 0;
        for (int v : vars) b |= std::uint64_t{1} << v;
        return SubsetMask(b);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool contains(int var) const { return (bits_ >> var) & 1u; }
    constexpr bool subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
    constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
    constexpr SubsetMask without(SubsetMask o) const { return SubsetMask(bits_ & ~o.bits_); }
    constexpr bool operator==(const SubsetMask&) const = default;

    // Set bits in increasing variable order.
    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

} // namespace bindinfo

#endif // BINDINFO_SUBSET_MASK_HPP
