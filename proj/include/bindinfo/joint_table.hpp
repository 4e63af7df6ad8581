#ifndef BINDINFO_JOINT_TABLE_HPP
#define BINDINFO_JOINT_TABLE_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "bindinfo/errors.hpp"
#include "bindinfo/subset_mask.hpp"

namespace bindinfo {

/*
 * Dense joint distribution over N discrete variables sharing one alphabet
 * of K symbols (0..K-1).
 *
 * Indexing is little-endian mixed radix: variable 0 is the least significant
 * digit, so index = sum_i x_i * K^i.  This convention is fixed so that file
 * formats and tests are bit-exact.
 *
 * Tables are treated as immutable after construction; every operation on
 * them is a pure function.
 */

// One symbol per variable, in variable order.
using Configuration = std::vector<int>;

class Shape {
public:
    // Requires n_vars >= 1, alphabet_size >= 2 and K^N <= 2^28 (dense guardrail).
    Shape(int n_vars, int alphabet_size);

    int n_vars() const { return n_vars_; }
    int alphabet_size() const { return alphabet_size_; }
    std::int64_t state_count() const { return state_count_; }

    bool operator==(const Shape&) const = default;

    static constexpr std::int64_t max_state_count = std::int64_t{1} << 28;

private:
    int n_vars_;
    int alphabet_size_;
    std::int64_t state_count_;
};

struct JointTable {
    Shape shape;
    Eigen::ArrayXd probs;   // length shape.state_count(), nonnegative, sums to 1
};

// Mixed-radix index of a configuration (variable 0 least significant).
std::int64_t index_of(const Shape& shape, const Configuration& config);

// Inverse of index_of.
Configuration config_of(const Shape& shape, std::int64_t index);

// Validating constructor: clamps tiny negative noise (>= -1e-15) to zero,
// requires the sum within 1e-9 of one, then renormalizes exactly.
JointTable make_joint(const Shape& shape, const Eigen::ArrayXd& probs);
JointTable make_joint(const Shape& shape, const std::vector<double>& probs);

// Marginal over the kept variables, which keep their relative order.
// Mass is preserved; no renormalization is applied.
JointTable marginalize(const JointTable& joint, SubsetMask keep);

// Shannon entropy in bits of a nonnegative weight vector (0 log 0 = 0).
double shannon_entropy_bits(const Eigen::ArrayXd& probs);

namespace detail {
// Checks a mask against the table's variable count.
void require_valid_mask(const Shape& shape, SubsetMask mask, const char* what);
}

} // namespace bindinfo

#endif // BINDINFO_JOINT_TABLE_HPP
