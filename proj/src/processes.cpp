#include "bindinfo/processes.hpp"

#include <cmath>
#include <random>
#include <string>

#include "bindinfo/rng.hpp"

namespace bindinfo {

JointTable modulo_process(int n_vars, int alphabet_size, int residue) {
    Shape shape(n_vars, alphabet_size);
    if (residue < 0 || residue >= alphabet_size)
        throw InvalidResidue("residue " + std::to_string(residue) + " not in 0.." +
                             std::to_string(alphabet_size - 1));

    const std::int64_t support = shape.state_count() / alphabet_size;  // K^(N-1)
    const double mass = 1.0 / static_cast<double>(support);
    Eigen::ArrayXd probs = Eigen::ArrayXd::Zero(shape.state_count());
    for (std::int64_t index = 0; index < shape.state_count(); ++index) {
        std::int64_t rest = index;
        int sum = 0;
        for (int v = 0; v < n_vars; ++v) {
            sum += static_cast<int>(rest % alphabet_size);
            rest /= alphabet_size;
        }
        if (sum % alphabet_size == residue) probs[index] = mass;
    }
    return make_joint(shape, probs);
}

JointTable giant_bit_process(int n_vars, SubsetMask b_set) {
    Shape shape(n_vars, 2);
    detail::require_valid_mask(shape, b_set, "giant_bit_process");

    // With K = 2 the little-endian configuration index is the bitmask itself.
    const std::int64_t up = static_cast<std::int64_t>(b_set.bits());
    const std::int64_t down = static_cast<std::int64_t>(SubsetMask::full(n_vars).without(b_set).bits());
    Eigen::ArrayXd probs = Eigen::ArrayXd::Zero(shape.state_count());
    probs[up] += 0.5;
    probs[down] += 0.5;
    return make_joint(shape, probs);
}

JointTable independent_uniform(int n_vars, int alphabet_size) {
    Shape shape(n_vars, alphabet_size);
    const double mass = 1.0 / static_cast<double>(shape.state_count());
    return make_joint(shape, Eigen::ArrayXd::Constant(shape.state_count(), mass));
}

JointTable known_state(int n_vars, int alphabet_size, const Configuration& config) {
    Shape shape(n_vars, alphabet_size);
    Eigen::ArrayXd probs = Eigen::ArrayXd::Zero(shape.state_count());
    probs[index_of(shape, config)] = 1.0;
    return make_joint(shape, probs);
}

JointTable random_simplex(int n_vars, int alphabet_size, std::uint64_t seed) {
    Shape shape(n_vars, alphabet_size);
    std::mt19937_64 gen(seed);
    Eigen::ArrayXd probs(shape.state_count());
    for (std::int64_t i = 0; i < shape.state_count(); ++i)
        probs[i] = -std::log(detail::canonical_unit(gen));  // unit-rate exponential
    probs /= probs.sum();
    return make_joint(shape, probs);
}

} // namespace bindinfo
