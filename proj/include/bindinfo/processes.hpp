#ifndef BINDINFO_PROCESSES_HPP
#define BINDINFO_PROCESSES_HPP

#include <cstdint>

#include "bindinfo/joint_table.hpp"

namespace bindinfo {

/*
 * Canonical distributions: the structured processes used as corner cases
 * and tightness witnesses, plus a seeded uniform-simplex sampler for
 * empirical probing.  All constructors are pure; randomness enters only
 * through the caller's seed.
 */

// Uniform probability K^(1-N) on every configuration whose symbol sum is
// congruent to m mod K; for K=2 these are the even/odd parity processes.
JointTable modulo_process(int n_vars, int alphabet_size, int residue);

// Binary only: probability 1/2 on the configuration with x_i = 1 iff i is
// in b_set, and 1/2 on its bitwise complement.
JointTable giant_bit_process(int n_vars, SubsetMask b_set);

// Every configuration has probability K^(-N).
JointTable independent_uniform(int n_vars, int alphabet_size);

// Point mass on one configuration.
JointTable known_state(int n_vars, int alphabet_size, const Configuration& config);

// One draw from the uniform distribution on the probability simplex
// (normalized unit-rate exponentials); deterministic for a fixed seed.
JointTable random_simplex(int n_vars, int alphabet_size, std::uint64_t seed);

} // namespace bindinfo

#endif // BINDINFO_PROCESSES_HPP
