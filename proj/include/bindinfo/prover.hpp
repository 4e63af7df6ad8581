#ifndef BINDINFO_PROVER_HPP
#define BINDINFO_PROVER_HPP

#include <vector>

#include "bindinfo/entropy_functional.hpp"
#include "bindinfo/rational.hpp"

namespace bindinfo {

/*
 * Per-N certification that an entropy functional is nonnegative on every
 * distribution, by exhibiting it as a nonnegative combination of polymatroid
 * constraints (a proof), or a point of the constraint cone where it goes
 * negative (a refutation).  Exact rationals end to end: the decision can
 * never be lost to rounding, whatever N.
 *
 * Two routes:
 *
 *  - prove_symmetric works in the per-size coordinates h_1..h_N after
 *    permutation averaging.  The cone there has N generators: size-wise
 *    submodularity  2h_k - h_{k-1} - h_{k+1} >= 0  (k = 1..N-1, h_0 = 0)
 *    and top monotonicity  h_N - h_{N-1} >= 0.  This scales to large N.
 *
 *  - prove_general works over all 2^N - 1 subset entropies with the full
 *    elemental cone (conditional single-variable entropies and conditional
 *    pairwise informations).  Exponential in N, capped at N <= 6; it is the
 *    independent oracle the symmetric reduction is tested against.
 */

enum class ConeKind { symmetric_reduced, elemental };

struct ProofCertificate {
    int n_vars;
    ConeKind cone;
    // One multiplier per cone constraint, in the order the builders below
    // emit them; all nonnegative in a valid certificate.
    std::vector<Rational> multipliers;
};

struct Refutation {
    int n_vars;
    ConeKind cone;
    // A pseudo-entropy vector satisfying every cone constraint on which the
    // target evaluates strictly negative.  Symmetric route: h_0..h_N with
    // h_0 = 0.  Elemental route: one value per nonempty subset, index
    // mask - 1.
    std::vector<Rational> coordinates;
    Rational target_value;
};

struct ProofResult {
    bool proven;
    ProofCertificate certificate;  // meaningful when proven
    Refutation refutation;         // meaningful when not
};

// Symmetric cone constraints as rows over h_1..h_N (index k-1): the N-1
// submodularity rows in size order, then the top monotonicity row.
std::vector<std::vector<Rational>> symmetric_cone_rows(int n_vars);

// Elemental cone over nonempty subsets: H(X_i | rest) >= 0 for each i in
// increasing order, then I(X_i; X_j | X_S) >= 0 for i < j in lexicographic
// order with S running over subsets of the remaining variables in
// increasing mask order.
std::vector<EntropyFunctional> elemental_cone(int n_vars);

ProofResult prove_symmetric(const SymmetricFunctional& target);
ProofResult prove_general(const EntropyFunctional& target);

// Recomputes the certificate combination exactly, independent of the LP.
// True iff all multipliers are nonnegative and the combination equals the
// target coefficient by coefficient.
bool verify_certificate(const SymmetricFunctional& target, const ProofCertificate& certificate);
bool verify_certificate(const EntropyFunctional& target, const ProofCertificate& certificate);

} // namespace bindinfo

#endif // BINDINFO_PROVER_HPP
