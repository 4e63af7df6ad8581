#ifndef BINDINFO_ENTROPY_FUNCTIONAL_HPP
#define BINDINFO_ENTROPY_FUNCTIONAL_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "bindinfo/joint_table.hpp"
#include "bindinfo/rational.hpp"

namespace bindinfo {

/*
 * Linear functionals over subset entropies, sum_S c_S * H(X_S), with exact
 * rational coefficients.  The structure measures are such functionals:
 *
 *   I = sum_i H({i}) - H(all)
 *   B = sum_i H(all minus i) - (N-1) H(all)
 *
 * and the cross inequalities between them, (N-1)B - I >= 0 and
 * (N-1)I - B >= 0, are claims that a functional is nonnegative over every
 * distribution; the prover decides those claims per N.
 */

struct EntropyFunctional {
    int n_vars;
    // nonempty-subset mask -> coefficient; exact zeros are never stored
    std::map<std::uint64_t, Rational> coefficients;
};

// Permutation-symmetric reduction: one coefficient per subset size, against
// coordinates h_k = common entropy of any k-subset.
struct SymmetricFunctional {
    int n_vars;
    std::vector<Rational> coefficients;  // size n_vars + 1; index k; [0] stays 0
};

// The named nonnegativity targets.
enum class MeasureTarget {
    scaled_binding_minus_multi,  // (N-1)B - I
    scaled_multi_minus_binding,  // (N-1)I - B
    multi_minus_binding,         // I - B  (refutable for N >= 3)
    binding_minus_multi,         // B - I  (refutable for N >= 3)
};

// Accumulates c on the subset's coefficient, erasing it if the sum is 0.
void add_term(EntropyFunctional& functional, SubsetMask subset, const Rational& c);

EntropyFunctional multi_information_functional(int n_vars);
EntropyFunctional binding_functional(int n_vars);

// a*f + b*g; throws DimensionMismatch when f and g disagree on n_vars.
EntropyFunctional combine(const Rational& a, const EntropyFunctional& f, const Rational& b,
                          const EntropyFunctional& g);

EntropyFunctional functional_from_measure(int n_vars, MeasureTarget which);

// Float evaluation sum_S c_S H(X_S) in bits on a concrete distribution.
double evaluate_bits(const EntropyFunctional& functional, const JointTable& joint);

// Collapses a permutation-invariant functional to per-size coefficients
// c_k = sum over k-subsets; invariance is checked exactly and its absence
// is an error, never silently averaged.
SymmetricFunctional symmetrize(const EntropyFunctional& functional);

// Exact evaluation against a symmetric pseudo-entropy vector h[0..N], h[0]=0.
Rational evaluate_exact(const SymmetricFunctional& functional, const std::vector<Rational>& h);

} // namespace bindinfo

#endif // BINDINFO_ENTROPY_FUNCTIONAL_HPP
