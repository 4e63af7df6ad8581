#ifndef BINDINFO_MEASURES_HPP
#define BINDINFO_MEASURES_HPP

#include <vector>

#include "bindinfo/joint_table.hpp"

namespace bindinfo {

/*
 * Exact finite-set information measures, all in bits (log base 2).
 *
 * Conditional quantities are computed as differences of marginal entropies,
 * never by explicit conditioning, so zero-probability conditioning events
 * need no special casing.  Results that are nonnegative by theory are
 * clamped to zero when float cancellation leaves them within -1e-9; anything
 * below that gate throws InternalError.
 */

struct MeasureReport {
    int n_vars;
    int alphabet_size;
    double joint_entropy;
    double multi_information;
    double binding_information;
    double residual_entropy;                     // joint_entropy - binding_information
    std::vector<double> per_variable_entropies;
};

// H(X_subset) of the marginal on `subset`, in [0, |subset| * log2 K].
double entropy(const JointTable& joint, SubsetMask subset);

// H(target | given) = H(target u given) - H(given); given may be empty.
double conditional_entropy(const JointTable& joint, SubsetMask target, SubsetMask given);

// I(a ; b | given); a, b, given pairwise disjoint, given may be empty.
double mutual_information(const JointTable& joint, SubsetMask a, SubsetMask b,
                          SubsetMask given = SubsetMask::none());

// sum_i H(X_i) - H(X_all); zero iff the variables are independent.
double multi_information(const JointTable& joint);

// H(X_all) - sum_i H(X_i | rest), via the marginal form
// sum_i H(X_{all\i}) - (N-1) H(X_all).
double binding_information(const JointTable& joint);

// sum_i H(X_i | rest) = H - B.
double residual_entropy(const JointTable& joint);

// Per-step information profile along an ordering (0-based permutation of
// 0..N-1): element t is I(X_ord[t] ; X_ord[t+1..] | X_ord[..t-1]).
// The final element is exactly 0 (empty future).
std::vector<double> pir_profile(const JointTable& joint, const std::vector<int>& ordering);

// Sum of pir_profile; equals binding_information for every ordering.
double binding_by_accumulation(const JointTable& joint, const std::vector<int>& ordering);

MeasureReport measure_report(const JointTable& joint);

} // namespace bindinfo

#endif // BINDINFO_MEASURES_HPP
