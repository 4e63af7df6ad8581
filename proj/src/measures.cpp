#include "bindinfo/measures.hpp"

#include <algorithm>
#include <string>

namespace bindinfo {

namespace {

// Gate for float cancellation: theory says the value is >= 0.
double clamp_nonnegative(double value, const char* what) {
    if (value < -1e-9)
        throw InternalError(std::string(what) + " came out " + std::to_string(value) +
                            ", beyond the -1e-9 float-noise gate");
    return std::max(value, 0.0);
}

// H of a possibly-empty subset; H(empty) = 0.
double subset_entropy(const JointTable& joint, SubsetMask subset) {
    if (subset.empty()) return 0.0;
    if (subset == SubsetMask::full(joint.shape.n_vars()))
        return shannon_entropy_bits(joint.probs);
    return shannon_entropy_bits(marginalize(joint, subset).probs);
}

} // namespace

double entropy(const JointTable& joint, SubsetMask subset) {
    detail::require_valid_mask(joint.shape, subset, "entropy");
    if (subset.empty())
        throw EmptySubset("entropy: subset must be nonempty");
    return clamp_nonnegative(subset_entropy(joint, subset), "entropy");
}

double conditional_entropy(const JointTable& joint, SubsetMask target, SubsetMask given) {
    detail::require_valid_mask(joint.shape, target | given, "conditional_entropy");
    if (target.empty())
        throw EmptySubset("conditional_entropy: target must be nonempty");
    if (!(target & given).empty())
        throw OverlappingSubsets("conditional_entropy: target and given overlap");
    const double h = subset_entropy(joint, target | given) - subset_entropy(joint, given);
    return clamp_nonnegative(h, "conditional_entropy");
}

double mutual_information(const JointTable& joint, SubsetMask a, SubsetMask b, SubsetMask given) {
    detail::require_valid_mask(joint.shape, a | b | given, "mutual_information");
    if (a.empty() || b.empty())
        throw EmptySubset("mutual_information: both subsets must be nonempty");
    if (!(a & b).empty() || !(a & given).empty() || !(b & given).empty())
        throw OverlappingSubsets("mutual_information: subsets must be pairwise disjoint");
    const double mi = subset_entropy(joint, a | given) + subset_entropy(joint, b | given) -
                      subset_entropy(joint, given) - subset_entropy(joint, a | b | given);
    return clamp_nonnegative(mi, "mutual_information");
}

double multi_information(const JointTable& joint) {
    const int n = joint.shape.n_vars();
    double sum_singletons = 0.0;
    for (int i = 0; i < n; ++i)
        sum_singletons += subset_entropy(joint, SubsetMask::single(i));
    const double value = sum_singletons - shannon_entropy_bits(joint.probs);
    return clamp_nonnegative(value, "multi_information");
}

double binding_information(const JointTable& joint) {
    const int n = joint.shape.n_vars();
    const SubsetMask all = SubsetMask::full(n);
    double sum_leave_one_out = 0.0;
    for (int i = 0; i < n; ++i) {
        const SubsetMask rest = all.without(SubsetMask::single(i));
        sum_leave_one_out += subset_entropy(joint, rest);
    }
    const double value = sum_leave_one_out - (n - 1) * shannon_entropy_bits(joint.probs);
    return clamp_nonnegative(value, "binding_information");
}

double residual_entropy(const JointTable& joint) {
    const double r = shannon_entropy_bits(joint.probs) - binding_information(joint);
    return clamp_nonnegative(r, "residual_entropy");
}

namespace {

void require_permutation(int n, const std::vector<int>& ordering) {
    if (static_cast<int>(ordering.size()) != n)
        throw NotAPermutation("ordering has " + std::to_string(ordering.size()) +
                              " entries, expected " + std::to_string(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : ordering) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw NotAPermutation("ordering is not a permutation of 0.." + std::to_string(n - 1));
        seen[static_cast<std::size_t>(v)] = true;
    }
}

} // namespace

std::vector<double> pir_profile(const JointTable& joint, const std::vector<int>& ordering) {
    const int n = joint.shape.n_vars();
    require_permutation(n, ordering);

    std::vector<double> profile(static_cast<std::size_t>(n), 0.0);
    SubsetMask past = SubsetMask::none();
    SubsetMask future = SubsetMask::full(n);
    for (int t = 0; t < n; ++t) {
        const SubsetMask present = SubsetMask::single(ordering[static_cast<std::size_t>(t)]);
        future = future.without(present);
        // Empty future: the conditional mutual information is vacuously 0.
        profile[static_cast<std::size_t>(t)] =
            future.empty() ? 0.0 : mutual_information(joint, present, future, past);
        past = past | present;
    }
    return profile;
}

double binding_by_accumulation(const JointTable& joint, const std::vector<int>& ordering) {
    double total = 0.0;
    for (double step : pir_profile(joint, ordering)) total += step;
    return total;
}

MeasureReport measure_report(const JointTable& joint) {
    const int n = joint.shape.n_vars();
    MeasureReport report;
    report.n_vars = n;
    report.alphabet_size = joint.shape.alphabet_size();
    report.joint_entropy = shannon_entropy_bits(joint.probs);
    report.multi_information = multi_information(joint);
    report.binding_information = binding_information(joint);
    report.residual_entropy =
        clamp_nonnegative(report.joint_entropy - report.binding_information, "residual_entropy");
    report.per_variable_entropies.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        report.per_variable_entropies.push_back(entropy(joint, SubsetMask::single(i)));
    return report;
}

} // namespace bindinfo
