#include "bindinfo/entropy_functional.hpp"

#include <string>

#include "bindinfo/measures.hpp"

namespace bindinfo {

void add_term(EntropyFunctional& functional, SubsetMask subset, const Rational& c) {
    if (subset.empty()) return;  // H(empty) = 0 contributes nothing
    auto [it, inserted] = functional.coefficients.try_emplace(subset.bits(), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) functional.coefficients.erase(it);
    } else if (it->second == 0) {
        functional.coefficients.erase(it);
    }
}

EntropyFunctional multi_information_functional(int n_vars) {
    if (n_vars < 2) throw UnsupportedN("measure functionals need at least two variables");
    EntropyFunctional f{n_vars, {}};
    for (int i = 0; i < n_vars; ++i) add_term(f, SubsetMask::single(i), 1);
    add_term(f, SubsetMask::full(n_vars), -1);
    return f;
}

EntropyFunctional binding_functional(int n_vars) {
    if (n_vars < 2) throw UnsupportedN("measure functionals need at least two variables");
    EntropyFunctional f{n_vars, {}};
    const SubsetMask all = SubsetMask::full(n_vars);
    for (int i = 0; i < n_vars; ++i) add_term(f, all.without(SubsetMask::single(i)), 1);
    add_term(f, all, -(n_vars - 1));
    return f;
}

EntropyFunctional combine(const Rational& a, const EntropyFunctional& f, const Rational& b,
                          const EntropyFunctional& g) {
    if (f.n_vars != g.n_vars)
        throw DimensionMismatch("cannot combine functionals over " + std::to_string(f.n_vars) +
                                " and " + std::to_string(g.n_vars) + " variables");
    EntropyFunctional out{f.n_vars, {}};
    for (const auto& [mask, c] : f.coefficients)
        add_term(out, SubsetMask(mask), a * c);
    for (const auto& [mask, c] : g.coefficients)
        add_term(out, SubsetMask(mask), b * c);
    return out;
}

EntropyFunctional functional_from_measure(int n_vars, MeasureTarget which) {
    const EntropyFunctional b = binding_functional(n_vars);
    const EntropyFunctional i = multi_information_functional(n_vars);
    switch (which) {
        case MeasureTarget::scaled_binding_minus_multi:
            return combine(n_vars - 1, b, -1, i);
        case MeasureTarget::scaled_multi_minus_binding:
            return combine(n_vars - 1, i, -1, b);
        case MeasureTarget::multi_minus_binding:
            return combine(1, i, -1, b);
        case MeasureTarget::binding_minus_multi:
            return combine(1, b, -1, i);
    }
    throw InternalError("unhandled measure target");
}

double evaluate_bits(const EntropyFunctional& functional, const JointTable& joint) {
    if (functional.n_vars != joint.shape.n_vars())
        throw DimensionMismatch("functional over " + std::to_string(functional.n_vars) +
                                " variables applied to a " +
                                std::to_string(joint.shape.n_vars()) + "-variable table");
    double value = 0.0;
    for (const auto& [mask, c] : functional.coefficients)
        value += static_cast<double>(c) * entropy(joint, SubsetMask(mask));
    return value;
}

namespace {

// Swaps variable positions a and b inside a subset mask.
std::uint64_t transpose_mask(std::uint64_t mask, int a, int b) {
    const bool in_a = (mask >> a) & 1u;
    const bool in_b = (mask >> b) & 1u;
    if (in_a == in_b) return mask;
    return mask ^ ((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
}

} // namespace

SymmetricFunctional symmetrize(const EntropyFunctional& functional) {
    // Invariance under the adjacent transpositions generates invariance
    // under the whole symmetric group.
    for (int t = 0; t + 1 < functional.n_vars; ++t) {
        for (const auto& [mask, c] : functional.coefficients) {
            const std::uint64_t swapped = transpose_mask(mask, t, t + 1);
            const auto other = functional.coefficients.find(swapped);
            if (other == functional.coefficients.end() || other->second != c)
                throw NotSymmetric("coefficient on one subset changes when variables " +
                                   std::to_string(t + 1) + " and " + std::to_string(t + 2) +
                                   " are swapped");
        }
    }

    SymmetricFunctional out{functional.n_vars,
                            std::vector<Rational>(static_cast<std::size_t>(functional.n_vars) + 1)};
    for (const auto& [mask, c] : functional.coefficients)
        out.coefficients[static_cast<std::size_t>(SubsetMask(mask).count())] += c;
    return out;
}

Rational evaluate_exact(const SymmetricFunctional& functional, const std::vector<Rational>& h) {
    if (h.size() != functional.coefficients.size())
        throw DimensionMismatch("pseudo-entropy vector length does not match the functional");
    Rational value = 0;
    for (std::size_t k = 1; k < h.size(); ++k) value += functional.coefficients[k] * h[k];
    return value;
}

} // namespace bindinfo
