#include "bindinfo/prover.hpp"

#include <algorithm>
#include <string>

#include "bindinfo/simplex.hpp"

namespace bindinfo {

std::vector<std::vector<Rational>> symmetric_cone_rows(int n_vars) {
    if (n_vars < 2) throw UnsupportedN("the symmetric cone needs at least two variables");
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(n_vars));
    for (int k = 1; k <= n_vars - 1; ++k) {
        std::vector<Rational> row(static_cast<std::size_t>(n_vars));
        row[static_cast<std::size_t>(k - 1)] = 2;
        if (k - 2 >= 0) row[static_cast<std::size_t>(k - 2)] = -1;  // h_0 = 0 drops out at k=1
        row[static_cast<std::size_t>(k)] = -1;
        rows.push_back(std::move(row));
    }
    std::vector<Rational> top(static_cast<std::size_t>(n_vars));
    top[static_cast<std::size_t>(n_vars - 1)] = 1;
    top[static_cast<std::size_t>(n_vars - 2)] = -1;
    rows.push_back(std::move(top));
    return rows;
}

std::vector<EntropyFunctional> elemental_cone(int n_vars) {
    if (n_vars < 2) throw UnsupportedN("the elemental cone needs at least two variables");
    if (n_vars > 6)
        throw TooManyVariables("the elemental cone has " + std::to_string(n_vars) +
                               " variables; the dense route stops at 6 (use the symmetric one)");

    std::vector<EntropyFunctional> cone;
    const SubsetMask all = SubsetMask::full(n_vars);

    for (int i = 0; i < n_vars; ++i) {
        EntropyFunctional f{n_vars, {}};
        add_term(f, all, 1);
        add_term(f, all.without(SubsetMask::single(i)), -1);
        cone.push_back(std::move(f));
    }

    for (int i = 0; i < n_vars; ++i) {
        for (int j = i + 1; j < n_vars; ++j) {
            const SubsetMask pair = SubsetMask::single(i) | SubsetMask::single(j);
            const SubsetMask rest = all.without(pair);
            // Enumerate S as a sub-bitmask of `rest` in increasing mask order.
            std::uint64_t s = 0;
            while (true) {
                const SubsetMask given(s);
                EntropyFunctional f{n_vars, {}};
                add_term(f, given | SubsetMask::single(i), 1);
                add_term(f, given | SubsetMask::single(j), 1);
                add_term(f, given, -1);
                add_term(f, given | pair, -1);
                cone.push_back(std::move(f));
                if (s == rest.bits()) break;
                s = (s - rest.bits()) & rest.bits();  // next sub-bitmask
            }
        }
    }
    return cone;
}

namespace {

std::vector<Rational> dense_symmetric(const SymmetricFunctional& f) {
    std::vector<Rational> t(static_cast<std::size_t>(f.n_vars));
    for (int k = 1; k <= f.n_vars; ++k)
        t[static_cast<std::size_t>(k - 1)] = f.coefficients[static_cast<std::size_t>(k)];
    return t;
}

std::vector<Rational> dense_general(const EntropyFunctional& f) {
    std::vector<Rational> t((std::uint64_t{1} << f.n_vars) - 1);
    for (const auto& [mask, c] : f.coefficients) t[mask - 1] = c;
    return t;
}

} // namespace

ProofResult prove_symmetric(const SymmetricFunctional& target) {
    const int n = target.n_vars;
    if (n < 2) throw UnsupportedN("proofs need at least two variables");
    if (static_cast<int>(target.coefficients.size()) != n + 1)
        throw DimensionMismatch("symmetric functional has the wrong coefficient count");

    const std::vector<std::vector<Rational>> rows = symmetric_cone_rows(n);
    const ConeMembership decision = solve_cone_membership(rows, dense_symmetric(target));

    ProofResult result;
    result.proven = decision.member;
    if (decision.member) {
        result.certificate = ProofCertificate{n, ConeKind::symmetric_reduced,
                                              decision.multipliers};
        if (!verify_certificate(target, result.certificate))
            throw InternalError("symmetric certificate failed its own verification");
        return result;
    }

    // The cone is simplicial: its extreme rays are r^j with r^j_k = min(j,k),
    // the entropy profiles of uniform distributions carried by j coordinates.
    // A functional negative anywhere on the cone is negative on some ray, so
    // the refutation is reported on the first such ray; this is independent
    // of the LP dual and doubles as a cross-check of the decision.
    for (int j = 1; j <= n; ++j) {
        std::vector<Rational> h(static_cast<std::size_t>(n) + 1);
        for (int k = 1; k <= n; ++k) h[static_cast<std::size_t>(k)] = std::min(j, k);
        const Rational value = evaluate_exact(target, h);
        if (value < 0) {
            result.refutation = Refutation{n, ConeKind::symmetric_reduced, std::move(h), value};
            return result;
        }
    }
    throw InternalError("LP refuted the target but every extreme ray is nonnegative");
}

ProofResult prove_general(const EntropyFunctional& target) {
    const int n = target.n_vars;
    if (n < 2) throw UnsupportedN("proofs need at least two variables");

    const std::vector<EntropyFunctional> cone = elemental_cone(n);
    std::vector<std::vector<Rational>> generators;
    generators.reserve(cone.size());
    for (const EntropyFunctional& g : cone) generators.push_back(dense_general(g));

    const ConeMembership decision = solve_cone_membership(generators, dense_general(target));

    ProofResult result;
    result.proven = decision.member;
    if (decision.member) {
        result.certificate = ProofCertificate{n, ConeKind::elemental, decision.multipliers};
        if (!verify_certificate(target, result.certificate))
            throw InternalError("elemental certificate failed its own verification");
        return result;
    }

    Refutation refutation{n, ConeKind::elemental, decision.separating, 0};
    refutation.target_value = 0;
    const std::vector<Rational> t = dense_general(target);
    for (std::size_t i = 0; i < t.size(); ++i)
        refutation.target_value += t[i] * refutation.coordinates[i];
    result.refutation = std::move(refutation);
    return result;
}

bool verify_certificate(const SymmetricFunctional& target, const ProofCertificate& certificate) {
    if (certificate.cone != ConeKind::symmetric_reduced)
        throw DimensionMismatch("certificate was issued for a different constraint cone");
    if (certificate.n_vars != target.n_vars)
        throw DimensionMismatch("certificate for " + std::to_string(certificate.n_vars) +
                                " variables applied to a " + std::to_string(target.n_vars) +
                                "-variable target");
    const std::vector<std::vector<Rational>> rows = symmetric_cone_rows(target.n_vars);
    if (certificate.multipliers.size() != rows.size())
        throw DimensionMismatch("certificate multiplier count does not match the cone");

    for (const Rational& y : certificate.multipliers)
        if (y < 0) return false;

    const std::vector<Rational> t = dense_symmetric(target);
    for (std::size_t coord = 0; coord < t.size(); ++coord) {
        Rational combined = 0;
        for (std::size_t j = 0; j < rows.size(); ++j)
            combined += certificate.multipliers[j] * rows[j][coord];
        if (combined != t[coord]) return false;
    }
    return true;
}

bool verify_certificate(const EntropyFunctional& target, const ProofCertificate& certificate) {
    if (certificate.cone != ConeKind::elemental)
        throw DimensionMismatch("certificate was issued for a different constraint cone");
    if (certificate.n_vars != target.n_vars)
        throw DimensionMismatch("certificate for " + std::to_string(certificate.n_vars) +
                                " variables applied to a " + std::to_string(target.n_vars) +
                                "-variable target");
    const std::vector<EntropyFunctional> cone = elemental_cone(target.n_vars);
    if (certificate.multipliers.size() != cone.size())
        throw DimensionMismatch("certificate multiplier count does not match the cone");

    for (const Rational& y : certificate.multipliers)
        if (y < 0) return false;

    EntropyFunctional combined{target.n_vars, {}};
    for (std::size_t j = 0; j < cone.size(); ++j)
        for (const auto& [mask, c] : cone[j].coefficients)
            add_term(combined, SubsetMask(mask), certificate.multipliers[j] * c);
    return combined.coefficients == target.coefficients;
}

} // namespace bindinfo
