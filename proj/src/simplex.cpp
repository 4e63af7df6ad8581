#include "bindinfo/simplex.hpp"

#include <cstddef>
#include <string>

#include "bindinfo/errors.hpp"

namespace bindinfo {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

} // namespace

ConeMembership solve_cone_membership(const std::vector<std::vector<Rational>>& generators,
                                     const std::vector<Rational>& target) {
    const std::size_t m = target.size();       // coordinates
    const std::size_t n = generators.size();   // cone generators
    for (const auto& g : generators)
        if (g.size() != m)
            throw DimensionMismatch("generator length does not match the target length");

    // Phase-one tableau: minimize the sum of m artificial variables subject
    // to  [generators | I] (y, s) = target,  y, s >= 0.  Rows whose right
    // side is negative are sign-flipped so the artificial basis is feasible.
    const std::size_t cols = n + m + 1;  // structural, artificial, right side
    const std::size_t rhs = n + m;
    std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols));
    std::vector<bool> flipped(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        flipped[i] = target[i] < 0;
        const int sign = flipped[i] ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * generators[j][i];
        t[i][n + i] = 1;
        t[i][rhs] = sign * target[i];
    }

    // Objective row holds reduced costs; with the all-artificial basis the
    // reduced cost of a structural column is minus its column sum, and the
    // entry under the right side is minus the current objective value.
    std::vector<Rational>& obj = t[m];
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) obj[j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i) obj[rhs] -= t[i][rhs];

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    while (true) {
        // Bland: entering column is the lowest index with a negative
        // reduced cost; no such column means phase one is optimal.
        std::size_t entering = cols;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (obj[j] < 0) {
                entering = j;
                break;
            }
        }
        if (entering == cols) break;

        // Ratio test; ties broken by the smallest basis index (Bland).
        std::size_t leaving = m + 1;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][entering] <= 0) continue;
            const Rational ratio = t[i][rhs] / t[i][entering];
            if (leaving == m + 1 || ratio < best ||
                (ratio == best && basis[i] < basis[leaving])) {
                leaving = i;
                best = ratio;
            }
        }
        if (leaving == m + 1)
            throw InternalError("phase-one objective unbounded; the tableau is corrupt");

        // Pivot.
        const Rational pivot = t[leaving][entering];
        for (std::size_t j = 0; j < cols; ++j) t[leaving][j] /= pivot;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leaving || t[i][entering] == 0) continue;
            const Rational factor = t[i][entering];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= factor * t[leaving][j];
        }
        basis[leaving] = entering;
    }

    ConeMembership result;
    result.member = (obj[rhs] == 0);

    if (result.member) {
        result.multipliers.assign(n, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) result.multipliers[basis[i]] = t[i][rhs];

        // The combination must reproduce the target exactly.
        for (std::size_t i = 0; i < m; ++i) {
            Rational combined = 0;
            for (std::size_t j = 0; j < n; ++j)
                combined += result.multipliers[j] * generators[j][i];
            if (combined != target[i])
                throw InternalError("simplex multipliers fail to recombine the target");
        }
        return result;
    }

    // Infeasible: the phase-one dual is read off the artificial reduced
    // costs, d_i = 1 - obj[n+i], undoing the row sign flips.  Its negation
    // satisfies every generator constraint and cuts the target.
    result.separating.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        const Rational d = 1 - obj[n + i];
        result.separating[i] = flipped[i] ? d : -d;
    }
    for (std::size_t j = 0; j < n; ++j)
        if (dot(result.separating, generators[j]) < 0)
            throw InternalError("separating vector violates generator " + std::to_string(j));
    if (dot(result.separating, target) >= 0)
        throw InternalError("separating vector fails to cut the target");
    return result;
}

} // namespace bindinfo
