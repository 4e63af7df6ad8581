#ifndef BINDINFO_SIMPLEX_HPP
#define BINDINFO_SIMPLEX_HPP

#include <vector>

#include "bindinfo/rational.hpp"

namespace bindinfo {

/*
 * Exact conic-membership oracle.  Decides whether
 *
 *     target = sum_j y_j * generators[j]   with every y_j >= 0
 *
 * has a solution, by a phase-one simplex over rationals with Bland's
 * anti-cycling rule.  There is no floating-point phase, so the answer is a
 * decision, not an approximation.
 *
 * On membership, `multipliers` holds one y per generator.  Otherwise
 * `separating` holds a vector with <separating, g> >= 0 for every generator
 * and <separating, target> < 0; both facts are re-verified exactly before
 * the result is returned.
 */

struct ConeMembership {
    bool member;
    std::vector<Rational> multipliers;  // size generators.size() when member
    std::vector<Rational> separating;   // size target.size() when !member
};

ConeMembership solve_cone_membership(const std::vector<std::vector<Rational>>& generators,
                                     const std::vector<Rational>& target);

} // namespace bindinfo

#endif // BINDINFO_SIMPLEX_HPP
