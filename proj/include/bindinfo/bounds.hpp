#ifndef BINDINFO_BOUNDS_HPP
#define BINDINFO_BOUNDS_HPP

#include <string>
#include <vector>

#include "bindinfo/joint_table.hpp"

namespace bindinfo {

/*
 * Linear bounds tying the joint entropy H, the multi-information I and the
 * binding information B of N variables on a K-symbol alphabet.  Five follow
 * from classical entropy inequalities; the two cross bounds I <= (N-1)B and
 * B <= (N-1)I are certified per-N by the prover module.
 */

struct BoundRecord {
    std::string name;   // compact inequality text, e.g. "B<=(N-1)*I"
    double lhs;         // bits
    double rhs;         // bits
    double margin;      // rhs - lhs
    bool satisfied;     // margin >= -1e-9
};

struct BoundsReport {
    int n_vars;
    int alphabet_size;
    double joint_entropy;
    double multi_information;
    double binding_information;
    std::vector<BoundRecord> records;  // all seven, fixed order
    bool all_satisfied;
};

struct CornerPoint {
    std::string label;
    double joint_entropy;
    double multi_information;
    double binding_information;
};

// Evaluates all seven inequalities on one distribution and reports margins.
BoundsReport check_bounds(const JointTable& joint);

// The four labelled extreme distributions of the feasible region, computed
// by constructing each process and measuring it (never from formulas):
// known state (0,0,0); shared symbol (log K, (N-1)log K, log K); modulo
// ((N-1)log K, log K, (N-1)log K); independent uniform (N log K, 0, 0).
std::vector<CornerPoint> corner_points(int n_vars, int alphabet_size);

} // namespace bindinfo

#endif // BINDINFO_BOUNDS_HPP
