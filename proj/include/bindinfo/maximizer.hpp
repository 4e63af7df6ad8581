#ifndef BINDINFO_MAXIMIZER_HPP
#define BINDINFO_MAXIMIZER_HPP

#include <cstdint>

#include <Eigen/Core>

#include "bindinfo/joint_table.hpp"

namespace bindinfo {

/*
 * Numerical maximization of binding information and multi-information over
 * the simplex of joint tables, by mirror ascent: exponentiated-gradient
 * steps with a backtracking step size, restarted from seeded uniform-simplex
 * draws because neither objective is concave.
 *
 * The global optima sit on the simplex boundary where the log diverges, so
 * gradients are taken on a copy floored at 1e-12 and success is measured
 * against the theoretical cap (N-1) log2 K rather than as an exact hit.
 */

enum class Objective { binding, multi };

struct MaximizeConfig {
    int restarts = 20;
    int max_iters = 2000;
    double tol = 1e-6;
    std::uint64_t seed = 0;
};

struct OptimizationResult {
    double best_value;   // bits
    JointTable best_table;
    int iterations;      // accepted ascent steps of the winning restart
    int restarts_used;
    bool converged;
};

struct OptimumDiagnosis {
    bool pseudo_independent;        // every (N-1)-marginal within TV tol of uniform
    double max_marginal_deviation;  // largest such total-variation distance
    bool deterministic_given_rest;  // every H(X_i | rest) < tol
    double max_conditional_entropy;
};

// Gradient of binding information in bits per unit probability, one entry
// per configuration; probabilities are floored at 1e-12 before the logs.
Eigen::ArrayXd binding_gradient(const JointTable& joint);

// Same for multi-information.
Eigen::ArrayXd multi_information_gradient(const JointTable& joint);

// Best of config.restarts mirror-ascent runs, each started from the seeded
// uniform-simplex draw for seed + 1000003 * restart.  Converged means the
// mass-weighted projected gradient fell below tol or the value came within
// 1e-4 bits of the cap.  Ties between restarts break to the higher value,
// then fewer iterations, then the earlier restart.
// Requires K^N <= 2^14 (optimization guardrail).
OptimizationResult maximize(Objective objective, int n_vars, int alphabet_size,
                            const MaximizeConfig& config = {});

// Structure report for a candidate binding maximizer: how far the
// (N-1)-marginals are from uniform (total variation) and how far each
// H(X_i | rest) is from zero.
OptimumDiagnosis classify_optimum(const JointTable& table, double tol);

} // namespace bindinfo

#endif // BINDINFO_MAXIMIZER_HPP
