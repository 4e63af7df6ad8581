#ifndef BINDINFO_MARKOV_HPP
#define BINDINFO_MARKOV_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "bindinfo/joint_table.hpp"

namespace bindinfo {

/*
 * Analytic asymptotic rates for stationary first-order Markov chains, with
 * finite-block brute-force cross-checks.  The chain is described by a
 * K x K row-stochastic transition matrix (row = current symbol) and its
 * stationary distribution.  Rates are in bits per step.
 *
 * For first-order chains the asymptotic limits collapse to closed forms:
 * block entropy is H(1) + (n-1) h, the excess entropy equals the
 * multi-information rate, and the residual rate needs only the three-step
 * joint, because conditioning on the two neighbours of a symbol is the same
 * as conditioning on the entire past and future.
 */

class MarkovModel {
public:
    // Validates row-stochasticity and solves for the unique stationary
    // distribution; throws NotStochastic / NonUniqueStationary.
    explicit MarkovModel(Eigen::MatrixXd transition);

    int alphabet_size() const { return static_cast<int>(transition_.rows()); }
    const Eigen::MatrixXd& transition() const { return transition_; }
    const Eigen::VectorXd& stationary() const { return stationary_; }

private:
    Eigen::MatrixXd transition_;
    Eigen::VectorXd stationary_;
};

struct RateReport {
    int alphabet_size;
    double marginal_entropy;        // H(1), entropy of the stationary distribution
    double entropy_rate;            // h
    double multi_information_rate;  // rho = H(1) - h (equals excess entropy here)
    double residual_rate;           // r = H(X_0 | X_-1, X_1)
    double pir_rate;                // b = h - r
};

struct IdentityCheck {
    int block_length;
    double block_entropy;            // brute-force H(n)
    double extensive_residual;       // |H(n) - (n h + rho)|
    double multi_information_residual;  // |I(X_1..n) + rho - n rho|
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    double max_violation;
};

// pi with pi T = pi, found by a rank-revealing linear solve; throws
// NonUniqueStationary when the chain is reducible (reported, never averaged).
Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& transition);

double entropy_rate(const MarkovModel& model);
double marginal_entropy(const MarkovModel& model);

// Analytic block entropy H(n) = H(1) + (n-1) h.
double block_entropy(const MarkovModel& model, int n);

// Brute-force joint over n consecutive symbols:
// p(x_1..x_n) = pi(x_1) T(x_1,x_2) ... T(x_{n-1},x_n).
JointTable block_joint(const MarkovModel& model, int n);

double multi_information_rate(const MarkovModel& model);

// 2 H(n) - H(2n) from brute-force blocks; constant in n for these chains.
double excess_entropy_estimate(const MarkovModel& model, int n);

double residual_rate(const MarkovModel& model);
double pir_rate(const MarkovModel& model);

RateReport rate_report(const MarkovModel& model);

// Verifies, for n = 1..n_max against brute-force blocks, the extensive
// entropy decomposition H(n) = n h + I_pred(n) and the multi-information
// counterpart I(X_1..n) + I_pred(n) = n rho, with I_pred(n) = rho here.
IdentityReport identity_checks(const MarkovModel& model, int n_max);

// Stationary sample path: the first symbol is drawn from pi, later ones
// from the transition rows.  Deterministic for a fixed seed.
std::vector<int> sample_sequence(const MarkovModel& model, std::int64_t length,
                                 std::uint64_t seed);

} // namespace bindinfo

#endif // BINDINFO_MARKOV_HPP
