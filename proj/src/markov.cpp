#include "bindinfo/markov.hpp"

#include <cmath>
#include <random>
#include <string>

#include "bindinfo/measures.hpp"
#include "bindinfo/rng.hpp"

namespace bindinfo {

namespace {

void require_row_stochastic(const Eigen::MatrixXd& transition) {
    if (transition.rows() < 1 || transition.rows() != transition.cols())
        throw NotStochastic("transition matrix must be square and nonempty");
    for (Eigen::Index r = 0; r < transition.rows(); ++r) {
        double sum = 0.0;
        for (Eigen::Index c = 0; c < transition.cols(); ++c) {
            if (transition(r, c) < 0.0)
                throw NotStochastic("negative transition probability at row " + std::to_string(r));
            sum += transition(r, c);
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw NotStochastic("row " + std::to_string(r) + " sums to " + std::to_string(sum));
    }
}

} // namespace

Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& transition) {
    require_row_stochastic(transition);
    const Eigen::Index k = transition.rows();

    // pi T = pi  <=>  (T' - I) pi = 0.  Rows of T sum to one, so T' - I is
    // always rank-deficient; a unique stationary distribution needs a null
    // space of dimension exactly one.
    const Eigen::MatrixXd a = transition.transpose() - Eigen::MatrixXd::Identity(k, k);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(1e-10);
    if (lu.rank() < k - 1)
        throw NonUniqueStationary("chain is reducible: stationary distribution is not unique");

    // Append the normalization constraint and solve by least squares.
    Eigen::MatrixXd system(k + 1, k);
    system.topRows(k) = a;
    system.row(k).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
    rhs(k) = 1.0;
    Eigen::VectorXd pi = system.colPivHouseholderQr().solve(rhs);

    for (Eigen::Index i = 0; i < k; ++i) {
        if (pi(i) < 0.0) {
            if (pi(i) < -1e-10)
                throw NonUniqueStationary("stationary solve produced negative mass");
            pi(i) = 0.0;
        }
    }
    pi /= pi.sum();
    if (((transition.transpose() * pi) - pi).cwiseAbs().maxCoeff() > 1e-10)
        throw NonUniqueStationary("stationary solve did not converge to pi T = pi");
    return pi;
}

MarkovModel::MarkovModel(Eigen::MatrixXd transition)
    : transition_(std::move(transition)), stationary_(stationary_distribution(transition_)) {}

double entropy_rate(const MarkovModel& model) {
    double h = 0.0;
    for (Eigen::Index r = 0; r < model.transition().rows(); ++r)
        h += model.stationary()(r) *
             shannon_entropy_bits(model.transition().row(r).transpose().array());
    return h;
}

double marginal_entropy(const MarkovModel& model) {
    return shannon_entropy_bits(model.stationary().array());
}

double block_entropy(const MarkovModel& model, int n) {
    if (n < 1) throw InvalidShape("block length must be >= 1");
    return marginal_entropy(model) + (n - 1) * entropy_rate(model);
}

JointTable block_joint(const MarkovModel& model, int n) {
    if (n < 1) throw InvalidShape("block length must be >= 1");
    const int k = model.alphabet_size();
    Shape shape = [&] {
        try {
            return Shape(n, k);
        } catch (const StateSpaceTooLarge&) {
            throw BlockTooLarge("K^n exceeds the dense-table guardrail for n = " +
                                std::to_string(n));
        }
    }();

    // Variable 0 (least significant digit) is the earliest symbol.
    Eigen::ArrayXd probs(shape.state_count());
    for (std::int64_t index = 0; index < shape.state_count(); ++index) {
        std::int64_t rest = index;
        int prev = static_cast<int>(rest % k);
        rest /= k;
        double p = model.stationary()(prev);
        for (int t = 1; t < n; ++t) {
            const int cur = static_cast<int>(rest % k);
            rest /= k;
            p *= model.transition()(prev, cur);
            prev = cur;
        }
        probs[index] = p;
    }
    return make_joint(shape, probs);
}

double multi_information_rate(const MarkovModel& model) {
    return marginal_entropy(model) - entropy_rate(model);
}

double excess_entropy_estimate(const MarkovModel& model, int n) {
    if (n < 1) throw InvalidShape("block length must be >= 1");
    const double h_n = shannon_entropy_bits(block_joint(model, n).probs);
    const double h_2n = shannon_entropy_bits(block_joint(model, 2 * n).probs);
    return 2.0 * h_n - h_2n;
}

double residual_rate(const MarkovModel& model) {
    // H(X_0 | X_-1, X_1) from the three-step joint; the nearest neighbours
    // screen off the rest of the chain.
    const JointTable three = block_joint(model, 3);
    return conditional_entropy(three, SubsetMask::single(1), SubsetMask::of({0, 2}));
}

double pir_rate(const MarkovModel& model) {
    const double b = entropy_rate(model) - residual_rate(model);
    if (b < -1e-9)
        throw InternalError("pir_rate came out " + std::to_string(b));
    return std::max(b, 0.0);
}

RateReport rate_report(const MarkovModel& model) {
    RateReport report;
    report.alphabet_size = model.alphabet_size();
    report.marginal_entropy = marginal_entropy(model);
    report.entropy_rate = entropy_rate(model);
    report.multi_information_rate = multi_information_rate(model);
    report.residual_rate = residual_rate(model);
    report.pir_rate = pir_rate(model);
    return report;
}

IdentityReport identity_checks(const MarkovModel& model, int n_max) {
    const double h = entropy_rate(model);
    const double rho = multi_information_rate(model);

    IdentityReport report;
    report.max_violation = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const JointTable block = block_joint(model, n);
        const double block_h = shannon_entropy_bits(block.probs);
        const double block_i = multi_information(block);

        IdentityCheck check;
        check.block_length = n;
        check.block_entropy = block_h;
        check.extensive_residual = std::abs(block_h - (n * h + rho));
        check.multi_information_residual = std::abs(block_i + rho - n * rho);
        report.max_violation = std::max({report.max_violation, check.extensive_residual,
                                         check.multi_information_residual});
        report.checks.push_back(check);
    }
    return report;
}

namespace {

int draw(const Eigen::VectorXd& weights, double u) {
    double acc = 0.0;
    const Eigen::Index k = weights.size();
    for (Eigen::Index i = 0; i < k; ++i) {
        acc += weights(i);
        if (u <= acc) return static_cast<int>(i);
    }
    return static_cast<int>(k - 1);  // guard against accumulated rounding
}

} // namespace

std::vector<int> sample_sequence(const MarkovModel& model, std::int64_t length,
                                 std::uint64_t seed) {
    if (length < 1) throw SequenceTooShort("sample length must be >= 1");
    std::mt19937_64 gen(seed);
    std::vector<int> symbols;
    symbols.reserve(static_cast<std::size_t>(length));
    int state = draw(model.stationary(), detail::canonical_unit(gen));
    symbols.push_back(state);
    for (std::int64_t t = 1; t < length; ++t) {
        state = draw(model.transition().row(state).transpose(), detail::canonical_unit(gen));
        symbols.push_back(state);
    }
    return symbols;
}

} // namespace bindinfo
