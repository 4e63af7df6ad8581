#include "bindinfo/maximizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <utility>

#include "bindinfo/measures.hpp"
#include "bindinfo/processes.hpp"

namespace bindinfo {

namespace {

constexpr double kGradientFloor = 1e-12;
constexpr std::int64_t kMaxOptimizerStates = std::int64_t{1} << 14;
constexpr double kCapSlack = 1e-4;

// Marginal of a weight vector with variable `drop` summed out, indexed by
// the remaining digits in order (little-endian).
Eigen::ArrayXd drop_marginal(const Shape& shape, const Eigen::ArrayXd& weights, int drop,
                             std::int64_t low) {
    const std::int64_t block = low * shape.alphabet_size();
    Eigen::ArrayXd out = Eigen::ArrayXd::Zero(shape.state_count() / shape.alphabet_size());
    for (std::int64_t idx = 0; idx < shape.state_count(); ++idx)
        out[idx % low + (idx / block) * low] += weights[idx];
    return out;
}

Eigen::ArrayXd gradient_bits(Objective objective, const Shape& shape, const Eigen::ArrayXd& p) {
    const Eigen::ArrayXd floored = p.max(kGradientFloor);
    const double own_weight = objective == Objective::binding ? shape.n_vars() - 1.0 : 1.0;
    Eigen::ArrayXd grad = own_weight * (1.0 + floored.log());
    std::int64_t low = 1;
    for (int drop = 0; drop < shape.n_vars(); ++drop) {
        if (objective == Objective::binding) {
            const Eigen::ArrayXd rest = drop_marginal(shape, floored, drop, low);
            const std::int64_t block = low * shape.alphabet_size();
            for (std::int64_t idx = 0; idx < shape.state_count(); ++idx)
                grad[idx] -= 1.0 + std::log(rest[idx % low + (idx / block) * low]);
        } else {
            Eigen::ArrayXd single = Eigen::ArrayXd::Zero(shape.alphabet_size());
            for (std::int64_t idx = 0; idx < shape.state_count(); ++idx)
                single[(idx / low) % shape.alphabet_size()] += floored[idx];
            for (std::int64_t idx = 0; idx < shape.state_count(); ++idx)
                grad[idx] -= 1.0 + std::log(single[(idx / low) % shape.alphabet_size()]);
        }
        low *= shape.alphabet_size();
    }
    return grad / std::numbers::ln2;
}

double objective_bits(Objective objective, const Shape& shape, const Eigen::ArrayXd& p) {
    const JointTable view{shape, p};
    return objective == Objective::binding ? binding_information(view) : multi_information(view);
}

struct AscentRun {
    double value;
    Eigen::ArrayXd p;
    int iterations;
    bool converged;
};

AscentRun ascend(Objective objective, const Shape& shape, Eigen::ArrayXd p,
                 const MaximizeConfig& config, double cap) {
    double value = objective_bits(objective, shape, p);
    double eta = 1.0;
    int iterations = 0;
    bool converged = false;
    while (iterations < config.max_iters) {
        const Eigen::ArrayXd grad = gradient_bits(objective, shape, p);
        const double drift = (p * grad).sum();
        const double residual = std::sqrt((p * (grad - drift)).square().sum());
        if (residual < config.tol || value >= cap - kCapSlack) {
            converged = true;
            break;
        }
        bool accepted = false;
        while (eta >= 1e-14) {
            Eigen::ArrayXd trial = p * ((grad - grad.maxCoeff()) * eta).exp();
            trial /= trial.sum();
            const double trial_value = objective_bits(objective, shape, trial);
            if (trial_value > value) {
                p = std::move(trial);
                value = trial_value;
                eta = std::min(eta * 1.25, 64.0);
                accepted = true;
                break;
            }
            eta *= 0.5;
        }
        if (!accepted) break;  // no improving step at any scale
        ++iterations;
    }
    return {value, std::move(p), iterations, converged};
}

} // namespace

Eigen::ArrayXd binding_gradient(const JointTable& joint) {
    return gradient_bits(Objective::binding, joint.shape, joint.probs);
}

Eigen::ArrayXd multi_information_gradient(const JointTable& joint) {
    return gradient_bits(Objective::multi, joint.shape, joint.probs);
}

OptimizationResult maximize(Objective objective, int n_vars, int alphabet_size,
                            const MaximizeConfig& config) {
    const Shape shape(n_vars, alphabet_size);
    if (shape.state_count() > kMaxOptimizerStates)
        throw StateSpaceTooLarge("optimization limited to K^N <= 2^14 states");
    if (config.restarts < 1) throw InvalidShape("restarts must be positive");
    if (config.max_iters < 1) throw InvalidShape("max_iters must be positive");
    if (!(config.tol > 0.0)) throw InvalidShape("tol must be positive");

    const double cap = (n_vars - 1) * std::log2(static_cast<double>(alphabet_size));
    std::optional<AscentRun> best;
    for (int restart = 0; restart < config.restarts; ++restart) {
        const std::uint64_t derived =
            config.seed + std::uint64_t{1000003} * static_cast<std::uint64_t>(restart);
        AscentRun run = ascend(objective, shape,
                               random_simplex(n_vars, alphabet_size, derived).probs, config, cap);
        if (!best || run.value > best->value ||
            (run.value == best->value && run.iterations < best->iterations))
            best = std::move(run);
    }
    return {best->value, JointTable{shape, std::move(best->p)}, best->iterations,
            config.restarts, best->converged};
}

OptimumDiagnosis classify_optimum(const JointTable& table, double tol) {
    const int n = table.shape.n_vars();
    double max_tv = 0.0;
    double max_cond = 0.0;
    for (int i = 0; i < n; ++i) {
        const SubsetMask rest = SubsetMask::full(n).without(SubsetMask::single(i));
        const JointTable marginal = marginalize(table, rest);
        const double uniform = 1.0 / static_cast<double>(marginal.shape.state_count());
        max_tv = std::max(max_tv, 0.5 * (marginal.probs - uniform).abs().sum());
        max_cond = std::max(max_cond, conditional_entropy(table, SubsetMask::single(i), rest));
    }
    return {max_tv <= tol, max_tv, max_cond < tol, max_cond};
}

} // namespace bindinfo
