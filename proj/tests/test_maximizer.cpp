#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "bindinfo/maximizer.hpp"
#include "bindinfo/measures.hpp"
#include "bindinfo/processes.hpp"

using namespace bindinfo;

namespace {

// Independent finite-difference oracle: the function the analytic gradient
// differentiates, extended off the simplex by treating entries as raw
// weights (entropies of unnormalized sums, no renormalization).
double extended_objective(Objective objective, const Shape& shape, const Eigen::ArrayXd& w) {
    const int n = shape.n_vars();
    const int k = shape.alphabet_size();
    double total = 0.0;
    if (objective == Objective::binding) {
        for (int drop = 0; drop < n; ++drop) {
            const Shape reduced(n - 1, k);
            Eigen::ArrayXd m = Eigen::ArrayXd::Zero(reduced.state_count());
            for (std::int64_t idx = 0; idx < shape.state_count(); ++idx) {
                Configuration c = config_of(shape, idx);
                c.erase(c.begin() + drop);
                m[index_of(reduced, c)] += w[idx];
            }
            total += shannon_entropy_bits(m);
        }
        total -= (n - 1) * shannon_entropy_bits(w);
    } else {
        for (int i = 0; i < n; ++i) {
            Eigen::ArrayXd m = Eigen::ArrayXd::Zero(k);
            for (std::int64_t idx = 0; idx < shape.state_count(); ++idx)
                m[config_of(shape, idx)[static_cast<std::size_t>(i)]] += w[idx];
            total += shannon_entropy_bits(m);
        }
        total -= shannon_entropy_bits(w);
    }
    return total;
}

// Interior point: a uniform-simplex draw mixed halfway with uniform, so
// every entry is at least 1/(2 K^N) and the gradient floor stays inert.
JointTable interior_point(int n, int k, std::uint64_t seed) {
    const JointTable draw = random_simplex(n, k, seed);
    const double uniform = 1.0 / static_cast<double>(draw.shape.state_count());
    return make_joint(draw.shape, (0.5 * draw.probs + 0.5 * uniform).eval());
}

double stationarity_residual(const JointTable& joint, const Eigen::ArrayXd& grad) {
    const double drift = (joint.probs * grad).sum();
    return std::sqrt((joint.probs * (grad - drift)).square().sum());
}

} // namespace

TEST_CASE("gradient components coincide at the uniform table") {
    for (const auto [n, k] : {std::pair{2, 2}, std::pair{3, 3}}) {
        const JointTable uniform = independent_uniform(n, k);
        const Eigen::ArrayXd gb = binding_gradient(uniform);
        const Eigen::ArrayXd gm = multi_information_gradient(uniform);
        CHECK(gb.maxCoeff() - gb.minCoeff() < 1e-12);
        CHECK(gm.maxCoeff() - gm.minCoeff() < 1e-12);
    }
}

TEST_CASE("analytic gradients match central finite differences") {
    const double step = 1e-6;
    int points = 0;
    std::uint64_t seed = 700000;
    for (const auto [n, k] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}}) {
        const int trials = n == 2 ? 13 : 12;
        for (int trial = 0; trial < trials; ++trial) {
            const JointTable joint = interior_point(n, k, seed++);
            ++points;
            for (const Objective objective : {Objective::binding, Objective::multi}) {
                const Eigen::ArrayXd grad = objective == Objective::binding
                                                ? binding_gradient(joint)
                                                : multi_information_gradient(joint);
                double worst = 0.0;
                for (std::int64_t x = 0; x < joint.shape.state_count(); ++x) {
                    Eigen::ArrayXd lo = joint.probs;
                    Eigen::ArrayXd hi = joint.probs;
                    lo[x] -= step;
                    hi[x] += step;
                    const double fd = (extended_objective(objective, joint.shape, hi) -
                                       extended_objective(objective, joint.shape, lo)) /
                                      (2.0 * step);
                    worst = std::max(worst, std::abs(fd - grad[x]));
                }
                CHECK(worst < 1e-5);
            }
        }
    }
    CHECK(points == 50);
}

TEST_CASE("binding gradient is near-stationary at the floored even-sum table") {
    const JointTable parity = modulo_process(3, 2, 0);
    const JointTable floored = make_joint(parity.shape, parity.probs.max(1e-12).eval());
    CHECK(stationarity_residual(floored, binding_gradient(floored)) < 1e-3);
}

TEST_CASE("longer ascent never loses value") {
    MaximizeConfig config;
    config.restarts = 1;
    config.seed = 42;
    double last = -1.0;
    for (const int iters : {1, 2, 5, 10, 50, 200, 2000}) {
        config.max_iters = iters;
        const OptimizationResult result = maximize(Objective::binding, 3, 2, config);
        CHECK(result.best_value >= last);
        CHECK(result.iterations <= iters);
        last = result.best_value;
    }
}

TEST_CASE("mirror ascent approaches the binding cap") {
    MaximizeConfig config;
    config.seed = 7;

    const OptimizationResult r32 = maximize(Objective::binding, 3, 2, config);
    CHECK(r32.best_value >= 1.99);
    CHECK(r32.best_value <= 2.0 + 1e-6);
    CHECK(r32.converged);
    CHECK(r32.restarts_used == 20);
    CHECK(r32.best_value == doctest::Approx(binding_information(r32.best_table)).epsilon(1e-12));
    CHECK(r32.best_table.probs.sum() == doctest::Approx(1.0).epsilon(1e-12));

    const double cap33 = 2.0 * std::log2(3.0);
    const OptimizationResult r33 = maximize(Objective::binding, 3, 3, config);
    CHECK(r33.best_value >= 0.99 * cap33);
    CHECK(r33.best_value <= cap33 + 1e-6);

    const OptimizationResult r42 = maximize(Objective::binding, 4, 2, config);
    CHECK(r42.best_value >= 0.99 * 3.0);
    CHECK(r42.best_value <= 3.0 + 1e-6);
}

TEST_CASE("mirror ascent approaches the multi-information cap") {
    MaximizeConfig config;
    config.seed = 7;
    const OptimizationResult result = maximize(Objective::multi, 4, 2, config);
    CHECK(result.best_value >= 2.97);
    CHECK(result.best_value <= 3.0 + 1e-6);
    CHECK(result.best_value == doctest::Approx(multi_information(result.best_table)).epsilon(1e-12));
}

TEST_CASE("maximize is deterministic for a fixed seed") {
    MaximizeConfig config;
    config.restarts = 5;
    config.seed = 99;
    const OptimizationResult a = maximize(Objective::binding, 3, 2, config);
    const OptimizationResult b = maximize(Objective::binding, 3, 2, config);
    CHECK(a.best_value == b.best_value);
    CHECK(a.iterations == b.iterations);
    CHECK(a.converged == b.converged);
    CHECK((a.best_table.probs == b.best_table.probs).all());
}

TEST_CASE("optimum classification separates the canonical maximizers") {
    const OptimumDiagnosis parity = classify_optimum(modulo_process(3, 2, 0), 1e-9);
    CHECK(parity.pseudo_independent);
    CHECK(parity.max_marginal_deviation == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(parity.deterministic_given_rest);
    CHECK(parity.max_conditional_entropy == doctest::Approx(0.0).epsilon(1e-12));

    const OptimumDiagnosis giant = classify_optimum(giant_bit_process(3, SubsetMask::full(3)), 0.02);
    CHECK(!giant.pseudo_independent);
    CHECK(giant.max_marginal_deviation == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(giant.deterministic_given_rest);

    const OptimumDiagnosis indep = classify_optimum(independent_uniform(3, 2), 0.02);
    CHECK(indep.pseudo_independent);
    CHECK(!indep.deterministic_given_rest);
    CHECK(indep.max_conditional_entropy == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("converged binding optimum is pseudo-independent") {
    MaximizeConfig config;
    config.seed = 7;
    const OptimizationResult result = maximize(Objective::binding, 3, 2, config);
    REQUIRE(result.converged);
    const OptimumDiagnosis diagnosis = classify_optimum(result.best_table, 0.02);
    CHECK(diagnosis.pseudo_independent);
}

TEST_CASE("maximize rejects oversized spaces and bad configuration") {
    CHECK_THROWS_AS(maximize(Objective::binding, 15, 2, {}), StateSpaceTooLarge);
    CHECK_THROWS_AS(maximize(Objective::multi, 8, 4, {}), StateSpaceTooLarge);

    MaximizeConfig bad;
    bad.restarts = 0;
    CHECK_THROWS_AS(maximize(Objective::binding, 3, 2, bad), InvalidShape);
    bad = {};
    bad.max_iters = 0;
    CHECK_THROWS_AS(maximize(Objective::binding, 3, 2, bad), InvalidShape);
    bad = {};
    bad.tol = 0.0;
    CHECK_THROWS_AS(maximize(Objective::binding, 3, 2, bad), InvalidShape);
}
