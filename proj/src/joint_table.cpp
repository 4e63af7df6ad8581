#include "bindinfo/joint_table.hpp"

#include <cmath>
#include <string>

namespace bindinfo {

Shape::Shape(int n_vars, int alphabet_size)
    : n_vars_(n_vars), alphabet_size_(alphabet_size), state_count_(1) {
    if (n_vars < 1)
        throw InvalidShape("n_vars must be >= 1, got " + std::to_string(n_vars));
    if (alphabet_size < 2)
        throw InvalidShape("alphabet_size must be >= 2, got " + std::to_string(alphabet_size));
    for (int i = 0; i < n_vars_; ++i) {
        state_count_ *= alphabet_size_;
        if (state_count_ > max_state_count)
            throw StateSpaceTooLarge("K^N exceeds dense-table guardrail 2^28: K=" +
                                     std::to_string(alphabet_size) + " N=" + std::to_string(n_vars));
    }
}

std::int64_t index_of(const Shape& shape, const Configuration& config) {
    if (static_cast<int>(config.size()) != shape.n_vars())
        throw ShapeMismatch("configuration has " + std::to_string(config.size()) +
                            " symbols, shape expects " + std::to_string(shape.n_vars()));
    std::int64_t index = 0;
    std::int64_t weight = 1;
    for (int i = 0; i < shape.n_vars(); ++i) {
        const int x = config[static_cast<std::size_t>(i)];
        if (x < 0 || x >= shape.alphabet_size())
            throw InvalidSymbol("symbol " + std::to_string(x) + " out of range for K=" +
                                std::to_string(shape.alphabet_size()));
        index += weight * x;
        weight *= shape.alphabet_size();
    }
    return index;
}

Configuration config_of(const Shape& shape, std::int64_t index) {
    if (index < 0 || index >= shape.state_count())
        throw InvalidSymbol("index " + std::to_string(index) + " out of range");
    Configuration config(static_cast<std::size_t>(shape.n_vars()));
    for (int i = 0; i < shape.n_vars(); ++i) {
        config[static_cast<std::size_t>(i)] = static_cast<int>(index % shape.alphabet_size());
        index /= shape.alphabet_size();
    }
    return config;
}

JointTable make_joint(const Shape& shape, const Eigen::ArrayXd& probs) {
    if (probs.size() != shape.state_count())
        throw ShapeMismatch("probability array has " + std::to_string(probs.size()) +
                            " entries, shape expects " + std::to_string(shape.state_count()));
    Eigen::ArrayXd p = probs;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p[i] < 0.0) {
            if (p[i] < -1e-15)
                throw NotADistribution("negative probability " + std::to_string(p[i]) +
                                       " at index " + std::to_string(i));
            p[i] = 0.0;  // tiny float noise
        }
    }
    const double sum = p.sum();
    if (std::abs(sum - 1.0) > 1e-9)
        throw NotADistribution("probabilities sum to " + std::to_string(sum));
    p /= sum;
    return JointTable{shape, std::move(p)};
}

JointTable make_joint(const Shape& shape, const std::vector<double>& probs) {
    return make_joint(shape, Eigen::Map<const Eigen::ArrayXd>(
                                 probs.data(), static_cast<Eigen::Index>(probs.size())));
}

namespace detail {

void require_valid_mask(const Shape& shape, SubsetMask mask, const char* what) {
    if (!mask.subset_of(SubsetMask::full(shape.n_vars())))
        throw InvalidSymbol(std::string(what) + ": mask names variables beyond n_vars");
}

} // namespace detail

JointTable marginalize(const JointTable& joint, SubsetMask keep) {
    const Shape& shape = joint.shape;
    detail::require_valid_mask(shape, keep, "marginalize");
    if (keep.empty())
        throw EmptySubset("marginalize: keep must name at least one variable");

    if (keep == SubsetMask::full(shape.n_vars()))
        return joint;

    const int k = shape.alphabet_size();
    // weight[v] = K^(position of v among kept variables), 0 for dropped ones
    std::vector<std::int64_t> weight(static_cast<std::size_t>(shape.n_vars()), 0);
    std::int64_t w = 1;
    for (int v : keep.indices()) {
        weight[static_cast<std::size_t>(v)] = w;
        w *= k;
    }

    Shape reduced(keep.count(), k);
    Eigen::ArrayXd out = Eigen::ArrayXd::Zero(reduced.state_count());
    for (std::int64_t index = 0; index < shape.state_count(); ++index) {
        std::int64_t rest = index;
        std::int64_t reduced_index = 0;
        for (int v = 0; v < shape.n_vars(); ++v) {
            reduced_index += weight[static_cast<std::size_t>(v)] * (rest % k);
            rest /= k;
        }
        out[reduced_index] += joint.probs[index];
    }
    return JointTable{reduced, std::move(out)};
}

double shannon_entropy_bits(const Eigen::ArrayXd& probs) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
        const double p = probs[i];
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

} // namespace bindinfo
