#include "bindinfo/bounds.hpp"

#include <cmath>

#include "bindinfo/measures.hpp"
#include "bindinfo/processes.hpp"

namespace bindinfo {

namespace {

BoundRecord record(std::string name, double lhs, double rhs) {
    return BoundRecord{std::move(name), lhs, rhs, rhs - lhs, rhs - lhs >= -1e-9};
}

// Uniform mass on the K configurations where every variable shows the same
// symbol; the K-ary analogue of the two-configuration binary pair.
JointTable shared_symbol_process(int n_vars, int alphabet_size) {
    Shape shape(n_vars, alphabet_size);
    Eigen::ArrayXd probs = Eigen::ArrayXd::Zero(shape.state_count());
    const double mass = 1.0 / static_cast<double>(alphabet_size);
    for (int symbol = 0; symbol < alphabet_size; ++symbol)
        probs[index_of(shape, Configuration(static_cast<std::size_t>(n_vars), symbol))] = mass;
    return make_joint(shape, probs);
}

} // namespace

BoundsReport check_bounds(const JointTable& joint) {
    const int n = joint.shape.n_vars();
    const double logk = std::log2(static_cast<double>(joint.shape.alphabet_size()));
    const double capacity = n * logk;

    const double h = shannon_entropy_bits(joint.probs);
    const double i = multi_information(joint);
    const double b = binding_information(joint);

    BoundsReport report;
    report.n_vars = n;
    report.alphabet_size = joint.shape.alphabet_size();
    report.joint_entropy = h;
    report.multi_information = i;
    report.binding_information = b;

    report.records.push_back(record("I<=N*logK-H", i, capacity - h));
    report.records.push_back(record("I<=(N-1)*H", i, (n - 1) * h));
    report.records.push_back(record("B<=H", b, h));
    report.records.push_back(record("B<=(N-1)*(N*logK-H)", b, (n - 1) * (capacity - h)));
    report.records.push_back(record("I+B<=N*logK", i + b, capacity));
    report.records.push_back(record("I<=(N-1)*B", i, (n - 1) * b));
    report.records.push_back(record("B<=(N-1)*I", b, (n - 1) * i));

    report.all_satisfied = true;
    for (const BoundRecord& r : report.records) report.all_satisfied &= r.satisfied;
    return report;
}

std::vector<CornerPoint> corner_points(int n_vars, int alphabet_size) {
    if (n_vars < 2)
        throw UnsupportedN("corner points need at least two variables");

    const auto measure = [](const char* label, const JointTable& joint) {
        return CornerPoint{label, shannon_entropy_bits(joint.probs), multi_information(joint),
                           binding_information(joint)};
    };

    std::vector<CornerPoint> corners;
    corners.push_back(measure(
        "known", known_state(n_vars, alphabet_size,
                             Configuration(static_cast<std::size_t>(n_vars), 0))));
    corners.push_back(
        measure(alphabet_size == 2 ? "giant_bit" : "shared_symbol",
                alphabet_size == 2 ? giant_bit_process(n_vars, SubsetMask::full(n_vars))
                                   : shared_symbol_process(n_vars, alphabet_size)));
    corners.push_back(measure("modulo", modulo_process(n_vars, alphabet_size, 0)));
    corners.push_back(measure("independent", independent_uniform(n_vars, alphabet_size)));
    return corners;
}

} // namespace bindinfo
