#include "bindinfo/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

namespace bindinfo {

namespace {

double read_double(std::istream& in, const char* what) {
    double value = 0.0;
    if (!(in >> value)) throw IoError(std::string("expected a number: ") + what);
    return value;
}

std::int64_t read_integer(std::istream& in, const char* what) {
    std::int64_t value = 0;
    if (!(in >> value)) throw IoError(std::string("expected an integer: ") + what);
    return value;
}

} // namespace

JointTable read_joint_table(std::istream& in) {
    const std::int64_t n = read_integer(in, "variable count N");
    const std::int64_t k = read_integer(in, "alphabet size K");
    if (n < 1 || n > 64 || k < 2)
        throw IoError("joint-table header must be N >= 1 and K >= 2");
    const Shape shape(static_cast<int>(n), static_cast<int>(k));
    Eigen::ArrayXd probs(shape.state_count());
    for (std::int64_t i = 0; i < shape.state_count(); ++i)
        probs[i] = read_double(in, "probability entry");
    return make_joint(shape, probs);
}

JointTable read_joint_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_joint_table(in);
}

void write_joint_table(std::ostream& out, const JointTable& joint) {
    out << joint.shape.n_vars() << ' ' << joint.shape.alphabet_size() << '\n';
    for (std::int64_t i = 0; i < joint.shape.state_count(); ++i)
        out << format_number(joint.probs[i]) << '\n';
}

MarkovModel read_transition(std::istream& in) {
    const std::int64_t k = read_integer(in, "state count K");
    if (k < 1 || k > 4096) throw IoError("transition header must be 1 <= K <= 4096");
    Eigen::MatrixXd t(k, k);
    for (std::int64_t r = 0; r < k; ++r)
        for (std::int64_t c = 0; c < k; ++c) t(r, c) = read_double(in, "transition entry");
    return MarkovModel(t);
}

MarkovModel read_transition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_transition(in);
}

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

} // namespace bindinfo
