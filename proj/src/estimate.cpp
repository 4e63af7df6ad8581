#include "bindinfo/estimate.hpp"

#include <charconv>
#include <fstream>
#include <istream>

#include "bindinfo/measures.hpp"

namespace bindinfo {

SymbolSequence read_sequence(std::istream& in, int alphabet_size) {
    if (alphabet_size < 2) throw InvalidShape("alphabet_size must be at least 2");
    SymbolSequence seq{{}, alphabet_size};
    std::string token;
    while (in >> token) {
        int value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || end != token.data() + token.size())
            throw IoError("not an integer symbol: '" + token + "'");
        if (value < 0 || value >= alphabet_size)
            throw SymbolOutOfRange("symbol " + token + " outside 0.." +
                                   std::to_string(alphabet_size - 1));
        seq.symbols.push_back(value);
    }
    if (in.bad()) throw IoError("read failure");
    if (seq.symbols.empty()) throw EmptyFile("no symbols in input");
    return seq;
}

SymbolSequence read_sequence(const std::string& path, int alphabet_size) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_sequence(in, alphabet_size);
}

EmpiricalBlockModel empirical_blocks(const SymbolSequence& seq, int block_length) {
    if (block_length < 1) throw InvalidShape("block_length must be positive");
    const auto length = static_cast<std::int64_t>(seq.symbols.size());
    if (length < block_length)
        throw SequenceTooShort("sequence of length " + std::to_string(length) +
                               " has no window of length " + std::to_string(block_length));
    const int k = seq.alphabet_size;
    std::int64_t states = 1;
    for (int i = 0; i < block_length; ++i) {
        states *= k;
        if (states > Shape::max_state_count)
            throw BlockTooLarge("K^n exceeds the dense guardrail");
    }

    EmpiricalBlockModel model{block_length, k,
                              std::vector<std::int64_t>(static_cast<std::size_t>(states), 0),
                              length - block_length + 1};
    // Sliding mixed-radix window index; the leading symbol of the window is
    // the least significant digit.
    const std::int64_t top = states / k;
    std::int64_t index = 0;
    for (std::int64_t t = 0; t < length; ++t) {
        const int symbol = seq.symbols[static_cast<std::size_t>(t)];
        if (symbol < 0 || symbol >= k) throw SymbolOutOfRange("symbol outside the alphabet");
        index = index / k + symbol * top;
        if (t >= block_length - 1) ++model.counts[static_cast<std::size_t>(index)];
    }
    return model;
}

JointTable to_joint(const EmpiricalBlockModel& model) {
    const Shape shape(model.block_length, model.alphabet_size);
    Eigen::ArrayXd probs(shape.state_count());
    for (std::int64_t i = 0; i < shape.state_count(); ++i)
        probs[i] = static_cast<double>(model.counts[static_cast<std::size_t>(i)]) /
                   static_cast<double>(model.total_windows);
    return make_joint(shape, probs);
}

EstimatedRates estimated_rates(const SymbolSequence& seq, int n_max) {
    if (n_max < 2) throw InvalidShape("n_max must be at least 2");

    // H(n) for n = 1..2 n_max straight from the window counts.
    std::vector<double> entropy_by_length(static_cast<std::size_t>(2 * n_max));
    for (int n = 1; n <= 2 * n_max; ++n) {
        const EmpiricalBlockModel model = empirical_blocks(seq, n);
        Eigen::ArrayXd weights(static_cast<std::int64_t>(model.counts.size()));
        for (std::size_t i = 0; i < model.counts.size(); ++i)
            weights[static_cast<std::int64_t>(i)] = static_cast<double>(model.counts[i]);
        const double total = static_cast<double>(model.total_windows);
        entropy_by_length[static_cast<std::size_t>(n - 1)] =
            shannon_entropy_bits((weights / total).eval());
    }

    EstimatedRates rates{seq.alphabet_size, static_cast<std::int64_t>(seq.symbols.size()),
                         {}, {}, {}, {}, 0.0};
    double previous_multi = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const double h_n = entropy_by_length[static_cast<std::size_t>(n - 1)];
        const double h_prev = n == 1 ? 0.0 : entropy_by_length[static_cast<std::size_t>(n - 2)];
        rates.block_entropy.push_back(h_n);
        rates.entropy_rate.push_back(h_n - h_prev);
        rates.excess_entropy.push_back(2.0 * h_n -
                                       entropy_by_length[static_cast<std::size_t>(2 * n - 1)]);
        const double multi =
            n == 1 ? 0.0 : multi_information(to_joint(empirical_blocks(seq, n)));
        rates.multi_information_rate.push_back(multi - previous_multi);
        previous_multi = multi;
    }
    rates.block_binding = binding_information(to_joint(empirical_blocks(seq, n_max)));
    return rates;
}

} // namespace bindinfo
