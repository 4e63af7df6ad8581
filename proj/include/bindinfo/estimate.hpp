#ifndef BINDINFO_ESTIMATE_HPP
#define BINDINFO_ESTIMATE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bindinfo/joint_table.hpp"

namespace bindinfo {

/*
 * Plug-in estimation from observed symbol sequences: block distributions by
 * overlapping-window counting (no wraparound), and the derived entropy and
 * information rates.  Maximum-likelihood only; no bias correction.
 */

struct SymbolSequence {
    std::vector<int> symbols;  // each in 0..alphabet_size-1
    int alphabet_size;
};

struct EmpiricalBlockModel {
    int block_length;
    int alphabet_size;
    std::vector<std::int64_t> counts;  // per block index, sums to total_windows
    std::int64_t total_windows;        // sequence_length - block_length + 1
};

// Per-block-length plug-in estimates, indexed by n-1 for n = 1..n_max.
struct EstimatedRates {
    int alphabet_size;
    std::int64_t sequence_length;
    std::vector<double> block_entropy;           // H(n)
    std::vector<double> entropy_rate;            // h(n) = H(n) - H(n-1)
    std::vector<double> excess_entropy;          // E(n) = 2 H(n) - H(2n)
    std::vector<double> multi_information_rate;  // rho(n) = I(1..n) - I(1..n-1)
    double block_binding;                        // binding information of the n_max block
};

// Whitespace-separated integers; rejects symbols outside 0..k-1.
SymbolSequence read_sequence(std::istream& in, int alphabet_size);
SymbolSequence read_sequence(const std::string& path, int alphabet_size);

// Counts of every overlapping n-window (sequence must be at least n long).
EmpiricalBlockModel empirical_blocks(const SymbolSequence& seq, int block_length);

// counts / total_windows as a validated joint table over n block positions.
JointTable to_joint(const EmpiricalBlockModel& model);

// Rates for n = 1..n_max; needs blocks up to length 2 n_max, so the sequence
// must be at least that long and K^(2 n_max) must fit the dense guardrail.
EstimatedRates estimated_rates(const SymbolSequence& seq, int n_max);

} // namespace bindinfo

#endif // BINDINFO_ESTIMATE_HPP
