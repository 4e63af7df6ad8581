#ifndef BINDINFO_IO_HPP
#define BINDINFO_IO_HPP

#include <iosfwd>
#include <string>

#include "bindinfo/joint_table.hpp"
#include "bindinfo/markov.hpp"

namespace bindinfo {

/*
 * Text formats shared by the CLI and any file-based caller.
 *
 * Joint table: header line "N K", then K^N whitespace-separated
 * probabilities in index order (variable 0 least significant).
 *
 * Transition matrix: header line "K", then K rows of K probabilities.
 *
 * Numbers are written with 12 significant digits, which sits below every
 * documented tolerance and keeps output byte-stable.
 */

JointTable read_joint_table(std::istream& in);
JointTable read_joint_table(const std::string& path);
void write_joint_table(std::ostream& out, const JointTable& joint);

MarkovModel read_transition(std::istream& in);
MarkovModel read_transition(const std::string& path);

// %.12g, the one number format used everywhere.
std::string format_number(double value);

} // namespace bindinfo

#endif // BINDINFO_IO_HPP
