#ifndef BINDINFO_CLI_HPP
#define BINDINFO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bindinfo::cli {

/*
 * Command-line front end over every module, written against abstract
 * streams so tests can drive it in-process.
 *
 * args is argv without the program name.  `in` backs any input path given
 * as "-".  Exit status: 0 success, 1 input or usage error, 2 negative
 * domain result (refuted claim, violated bound).
 */
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace bindinfo::cli

#endif // BINDINFO_CLI_HPP
