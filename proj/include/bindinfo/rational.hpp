#ifndef BINDINFO_RATIONAL_HPP
#define BINDINFO_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace bindinfo {

// Exact rational scalar for the certificate layer.  Everything the prover
// touches stays in this type; floats never enter a proof or a refutation.
using Rational = boost::multiprecision::cpp_rational;

} // namespace bindinfo

#endif // BINDINFO_RATIONAL_HPP
