#ifndef BINDINFO_ERRORS_HPP
#define BINDINFO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bindinfo {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define BINDINFO_DEFINE_ERROR(Name)                                \
    struct Name : Error {                                          \
        explicit Name(const std::string& msg) : Error(msg) {}      \
    }

// Table and shape validation
BINDINFO_DEFINE_ERROR(InvalidShape);
BINDINFO_DEFINE_ERROR(ShapeMismatch);
BINDINFO_DEFINE_ERROR(NotADistribution);
BINDINFO_DEFINE_ERROR(InvalidSymbol);
BINDINFO_DEFINE_ERROR(StateSpaceTooLarge);

// Subset / ordering arguments
BINDINFO_DEFINE_ERROR(EmptySubset);
BINDINFO_DEFINE_ERROR(OverlappingSubsets);
BINDINFO_DEFINE_ERROR(NotAPermutation);

// Process constructors
BINDINFO_DEFINE_ERROR(InvalidResidue);

// Markov chains
BINDINFO_DEFINE_ERROR(NotStochastic);
BINDINFO_DEFINE_ERROR(NonUniqueStationary);
BINDINFO_DEFINE_ERROR(BlockTooLarge);

// Prover
BINDINFO_DEFINE_ERROR(UnsupportedN);
BINDINFO_DEFINE_ERROR(NotSymmetric);
BINDINFO_DEFINE_ERROR(TooManyVariables);
BINDINFO_DEFINE_ERROR(DimensionMismatch);

// Sequence ingestion
BINDINFO_DEFINE_ERROR(IoError);
BINDINFO_DEFINE_ERROR(SymbolOutOfRange);
BINDINFO_DEFINE_ERROR(EmptyFile);
BINDINFO_DEFINE_ERROR(SequenceTooShort);

// Raised when a float result violates a mathematical identity by more than
// the internal tolerance gate (1e-9); indicates a bug, not bad input.
BINDINFO_DEFINE_ERROR(InternalError);

#undef BINDINFO_DEFINE_ERROR

} // namespace bindinfo

#endif // BINDINFO_ERRORS_HPP
