#pragma once

#include <stdexcept>
#include <string>

namespace swdual {

enum class ErrorKind {
    NotSymmetric,
    NotHomomorphism,
    NotAutomorphism,
    NotGenerating,
    NotAssociative,
    TooLarge,
    NormNotDefinite,
    NotUnit,
    NonIntegralEntries,
    NotClosed,
    PrecisionTooLow,
    HenselNonconvergent,
    OrderMismatch,
    OutOfAbelianRange,
    SeriesDivergence,
    SingularBasis,
    DimensionMismatch,
    NotContained,
    MixedGroups,
    NotSubgroup,
    NotACocycle,
    BadMultiplier,
    NotAClassFunction,
    NotStable,
    NotSpinnable,
    SpinAmbiguity,
    IncompleteTable,
    IndexOutOfRange,
    NoDecomposition,
    TooManyVariables,
    WrongGroup,
    NotReducible,
    IncompleteCatalog,
    UnknownTag,
    InvalidArgument,
    InternalInvariant,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

// Checks something that must hold if the code is right.
inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw Error(ErrorKind::InternalInvariant, what);
}

}  // namespace swdual
