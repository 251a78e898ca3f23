#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace catcoh {

enum class ErrorKind {
    // category tables
    MissingIdentity,
    NonAssociative,
    CompositionDomainMismatch,
    IndexOutOfRange,
    NotAPartialOrder,
    NotAMonoid,
    NotAFunctor,
    ObjectNotInTarget,
    // exact algebra
    DegreeOutOfRange,
    ShapeMismatch,
    NotIntegral,
    NonFunctorialDiagram,
    // simplices
    NotOrderPreserving,
    InvalidSimplexMorphism,
    // coefficients
    NonFunctorialData,
    NotALocalization,
    IncompleteTables,
    CofaceRelationViolation,
    BeyondTruncation,
    VarianceMismatch,
    RingMismatch,
    // complexes
    UnsupportedProvenance,
    NaturalityViolation,
    // kan / fibrations
    UnsupportedCoefficientKind,
    UnsupportedCoefficientShape,
    RingUnsupported,
    NonStrictFunctor,
    // front end
    InvalidInput,
    // a broken postcondition; always a bug
    InternalInvariant,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail);

// Throws InternalInvariant when cond is false.
void ensure(bool cond, const char* what);

} // namespace catcoh
