#include "catcoh/error.hpp"

namespace catcoh {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::MissingIdentity: return "MissingIdentity";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::CompositionDomainMismatch: return "CompositionDomainMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotAMonoid: return "NotAMonoid";
    case ErrorKind::NotAFunctor: return "NotAFunctor";
    case ErrorKind::ObjectNotInTarget: return "ObjectNotInTarget";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NonFunctorialDiagram: return "NonFunctorialDiagram";
    case ErrorKind::NotOrderPreserving: return "NotOrderPreserving";
    case ErrorKind::InvalidSimplexMorphism: return "InvalidSimplexMorphism";
    case ErrorKind::NonFunctorialData: return "NonFunctorialData";
    case ErrorKind::NotALocalization: return "NotALocalization";
    case ErrorKind::IncompleteTables: return "IncompleteTables";
    case ErrorKind::CofaceRelationViolation: return "CofaceRelationViolation";
    case ErrorKind::BeyondTruncation: return "BeyondTruncation";
    case ErrorKind::VarianceMismatch: return "VarianceMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::UnsupportedProvenance: return "UnsupportedProvenance";
    case ErrorKind::NaturalityViolation: return "NaturalityViolation";
    case ErrorKind::UnsupportedCoefficientKind: return "UnsupportedCoefficientKind";
    case ErrorKind::UnsupportedCoefficientShape: return "UnsupportedCoefficientShape";
    case ErrorKind::RingUnsupported: return "RingUnsupported";
    case ErrorKind::NonStrictFunctor: return "NonStrictFunctor";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail)
    , kind_(kind)
    , detail_(detail)
{
}

void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

void ensure(bool cond, const char* what)
{
    if (!cond)
        throw Error(ErrorKind::InternalInvariant, what);
}

} // namespace catcoh
