#include "swdual/error.hpp"

namespace swdual {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::NotHomomorphism: return "NotHomomorphism";
        case ErrorKind::NotAutomorphism: return "NotAutomorphism";
        case ErrorKind::NotGenerating: return "NotGenerating";
        case ErrorKind::NotAssociative: return "NotAssociative";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NormNotDefinite: return "NormNotDefinite";
        case ErrorKind::NotUnit: return "NotUnit";
        case ErrorKind::NonIntegralEntries: return "NonIntegralEntries";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::PrecisionTooLow: return "PrecisionTooLow";
        case ErrorKind::HenselNonconvergent: return "HenselNonconvergent";
        case ErrorKind::OrderMismatch: return "OrderMismatch";
        case ErrorKind::OutOfAbelianRange: return "OutOfAbelianRange";
        case ErrorKind::SeriesDivergence: return "SeriesDivergence";
        case ErrorKind::SingularBasis: return "SingularBasis";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotContained: return "NotContained";
        case ErrorKind::MixedGroups: return "MixedGroups";
        case ErrorKind::NotSubgroup: return "NotSubgroup";
        case ErrorKind::NotACocycle: return "NotACocycle";
        case ErrorKind::BadMultiplier: return "BadMultiplier";
        case ErrorKind::NotAClassFunction: return "NotAClassFunction";
        case ErrorKind::NotStable: return "NotStable";
        case ErrorKind::NotSpinnable: return "NotSpinnable";
        case ErrorKind::SpinAmbiguity: return "SpinAmbiguity";
        case ErrorKind::IncompleteTable: return "IncompleteTable";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NoDecomposition: return "NoDecomposition";
        case ErrorKind::TooManyVariables: return "TooManyVariables";
        case ErrorKind::WrongGroup: return "WrongGroup";
        case ErrorKind::NotReducible: return "NotReducible";
        case ErrorKind::IncompleteCatalog: return "IncompleteCatalog";
        case ErrorKind::UnknownTag: return "UnknownTag";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

}  // namespace swdual
