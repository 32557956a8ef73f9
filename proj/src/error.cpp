#include "qv/error.hpp"

namespace qv {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::NonMonic: return "NonMonic";
    case Errc::OmegaNotUnit: return "OmegaNotUnit";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::AugmentationSingular: return "AugmentationSingular";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NotAField: return "NotAField";
    case Errc::OmegaTrivial: return "OmegaTrivial";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotDivisibleByP: return "NotDivisibleByP";
    case Errc::BadToken: return "BadToken";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::TooFewStrands: return "TooFewStrands";
    case Errc::SingularPresent: return "SingularPresent";
    case Errc::InconsistentColoring: return "InconsistentColoring";
    case Errc::PolicyInvalid: return "PolicyInvalid";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::RelationNotAnnihilated: return "RelationNotAnnihilated";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownCocycle: return "UnknownCocycle";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qv
