#include "hslin/error.hpp"

namespace hslin {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonAssociativeTable: return "NonAssociativeTable";
    case Errc::MissingIdentity: return "MissingIdentity";
    case Errc::MissingInverse: return "MissingInverse";
    case Errc::MalformedTable: return "MalformedTable";
    case Errc::InvalidElementId: return "InvalidElementID";
    case Errc::NotNormal: return "NotNormal";
    case Errc::EmptyS: return "EmptyS";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::MalformedSystem: return "MalformedSystem";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ParameterError: return "ParameterError";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownGroup: return "UnknownGroup";
    case Errc::ElementOutOfRange: return "ElementOutOfRange";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NonAbelianGroup: return "NonAbelianGroup";
  }
  return "Unknown";
}

}  // namespace hslin
