#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hslin {

enum class Errc {
  NonAssociativeTable,
  MissingIdentity,
  MissingInverse,
  MalformedTable,
  InvalidElementId,
  NotNormal,
  EmptyS,
  GroupTooLarge,
  MalformedSystem,
  LengthMismatch,
  ParameterError,
  SyntaxError,
  UnknownGroup,
  ElementOutOfRange,
  TooLarge,
  NonAbelianGroup,
};

std::string_view errc_name(Errc code);

/// Domain error raised by every module of the library. The code identifies
/// which contract was violated; the message carries the details.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hslin
