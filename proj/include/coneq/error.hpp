#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coneq {

enum class ErrorKind {
  SignatureMismatch,
  DegenerateInput,
  DegenerateSubspace,
  NotIsotropic,
  NotIsometry,
  UnsupportedSignature,
  UnsupportedFrame,
  Domain,
  Nondegeneracy,
  InternalContract,
  Unsupported,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes the failure.
class ConeError : public std::runtime_error {
 public:
  ConeError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace coneq
