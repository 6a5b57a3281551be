#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sylowkit {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag used in reports.
class Error : public std::runtime_error {
 public:
  Error(const char* kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  const char* kind() const noexcept { return kind_; }

 private:
  const char* kind_;
};

#define SYLOWKIT_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  }

SYLOWKIT_DEFINE_ERROR(PreconditionViolation);
SYLOWKIT_DEFINE_ERROR(ResourceLimit);
SYLOWKIT_DEFINE_ERROR(NotNormal);
SYLOWKIT_DEFINE_ERROR(NotPGroup);
SYLOWKIT_DEFINE_ERROR(NotSylow);
SYLOWKIT_DEFINE_ERROR(NotTwoGroup);
SYLOWKIT_DEFINE_ERROR(DichotomyFailure);
SYLOWKIT_DEFINE_ERROR(InternalInconsistency);
SYLOWKIT_DEFINE_ERROR(UnknownGroup);
SYLOWKIT_DEFINE_ERROR(UnboundVariable);
SYLOWKIT_DEFINE_ERROR(SingularMatrix);
SYLOWKIT_DEFINE_ERROR(NotUnimodular);
SYLOWKIT_DEFINE_ERROR(NotInvolution);
SYLOWKIT_DEFINE_ERROR(NotPrime);
SYLOWKIT_DEFINE_ERROR(ParityViolation);
SYLOWKIT_DEFINE_ERROR(BadPrime);
SYLOWKIT_DEFINE_ERROR(SamePrime);
SYLOWKIT_DEFINE_ERROR(ParseError);

#undef SYLOWKIT_DEFINE_ERROR

/// Formula syntax error; `position()` is a 0-based byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("SyntaxError",
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace sylowkit
