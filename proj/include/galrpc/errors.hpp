#pragma once

#include <stdexcept>
#include <string>

namespace galrpc {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violations: bad parameters, mismatched field/group contexts,
// out-of-range dimensions.
class ParamError : public Error {
 public:
  explicit ParamError(const std::string& what) : Error(what) {}
};

// Division by the zero element of a field.
class DivideByZeroError : public ParamError {
 public:
  explicit DivideByZeroError(const std::string& what) : ParamError(what) {}
};

// A Cayley table that is not a group: non-Latin rows/columns or a failed
// associativity check.
class StructureError : public ParamError {
 public:
  explicit StructureError(const std::string& what) : ParamError(what) {}
};

// The first element of a Cayley table is not the identity.
class OrderingError : public ParamError {
 public:
  explicit OrderingError(const std::string& what) : ParamError(what) {}
};

// Taking the inverse of a non-invertible algebra element where the caller
// required one (systematic parity-check form).
class NotInvertibleError : public ParamError {
 public:
  explicit NotInvertibleError(const std::string& what) : ParamError(what) {}
};

// Rejection sampling did not hit a valid candidate within the retry bound.
class SamplingError : public Error {
 public:
  explicit SamplingError(const std::string& what) : Error(what) {}
};

// Parsing of serialized keys/ciphertexts and of text formats. Each failure
// class gets its own code so callers (and tests) can tell them apart.
class FormatError : public Error {
 public:
  enum class Code {
    BadMagic,
    BadVersion,
    BadKind,
    Truncated,
    BadField,
    BadGroup,
    BadCoefficient,
    BadSubspace,
    TrailingData,
    BadText,
  };

  FormatError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// File system failures in the CLI layer.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace galrpc
