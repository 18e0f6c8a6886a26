#pragma once

#include <stdexcept>
#include <string>

namespace homlie {

enum class Err {
  ParseError,
  DimensionMismatch,
  AntisymmetryConflict,
  Singular,
  NotAHomomorphism,
  DegenerateTwist,
  NotAnIdeal,
  NotASubalgebra,
  NotARepresentation,
  NotMultiplicative,
  NotNilpotent,
  NotADerivation,
  NotInvariant,
  NotInjective,
  FieldExtensionNeeded,
  PolynomialNotSatisfied,
  NilindexExceeded,
  InvalidGrading,
  SearchExhausted,
  BaseMismatch,
  PreconditionFailed,
  InternalCheckFailed,
  IoError,
};

const char* to_string(Err code);

class HomError : public std::runtime_error {
 public:
  HomError(Err code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
  throw HomError(code, what);
}

}  // namespace homlie
