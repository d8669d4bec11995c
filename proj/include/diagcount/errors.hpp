#pragma once

#include <stdexcept>
#include <string>

namespace diagcount {

// Base for all library errors. `code()` is the stable machine-readable name
// that the CLI maps to an exit status and a JSON "error" field.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Malformed or out-of-domain input: exit status 2.
struct InvalidInput : Error {
  explicit InvalidInput(const std::string& w) : Error("invalid_input", w) {}
};
struct NotPrime : Error {
  explicit NotPrime(const std::string& w) : Error("not_prime", w) {}
};
struct EvenCharacteristic : Error {
  explicit EvenCharacteristic(const std::string& w)
      : Error("even_characteristic", w) {}
};
struct SizeExceeded : Error {
  explicit SizeExceeded(const std::string& w) : Error("size_exceeded", w) {}
};
struct NotADivisor : Error {
  explicit NotADivisor(const std::string& w) : Error("not_a_divisor", w) {}
};
struct NotInSubfield : Error {
  explicit NotInSubfield(const std::string& w) : Error("not_in_subfield", w) {}
};
struct ZeroCoefficient : Error {
  explicit ZeroCoefficient(const std::string& w)
      : Error("zero_coefficient", w) {}
};
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& w)
      : Error("division_by_zero", w) {}
};

// Structurally valid input outside a method's applicability: exit status 3.
struct HypothesisViolated : Error {
  explicit HypothesisViolated(const std::string& w)
      : Error("hypothesis_violated", w) {}
};
struct UnequalExponents : Error {
  explicit UnequalExponents(const std::string& w)
      : Error("unequal_exponents", w) {}
};
struct NoSuchExponent : Error {
  explicit NoSuchExponent(const std::string& w)
      : Error("no_such_exponent", w) {}
};
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& w)
      : Error("budget_exceeded", w) {}
};
struct FactorizationFailure : Error {
  explicit FactorizationFailure(const std::string& w)
      : Error("factorization_failure", w) {}
};

// Internal consistency violations; these indicate a bug, never bad input:
// exit status 4.
struct IntegralityViolation : Error {
  explicit IntegralityViolation(const std::string& w)
      : Error("integrality_violation", w) {}
};
struct NotRationalInteger : Error {
  explicit NotRationalInteger(const std::string& w)
      : Error("not_rational_integer", w) {}
};
struct OddDimension : Error {
  explicit OddDimension(const std::string& w) : Error("odd_dimension", w) {}
};
struct ConductorMismatch : Error {
  explicit ConductorMismatch(const std::string& w)
      : Error("conductor_mismatch", w) {}
};

// Exit status class for a given error code.
inline int exit_status_for(const std::string& code) {
  if (code == "hypothesis_violated" || code == "unequal_exponents" ||
      code == "no_such_exponent" || code == "budget_exceeded" ||
      code == "factorization_failure")
    return 3;
  if (code == "integrality_violation" || code == "not_rational_integer" ||
      code == "odd_dimension" || code == "conductor_mismatch")
    return 4;
  return 2;
}

}  // namespace diagcount
