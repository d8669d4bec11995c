#include "diagcount/equation.hpp"

namespace diagcount {

void validate_equation(const Equation& eq) {
  if (!eq.ctx) throw InvalidInput("equation has no field context");
  const FieldCtx& F = *eq.ctx;
  if (eq.terms.empty()) throw InvalidInput("equation has no terms");
  if (eq.b.c.size() != F.deg())
    throw InvalidInput("right-hand side has the wrong coefficient length");
  for (size_t i = 0; i < eq.terms.size(); ++i) {
    const Term& t = eq.terms[i];
    if (t.a.c.size() != F.deg())
      throw InvalidInput("coefficient " + std::to_string(i + 1) +
                         " has the wrong length");
    if (t.d == 0)
      throw InvalidInput("exponent of term " + std::to_string(i + 1) +
                         " must be positive");
    if (!F.divides_degree(t.m))
      throw NotADivisor("variable degree " + std::to_string(t.m) +
                        " of term " + std::to_string(i + 1) +
                        " does not divide " + std::to_string(F.deg()));
    if (F.is_zero(t.a))
      throw ZeroCoefficient("coefficient " + std::to_string(i + 1) +
                            " is zero");
  }
}

}  // namespace diagcount
