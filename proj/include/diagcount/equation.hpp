#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagcount/field.hpp"

namespace diagcount {

// One term a x^d with x ranging over the subfield F_{p^m}.
struct Term {
  FieldElem a;
  u64 d = 1;
  unsigned m = 1;
};

// a_1 x_1^{d_1} + ... + a_s x_s^{d_s} = b over F_{p^N}, with x_i restricted
// to F_{p^{m_i}}. Coefficients a_i must be nonzero and each m_i | N.
struct Equation {
  FieldCtxPtr ctx;
  std::vector<Term> terms;
  FieldElem b;
};

// Checks the structural invariants every counting routine assumes:
// nonempty term list, m_i | N, d_i >= 1, a_i != 0, b well formed.
void validate_equation(const Equation& eq);

struct CountReport {
  BigInt count;
  // one of: closed_form, equal_d, linear, charsum, quadratic, brute
  std::string method;
  // names of print-version defects the chosen route corrects
  std::vector<std::string> errata;
  std::optional<i64> micros;
};

}  // namespace diagcount
