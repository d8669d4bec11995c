#pragma once

#include "diagcount/equation.hpp"

namespace diagcount {

enum class Method { kAuto, kClosed, kCharsum, kBrute };

struct RouteOptions {
  Method method = Method::kAuto;
  u64 budget = 10000000;
  bool timing = true;
};

// Dispatches an equation to a counting path.
//
// kAuto picks, in order:
//   1. the linear corollary, when every literal exponent is 1 and every
//      m_i is even;
//   2. the homogeneous closed form, when b = 0 and the (reduced) even-
//      degree hypotheses hold;
//   3. the shared-exponent closed form, when b != 0 and the literal
//      exponents are all equal with the hypotheses satisfied;
//   4. the square closed form, when every literal exponent is 2;
//   5. the character sum, when q (sum p^{m_i} + 1) fits the work budget;
//   6. enumeration, when prod p^{m_i} fits the budget.
// Literal exponents gate the closed tiers: auto never reduces exponents on
// the caller's behalf, so x^3 on F_9 routes to the character sum even
// though gcd(3, 8) = 1.
//
// kClosed tries the same closed forms (reduction allowed for the linear
// and square paths) and propagates the last applicability error if none
// fits. kCharsum and kBrute force those paths; only kBrute enforces the
// budget as a hard precondition.
CountReport route_count(const Equation& eq, const RouteOptions& opts);

Method parse_method(const std::string& name);

// Which paths accept the equation, plus the work estimates the router
// gates on.
struct Applicability {
  bool linear_reduced = false;   // every reduced exponent is 1, m_i even
  bool zero_form = false;        // b = 0 closed form after reduction
  bool equal_d_literal = false;  // b != 0 shared literal exponent form
  bool square_reduced = false;   // every reduced exponent is 2
  u128 charsum_work = 0;         // q (sum p^{m_i} + 1)
  u128 domain = 0;               // prod p^{m_i}, saturating
};

Applicability classify(const Equation& eq);

}  // namespace diagcount
