#pragma once

#include <optional>

#include "diagcount/equation.hpp"

namespace diagcount {

// Number of tuples (y_1, ..., y_s), 1 <= y_i <= d_i - 1, with
// sum y_i / d_i an integer. This is the solution-set invariant in the
// classical bound |N - q^{s-1}| <= I (q - 1) q^{(s-2)/2}.
BigInt weil_I(const std::vector<u64>& ds);

struct WeilReport {
  BigInt I;
  std::vector<u64> d_reduced;
  // both sides of the squared comparison
  // |N - q^{s-1}|^2 q^{max(0, 2-s)} <= I^2 (q-1)^2 q^{max(0, s-2)}
  BigInt lhs_sq;
  BigInt rhs_sq;
  bool holds = false;
};

// Checks the bound for a full-field equation (every m_i = N); exponents
// are reduced mod q - 1 first. The comparison is done on squares so odd s
// never leaves the integers.
WeilReport weil_bound_check(const Equation& eq, const BigInt& count);

struct ExistenceReport {
  BigInt lambda;            // |intersection of the Lambda_i|
  BigInt main_lhs;          // exact solution count
  BigInt main_rhs;          // p^{sum t - 2n} (lambda p^{sum t} - W)
  bool display_holds = false;
  bool pairwise_trivial = false;  // Lambda_i ^ Lambda_j = {0} for i != j
  BigRat sufficient_lhs;    // easily checked sufficient criterion
  BigRat sufficient_rhs;
  bool sufficient = false;
  std::optional<BigInt> guaranteed_min;  // set when sufficient
};

// Existence analysis for b = 0 under the even-degree hypotheses. The main
// display bounds the count from below by weighting each c by which trace
// kernels Lambda_i it lies in:
//   N >= p^{sum t - 2n} (lambda p^{sum t} - W),
//   W = sum over c outside the full intersection of
//       prod_{c in Lambda_i} p^{t_i} * prod_{c not in Lambda_i} (d_i - 1).
// Both sides are computed exactly. The sufficient criterion compares
//   prod(d_i - 1) (sum_i (1/(p^{t_i}(d_i-1)) - 1/p^{2 t_i}) + 1 + (s-1)/q)
// against p^{sum t - 2n} in exact rational arithmetic; when it is
// strictly smaller, the count is at least max(1, p^{sum t - 2n}).
ExistenceReport existence_check(const Equation& eq);

struct CurveBoundReport {
  BigInt count;
  BigInt center;  // |Lambda| p^{2 t_1 + 2 t_2 - 2n}
  BigInt radius;  // (d-1)^2 p^{t_1 + t_2} + (d-1)(p^{t_1} + p^{t_2})
  bool contains = false;
};

// Interval check for x^d + y^d = -1 with x in F_{p^{m_1}}, y in F_{p^{m_2}}:
// the exact count (via the shared-exponent closed form) must lie within
// `radius` of `center`. For d = 1 the radius degenerates to 0 and the
// center equals the count.
CurveBoundReport curve_bound(const FieldCtx& ctx, u64 d, unsigned m1,
                             unsigned m2);

}  // namespace diagcount
