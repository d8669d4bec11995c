#pragma once

#include <vector>

#include "diagcount/equation.hpp"

namespace diagcount {

// Reference implementations by exhaustive enumeration. Everything here is
// deliberately direct: no exponent reduction, no character sums, no shared
// machinery with the closed-form paths, so a formula bug cannot cancel.

constexpr u64 kDefaultBruteBudget = 10000000;

// Number of solutions by direct enumeration over the product of the
// subfield domains. Throws BudgetExceeded when prod p^{m_i} > budget.
// s <= 3 runs literal nested loops; s >= 4 convolves per-term value
// histograms over F_q (same answer, still enumeration, linear memory in q).
BigInt brute_count(const Equation& eq, u64 budget = kDefaultBruteBudget);

// Solution counts for every right-hand side at once, indexed by the packed
// index of b. Histogram convolution over F_q; same budget rule.
std::vector<BigInt> brute_count_all_b(const FieldCtx& ctx,
                                      const std::vector<Term>& terms,
                                      u64 budget = kDefaultBruteBudget);

// #{ x in F_{p^m} : tr_{p^N -> p}(a x^d) = lambda }.
u64 brute_trace_count(const FieldCtx& ctx, const FieldElem& a, u64 d,
                      unsigned m, u64 lambda);

// Radical dimension of the symmetric bilinear form attached to
// Phi(x) = tr_{p^{2t} -> p}(a x^{p^r + 1}) on F_{p^{2t}}:
// B(x, y) = Phi(x + y) - Phi(x) - Phi(y) as a matrix on the power basis of
// the degree-2t subfield generator, kernel dimension over F_p.
// The value 2t - rank is always even here; OddDimension otherwise.
unsigned bilinear_kernel_dim(const FieldCtx& ctx, const FieldElem& a,
                             unsigned t, unsigned r);

}  // namespace diagcount
