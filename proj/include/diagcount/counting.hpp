#pragma once

#include <optional>
#include <utility>

#include "diagcount/equation.hpp"

namespace diagcount {

// gcd(d, p^m - 1): the exponent that produces the same value multiset for
// x^d on F_{p^m}, hence the same solution count.
u64 reduce_exponent(u64 d, u64 p, unsigned m);

// Least divisor r of t with d | p^r + 1, if any.
std::optional<unsigned> find_r(u64 p, unsigned t, u64 d);

// Least l with p^l = -1 (mod d); throws NoSuchExponent when p has no such
// power. For d > 2 the exponents e with p^e = -1 (mod d) are exactly the
// odd multiples of the result; this is asserted against each supplied
// exponent (all of which must satisfy d | p^e + 1).
unsigned find_t_l(u64 p, u64 d, const std::vector<unsigned>& exps = {});

// The local factor at c of the zero-count formula. Requires 2t | N, r | t,
// d | p^r + 1. Writing T = tr_{p^N -> p^{2t}}(c a), eps = (-1)^{t/r},
// u = (p^r + 1)/d:
//   T = 0                       ->  p^t
//   T^{(p^{2t}-1)/d} = eps^u    ->  eps (1 - d)
//   otherwise                   ->  eps
i64 delta(const FieldCtx& ctx, const FieldElem& a, u64 d, unsigned t,
          unsigned r, const FieldElem& c);

// |{ c in F_{p^N} : tr_{p^N -> p^{2 t_i}}(c a_i) = 0 for every pair }|,
// optionally intersected with one extra pair.
BigInt lambda_cap_size(
    const FieldCtx& ctx,
    const std::vector<std::pair<FieldElem, unsigned>>& pairs,
    const std::optional<std::pair<FieldElem, unsigned>>& extra = {});

// Solution count for b = 0 with every m_i even. Exponents are reduced
// internally; each reduced d_i needs some r_i | t_i with d_i | p^{r_i}+1.
//   N = p^{sum t_i - 2n} * sum_{c in F_q} prod_i delta(a_i, d_i, t_i, r_i, c)
// with the sum over ALL of F_q, q = p^{2n}.
CountReport count_diagonal_zero(const Equation& eq);

// Solution count for b != 0 when all terms share one literal exponent d
// (no reduction) and every m_i is even, with r_i as above and
// l = find_t_l(p, d):
//   N = p^{sum t_i} / (p^{2n} (p^{2l} - 1)) *
//       sum_{c in F_q} (delta(-b, d, l, l, c) p^l - 1) prod_i delta(...)
CountReport count_diagonal_equal_d(const Equation& eq);

// Solution count when every exponent reduces to 1 and every m_i is even.
// With lam = lambda_cap_size over (a_i, t_i) and lam_b adding (-b, 1):
//   N = (lam_b p^{sum m_i + 2} - lam p^{sum m_i}) / (p^N (p^2 - 1))
// For b = 0 this collapses to lam * p^{sum m_i - N}, which is recomputed
// and asserted equal.
CountReport count_linear(const Equation& eq);

}  // namespace diagcount
