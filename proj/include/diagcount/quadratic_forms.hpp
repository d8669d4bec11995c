#pragma once

#include "diagcount/equation.hpp"

namespace diagcount {

// Shape of the quadratic form Phi_a(x) = tr_{p^{2t} -> p}(ahat x^{p^r + 1})
// on F_{p^{2t}} viewed as a 2t-dimensional F_p space, where
// ahat = tr_{p^N -> p^{2t}}(a): radical of dimension 2 s_half and
// discriminant type D in {-1, +1} on the nondegenerate part. With
// eps = (-1)^{t/r} and m = (p^{2t} - 1)/(p^r + 1):
//   ahat = 0        -> (t, +1)
//   ahat^m = eps    -> (r, -eps)
//   otherwise       -> (0, eps)
struct QfParams {
  unsigned s_half;
  int D;
};

QfParams qf_params(const FieldCtx& ctx, const FieldElem& a, unsigned t,
                   unsigned r);

// Level-set size of a quadratic form in k variables over F_{base} with
// radical dimension v and type D on the nondegenerate part; k, v even:
//   lambda  = 0: base^{k-1} + D (base - 1) base^{(k+v)/2 - 1}
//   lambda != 0: base^{k-1} - D base^{(k+v)/2 - 1}
BigInt s_lambda(u64 base, unsigned k, unsigned v, int D, u64 lambda);

// #{ x in F_{p^{2t}} : tr_{p^N -> p}(a x^d) = lambda } by the closed case
// table, d | p^r + 1, r | t. k_exp = (p^{2t} - 1)/d is the power used for
// the case split on ahat = tr_{p^N -> p^{2t}}(a).
struct TraceEqCount {
  BigInt k_exp;
  u64 lambda;
  BigInt n_lambda;
};

TraceEqCount n_lambda_trace(const FieldCtx& ctx, const FieldElem& a, u64 d,
                            unsigned t, unsigned r, u64 lambda);

}  // namespace diagcount
