#include "diagcount/quadratic_forms.hpp"

namespace diagcount {

namespace {

void check_tr(const FieldCtx& F, unsigned t, unsigned r) {
  if (!F.divides_degree(2 * t))
    throw NotADivisor("2t = " + std::to_string(2 * t) +
                      " does not divide " + std::to_string(F.deg()));
  if (r == 0 || t % r != 0)
    throw NotADivisor("r = " + std::to_string(r) + " does not divide t = " +
                      std::to_string(t));
}

}  // namespace

QfParams qf_params(const FieldCtx& F, const FieldElem& a, unsigned t,
                   unsigned r) {
  check_tr(F, t, r);
  FieldElem ahat = F.trace(a, 2 * t);
  int eps = (t / r) % 2 == 0 ? 1 : -1;
  if (F.is_zero(ahat)) return {t, 1};
  u64 pr = ipow_u64(F.p(), r);
  u64 m = (ipow_u64(F.p(), 2 * t) - 1) / (pr + 1);
  FieldElem w = F.pow(ahat, BigInt(m));
  FieldElem eps_elem = eps == 1 ? F.one() : F.neg(F.one());
  if (w == eps_elem) return {r, -eps};
  return {0, eps};
}

BigInt s_lambda(u64 base, unsigned k, unsigned v, int D, u64 lambda) {
  if (k == 0 || k % 2 != 0 || v % 2 != 0)
    throw OddDimension("k and v must be positive even dimensions");
  if (v > k) throw InvalidInput("radical dimension exceeds k");
  if (D < -1 || D > 1) throw InvalidInput("type must be -1, 0, or +1");
  if (lambda >= base) throw InvalidInput("lambda must lie in [0, base)");
  BigInt main = ipow_big(base, k - 1);
  BigInt half = ipow_big(base, (k + v) / 2 - 1);
  if (lambda == 0) return main + D * (BigInt(base) - 1) * half;
  return main - D * half;
}

TraceEqCount n_lambda_trace(const FieldCtx& F, const FieldElem& a, u64 d,
                            unsigned t, unsigned r, u64 lambda) {
  check_tr(F, t, r);
  if (lambda >= F.p()) throw InvalidInput("lambda must lie in [0, p)");
  if (d == 0) throw InvalidInput("exponent must be positive");
  u64 pr = ipow_u64(F.p(), r);
  if ((pr + 1) % d != 0)
    throw HypothesisViolated("d = " + std::to_string(d) +
                             " does not divide p^r + 1 = " +
                             std::to_string(pr + 1));
  const u64 p = F.p();
  BigInt k_exp = (ipow_big(p, 2 * t) - 1) / d;

  FieldElem ahat = F.trace(a, 2 * t);
  if (F.is_zero(ahat))
    return {k_exp, lambda, lambda == 0 ? ipow_big(p, 2 * t) : BigInt(0)};

  int eps = (t / r) % 2 == 0 ? 1 : -1;
  u64 u = (pr + 1) / d;
  FieldElem epsu =
      (eps == -1 && u % 2 == 1) ? F.neg(F.one()) : F.one();
  FieldElem w = F.pow(ahat, k_exp);

  BigInt main = ipow_big(p, 2 * t - 1);
  BigInt half = ipow_big(p, t - 1);
  BigInt n;
  if (w == epsu) {
    if (lambda == 0)
      n = main - eps * BigInt(d - 1) * (BigInt(p) - 1) * half;
    else
      n = main + eps * BigInt(d - 1) * half;
  } else {
    if (lambda == 0)
      n = main + eps * (BigInt(p) - 1) * half;
    else
      n = main - eps * half;
  }
  return {k_exp, lambda, n};
}

}  // namespace diagcount
