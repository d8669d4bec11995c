#include "diagcount/counting.hpp"

#include <algorithm>

namespace diagcount {

namespace {

BigInt exact_div(const BigInt& numer, const BigInt& denom, const char* what) {
  if (denom == 0) throw DivisionByZero(what + std::string(": zero divisor"));
  BigInt q = numer / denom;
  if (q * denom != numer)
    throw IntegralityViolation(what + std::string(": division is not exact"));
  return q;
}

// Per-term data for evaluating delta at many c.
struct DeltaPrep {
  FieldElem a;
  u64 d = 1;
  unsigned t = 1, r = 1;
  u64 m_exp = 0;       // (p^{2t} - 1) / d
  i64 p_t = 0;         // p^t
  int eps = 1;         // (-1)^{t/r}
  bool epsu_one = true;  // eps^{(p^r+1)/d} == +1
  i64 hit = 0;         // eps (1 - d)
  u64 log_a = 0;       // dlog(a), table path, a != 0
};

DeltaPrep prep_delta(const FieldCtx& F, const FieldElem& a, u64 d, unsigned t,
                     unsigned r) {
  if (d == 0) throw InvalidInput("exponent must be positive");
  if (!F.divides_degree(2 * t))
    throw NotADivisor("2t = " + std::to_string(2 * t) +
                      " does not divide " + std::to_string(F.deg()));
  if (r == 0 || t % r != 0)
    throw NotADivisor("r = " + std::to_string(r) + " does not divide t = " +
                      std::to_string(t));
  u64 pr = ipow_u64(F.p(), r);
  if ((pr + 1) % d != 0)
    throw HypothesisViolated("d = " + std::to_string(d) +
                             " does not divide p^r + 1 = " +
                             std::to_string(pr + 1));
  DeltaPrep P;
  P.a = a;
  P.d = d;
  P.t = t;
  P.r = r;
  P.m_exp = (ipow_u64(F.p(), 2 * t) - 1) / d;
  P.p_t = i64(ipow_u64(F.p(), t));
  P.eps = (t / r) % 2 == 0 ? 1 : -1;
  u64 u = (pr + 1) / d;
  P.epsu_one = P.eps == 1 || u % 2 == 0;
  P.hit = P.eps * (1 - i64(d));
  if (F.has_tables() && !F.is_zero(a)) P.log_a = F.dlog(a);
  return P;
}

i64 delta_generic(const FieldCtx& F, const DeltaPrep& P, const FieldElem& c) {
  FieldElem T = F.trace(F.mul(c, P.a), 2 * P.t);
  if (F.is_zero(T)) return P.p_t;
  FieldElem Tm = F.pow(T, BigInt(P.m_exp));
  FieldElem target = P.epsu_one ? F.one() : F.neg(F.one());
  return Tm == target ? P.hit : P.eps;
}

// Table path: c = g^{kc}. The root-of-unity test runs in dlog space:
// T^{m_exp} = +-1 iff dlog(T) * m_exp = 0 or (q-1)/2 (mod q-1).
i64 delta_table(const FieldCtx& F, const DeltaPrep& P, u64 kc) {
  u64 q1 = F.q() - 1;
  u64 idx_ca = F.index_of_pow((kc + P.log_a) % q1);
  u64 idx_T = F.trace_index(idx_ca, 2 * P.t);
  if (idx_T == 0) return P.p_t;
  u64 v = u64(u128(F.log_by_index(idx_T)) * P.m_exp % q1);
  u64 want = P.epsu_one ? 0 : q1 / 2;
  return v == want ? P.hit : P.eps;
}

// sum over c in F_q of prod_i delta_i(c), with an optional extra factor
// (delta_app(c) * p^l - 1) from an appended term.
BigInt delta_sum(const FieldCtx& F, const std::vector<DeltaPrep>& terms,
                 const DeltaPrep* appended) {
  BigInt prod_cap = 1;
  for (const DeltaPrep& P : terms) prod_cap *= P.p_t;
  if (appended) prod_cap *= BigInt(appended->p_t) * appended->p_t + 1;
  bool narrow = prod_cap < (BigInt(1) << 62);

  BigInt S = 0;
  i128 S_narrow = 0;

  auto accumulate = [&](auto delta_at) {
    // c = 0 contributes p^t per term; the appended factor is p^{2l} - 1.
    {
      i128 prod = 1;
      BigInt prod_big = 1;
      if (narrow) {
        for (const DeltaPrep& P : terms) prod *= P.p_t;
        if (appended) prod *= i128(appended->p_t) * appended->p_t - 1;
        S_narrow += prod;
      } else {
        for (const DeltaPrep& P : terms) prod_big *= P.p_t;
        if (appended)
          prod_big *= BigInt(appended->p_t) * appended->p_t - 1;
        S += prod_big;
      }
    }
    for (u64 kc = 0; kc + 1 < F.q(); ++kc) {
      if (narrow) {
        i128 prod = 1;
        for (const DeltaPrep& P : terms) prod *= delta_at(P, kc);
        if (appended)
          prod *= i128(delta_at(*appended, kc)) * appended->p_t - 1;
        S_narrow += prod;
      } else {
        BigInt prod = 1;
        for (const DeltaPrep& P : terms) prod *= delta_at(P, kc);
        if (appended)
          prod *= BigInt(delta_at(*appended, kc)) * appended->p_t - 1;
        S += prod;
      }
    }
  };

  if (F.has_tables()) {
    accumulate([&F](const DeltaPrep& P, u64 kc) -> i64 {
      return delta_table(F, P, kc);
    });
  } else {
    // Enumerate c = g^{kc} incrementally.
    FieldElem c = F.one();
    u64 kc = 0;
    auto delta_at = [&](const DeltaPrep& P, u64 want_kc) -> i64 {
      while (kc < want_kc) {
        c = F.mul(c, F.generator());
        ++kc;
      }
      return delta_generic(F, P, c);
    };
    accumulate(delta_at);
  }

  if (narrow) S += BigInt(S_narrow);
  return S;
}

struct EvenTermData {
  unsigned t;
  unsigned r;
  u64 d;
};

EvenTermData even_term_hypotheses(const FieldCtx& F, const Term& term,
                                  u64 d_eff, size_t pos) {
  if (term.m % 2 != 0)
    throw HypothesisViolated("variable degree of term " +
                             std::to_string(pos + 1) + " must be even");
  unsigned t = term.m / 2;
  auto r = find_r(F.p(), t, d_eff);
  if (!r)
    throw NoSuchExponent("no divisor r of " + std::to_string(t) + " has " +
                         std::to_string(d_eff) + " | p^r + 1");
  return {t, *r, d_eff};
}

}  // namespace

u64 reduce_exponent(u64 d, u64 p, unsigned m) {
  if (d == 0) throw InvalidInput("exponent must be positive");
  return gcd_u64(d, ipow_u64(p, m) - 1);
}

std::optional<unsigned> find_r(u64 p, unsigned t, u64 d) {
  if (d == 0) throw InvalidInput("exponent must be positive");
  for (unsigned r = 1; r <= t; ++r) {
    if (t % r != 0) continue;
    if ((ipow_u64(p, r) + 1) % d == 0) return r;
  }
  return std::nullopt;
}

unsigned find_t_l(u64 p, u64 d, const std::vector<unsigned>& exps) {
  if (d == 0) throw InvalidInput("exponent must be positive");
  unsigned l = 0;
  u64 cur = 1 % d;
  for (unsigned cand = 1; cand <= 2 * d + 2; ++cand) {
    cur = cur * (p % d) % d;
    if (cur == d - 1 || d == 1) {
      l = cand;
      break;
    }
    if (cur == 1 % d) break;  // cycle closed without hitting -1
  }
  if (l == 0)
    throw NoSuchExponent("no power of " + std::to_string(p) +
                         " is congruent to -1 mod " + std::to_string(d));
  if (d > 2) {
    for (unsigned e : exps) {
      if (e % l != 0 || (e / l) % 2 == 0)
        throw IntegralityViolation(
            "exponent " + std::to_string(e) +
            " is not an odd multiple of the least solution " +
            std::to_string(l));
    }
  }
  return l;
}

i64 delta(const FieldCtx& F, const FieldElem& a, u64 d, unsigned t,
          unsigned r, const FieldElem& c) {
  DeltaPrep P = prep_delta(F, a, d, t, r);
  return delta_generic(F, P, c);
}

BigInt lambda_cap_size(
    const FieldCtx& F,
    const std::vector<std::pair<FieldElem, unsigned>>& pairs,
    const std::optional<std::pair<FieldElem, unsigned>>& extra) {
  std::vector<std::pair<FieldElem, unsigned>> all = pairs;
  if (extra) all.push_back(*extra);
  if (all.empty()) throw InvalidInput("no trace conditions given");
  for (const auto& [a, t] : all) {
    if (!F.divides_degree(2 * t))
      throw NotADivisor("2t = " + std::to_string(2 * t) +
                        " does not divide " + std::to_string(F.deg()));
    if (F.is_zero(a)) throw ZeroCoefficient("trace coefficient is zero");
  }
  BigInt count = 1;  // c = 0 always satisfies every condition
  if (F.has_tables()) {
    std::vector<u64> logs;
    for (const auto& [a, t] : all) logs.push_back(F.dlog(a));
    u64 q1 = F.q() - 1;
    for (u64 kc = 0; kc < q1; ++kc) {
      bool ok = true;
      for (size_t i = 0; i < all.size() && ok; ++i) {
        u64 idx = F.index_of_pow((kc + logs[i]) % q1);
        ok = F.trace_index(idx, 2 * all[i].second) == 0;
      }
      if (ok) ++count;
    }
  } else {
    FieldElem c = F.one();
    for (u64 kc = 0; kc + 1 < F.q(); ++kc) {
      bool ok = true;
      for (const auto& [a, t] : all) {
        if (!F.is_zero(F.trace(F.mul(c, a), 2 * t))) {
          ok = false;
          break;
        }
      }
      if (ok) ++count;
      c = F.mul(c, F.generator());
    }
  }
  return count;
}

CountReport count_diagonal_zero(const Equation& eq) {
  validate_equation(eq);
  const FieldCtx& F = *eq.ctx;
  if (!F.is_zero(eq.b))
    throw HypothesisViolated("this form requires b = 0");

  std::vector<DeltaPrep> preps;
  u64 sum_t = 0;
  for (size_t i = 0; i < eq.terms.size(); ++i) {
    const Term& term = eq.terms[i];
    u64 d_red = reduce_exponent(term.d, F.p(), term.m);
    EvenTermData h = even_term_hypotheses(F, term, d_red, i);
    preps.push_back(prep_delta(F, term.a, h.d, h.t, h.r));
    sum_t += h.t;
  }

  BigInt S = delta_sum(F, preps, nullptr);
  BigInt numer = S * ipow_big(F.p(), sum_t);
  BigInt count = exact_div(numer, ipow_big(F.p(), F.deg()), "zero count");
  if (count < 0) throw IntegralityViolation("negative solution count");
  return CountReport{count, "closed_form", {"sum_over_Fq"}, std::nullopt};
}

CountReport count_diagonal_equal_d(const Equation& eq) {
  validate_equation(eq);
  const FieldCtx& F = *eq.ctx;
  if (F.is_zero(eq.b))
    throw HypothesisViolated("this form requires b != 0");
  u64 d = eq.terms[0].d;
  for (const Term& term : eq.terms)
    if (term.d != d)
      throw UnequalExponents("all terms must share one exponent");

  std::vector<DeltaPrep> preps;
  std::vector<unsigned> rs;
  u64 sum_t = 0;
  for (size_t i = 0; i < eq.terms.size(); ++i) {
    EvenTermData h = even_term_hypotheses(F, eq.terms[i], d, i);
    preps.push_back(prep_delta(F, eq.terms[i].a, d, h.t, h.r));
    rs.push_back(h.r);
    sum_t += h.t;
  }
  unsigned l = find_t_l(F.p(), d, rs);

  DeltaPrep app = prep_delta(F, F.neg(eq.b), d, l, l);
  BigInt T = delta_sum(F, preps, &app);
  BigInt numer = T * ipow_big(F.p(), sum_t);
  BigInt denom =
      ipow_big(F.p(), F.deg()) * (ipow_big(F.p(), 2 * l) - 1);
  BigInt count = exact_div(numer, denom, "equal exponent count");
  if (count < 0) throw IntegralityViolation("negative solution count");
  return CountReport{count, "equal_d", {"sum_over_Fq"}, std::nullopt};
}

CountReport count_linear(const Equation& eq) {
  validate_equation(eq);
  const FieldCtx& F = *eq.ctx;
  std::vector<std::pair<FieldElem, unsigned>> pairs;
  u64 sum_m = 0;
  for (size_t i = 0; i < eq.terms.size(); ++i) {
    const Term& term = eq.terms[i];
    if (reduce_exponent(term.d, F.p(), term.m) != 1)
      throw HypothesisViolated("term " + std::to_string(i + 1) +
                               " does not reduce to exponent 1");
    if (term.m % 2 != 0)
      throw HypothesisViolated("variable degree of term " +
                               std::to_string(i + 1) + " must be even");
    pairs.push_back({term.a, term.m / 2});
    sum_m += term.m;
  }

  BigInt lam = lambda_cap_size(F, pairs);
  BigInt lam_b = lam;
  if (!F.is_zero(eq.b))
    lam_b = lambda_cap_size(F, pairs, std::make_pair(F.neg(eq.b), 1u));

  BigInt p_sum_m = ipow_big(F.p(), sum_m);
  BigInt numer = lam_b * p_sum_m * ipow_big(F.p(), 2) - lam * p_sum_m;
  BigInt denom =
      ipow_big(F.p(), F.deg()) * (ipow_big(F.p(), 2) - 1);
  BigInt count = exact_div(numer, denom, "linear count");
  if (count < 0) throw IntegralityViolation("negative solution count");

  if (F.is_zero(eq.b)) {
    BigInt simplified =
        exact_div(lam * p_sum_m, ipow_big(F.p(), F.deg()), "linear count");
    if (simplified != count)
      throw IntegralityViolation(
          "homogeneous simplification disagrees with the general form");
  }
  return CountReport{count, "linear", {}, std::nullopt};
}

}  // namespace diagcount
