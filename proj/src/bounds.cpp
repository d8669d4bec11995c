#include "diagcount/bounds.hpp"

#include <numeric>

#include "diagcount/counting.hpp"

namespace diagcount {

BigInt weil_I(const std::vector<u64>& ds) {
  if (ds.empty()) throw InvalidInput("no exponents given");
  u64 L = 1;
  for (u64 d : ds) {
    if (d == 0) throw InvalidInput("exponent must be positive");
    L = std::lcm(L, d);
  }
  // DP over residues of sum y_i L/d_i mod L.
  std::vector<BigInt> dp(L, 0);
  dp[0] = 1;
  for (u64 d : ds) {
    std::vector<BigInt> next(L, 0);
    u64 step = L / d;
    for (u64 r = 0; r < L; ++r) {
      if (dp[r] == 0) continue;
      for (u64 y = 1; y < d; ++y) next[(r + y * step) % L] += dp[r];
    }
    dp = std::move(next);
  }
  return dp[0];
}

WeilReport weil_bound_check(const Equation& eq, const BigInt& count) {
  validate_equation(eq);
  const FieldCtx& F = *eq.ctx;
  if (!F.is_zero(eq.b))
    throw HypothesisViolated("the bound is stated for b = 0");
  WeilReport rep;
  for (const Term& t : eq.terms) {
    if (t.m != F.deg())
      throw HypothesisViolated(
          "the bound applies to full-field variables only");
    rep.d_reduced.push_back(reduce_exponent(t.d, F.p(), t.m));
  }
  rep.I = weil_I(rep.d_reduced);

  const u64 s = eq.terms.size();
  BigInt q = F.q();
  BigInt dev = count - ipow_big(F.q(), s - 1);
  BigInt lhs = dev * dev;
  BigInt rhs = rep.I * rep.I * (q - 1) * (q - 1);
  if (s < 2)
    lhs *= ipow_big(F.q(), 2 - s);
  else
    rhs *= ipow_big(F.q(), s - 2);
  rep.lhs_sq = lhs;
  rep.rhs_sq = rhs;
  rep.holds = lhs <= rhs;
  return rep;
}

ExistenceReport existence_check(const Equation& eq) {
  validate_equation(eq);
  const FieldCtx& F = *eq.ctx;
  if (!F.is_zero(eq.b))
    throw HypothesisViolated("existence analysis requires b = 0");

  const size_t s = eq.terms.size();
  std::vector<unsigned> ts(s);
  std::vector<u64> ds(s);
  u64 sum_t = 0;
  for (size_t i = 0; i < s; ++i) {
    const Term& term = eq.terms[i];
    if (term.m % 2 != 0)
      throw HypothesisViolated("variable degree of term " +
                               std::to_string(i + 1) + " must be even");
    ts[i] = term.m / 2;
    ds[i] = reduce_exponent(term.d, F.p(), term.m);
    if (!find_r(F.p(), ts[i], ds[i]))
      throw NoSuchExponent("no divisor r of " + std::to_string(ts[i]) +
                           " has " + std::to_string(ds[i]) + " | p^r + 1");
    sum_t += ts[i];
  }

  ExistenceReport rep;
  const u64 p = F.p();

  // One pass over c: membership pattern in each Lambda_i drives lambda,
  // the weighted error term W, and the pairwise-triviality diagnostic.
  BigInt lambda = 0;
  BigInt W = 0;
  std::vector<std::vector<bool>> seen_pair(s, std::vector<bool>(s, false));
  bool pairwise = true;

  std::vector<bool> in(s);
  auto visit = [&](bool c_is_zero) {
    size_t members = 0;
    for (size_t i = 0; i < s; ++i)
      if (in[i]) ++members;
    if (members == s) {
      ++lambda;
    } else {
      BigInt w = 1;
      for (size_t i = 0; i < s; ++i)
        w *= in[i] ? ipow_big(p, ts[i]) : BigInt(ds[i] - 1);
      W += w;
    }
    if (!c_is_zero)
      for (size_t i = 0; i < s; ++i)
        for (size_t j = i + 1; j < s; ++j)
          if (in[i] && in[j]) pairwise = false;
  };

  if (F.has_tables()) {
    std::vector<u64> logs(s);
    for (size_t i = 0; i < s; ++i) logs[i] = F.dlog(eq.terms[i].a);
    u64 q1 = F.q() - 1;
    std::fill(in.begin(), in.end(), true);
    visit(true);  // c = 0 lies in every kernel
    for (u64 kc = 0; kc < q1; ++kc) {
      for (size_t i = 0; i < s; ++i) {
        u64 idx = F.index_of_pow((kc + logs[i]) % q1);
        in[i] = F.trace_index(idx, 2 * ts[i]) == 0;
      }
      visit(false);
    }
  } else {
    std::fill(in.begin(), in.end(), true);
    visit(true);
    FieldElem c = F.one();
    for (u64 kc = 0; kc + 1 < F.q(); ++kc) {
      for (size_t i = 0; i < s; ++i)
        in[i] = F.is_zero(F.trace(F.mul(c, eq.terms[i].a), 2 * ts[i]));
      visit(false);
      c = F.mul(c, F.generator());
    }
  }

  rep.lambda = lambda;
  rep.pairwise_trivial = pairwise;

  BigInt count = count_diagonal_zero(eq).count;
  rep.main_lhs = count;
  // p^{sum t - 2n} (lambda p^{sum t} - W), kept exact through a rational;
  // the reported integer bound is its ceiling.
  BigRat scale = BigRat(ipow_big(p, sum_t)) / ipow_big(p, F.deg());
  BigRat rhs_rat = scale * BigRat(lambda * ipow_big(p, sum_t) - W);
  BigInt num = boost::multiprecision::numerator(rhs_rat);
  BigInt den = boost::multiprecision::denominator(rhs_rat);
  BigInt fl = num / den;
  if (fl * den > num) fl -= 1;
  rep.main_rhs = fl * den == num ? fl : fl + 1;
  rep.display_holds = BigRat(count) >= rhs_rat;

  // The sufficient criterion assumes d_i >= 2; a reduced exponent of 1
  // zeroes the whole left side (its term never contributes to W).
  bool has_linear = false;
  for (u64 d : ds) has_linear = has_linear || d == 1;
  if (has_linear) {
    rep.sufficient_lhs = 0;
  } else {
    BigRat suff = 0;
    for (size_t i = 0; i < s; ++i) {
      suff += BigRat(1, ipow_big(p, ts[i]) * BigInt(ds[i] - 1));
      suff -= BigRat(1, ipow_big(p, 2 * ts[i]));
    }
    suff += 1;
    suff += BigRat(s - 1, F.q());
    BigRat prod_d = 1;
    for (size_t i = 0; i < s; ++i) prod_d *= BigInt(ds[i] - 1);
    rep.sufficient_lhs = prod_d * suff;
  }
  rep.sufficient_rhs = BigRat(ipow_big(p, sum_t)) / ipow_big(p, F.deg());
  rep.sufficient = rep.sufficient_lhs < rep.sufficient_rhs;
  if (rep.sufficient) {
    BigInt floor_val = 1;
    if (sum_t >= F.deg()) floor_val = ipow_big(p, sum_t - F.deg());
    rep.guaranteed_min = floor_val;
  }
  return rep;
}

CurveBoundReport curve_bound(const FieldCtx& ctx, u64 d, unsigned m1,
                             unsigned m2) {
  // Non-owning alias; the context outlives this call by contract.
  FieldCtxPtr shared(FieldCtxPtr{}, &ctx);
  Equation eq;
  eq.ctx = shared;
  eq.terms = {Term{ctx.one(), d, m1}, Term{ctx.one(), d, m2}};
  eq.b = ctx.neg(ctx.one());

  if (m1 % 2 != 0 || m2 % 2 != 0)
    throw HypothesisViolated("both variable degrees must be even");
  unsigned t1 = m1 / 2, t2 = m2 / 2;
  if (!find_r(ctx.p(), t1, d) || !find_r(ctx.p(), t2, d))
    throw NoSuchExponent("no admissible r for d = " + std::to_string(d));

  CurveBoundReport rep;
  rep.count = count_diagonal_equal_d(eq).count;

  BigInt lambda = lambda_cap_size(
      ctx, {{ctx.one(), t1}, {ctx.one(), t2}});
  BigInt numer = lambda * ipow_big(ctx.p(), 2 * t1 + 2 * t2);
  BigInt denom = ipow_big(ctx.p(), ctx.deg());
  BigInt center = numer / denom;
  if (center * denom != numer)
    throw IntegralityViolation("curve center is not integral");
  rep.center = center;

  BigInt pt1 = ipow_big(ctx.p(), t1), pt2 = ipow_big(ctx.p(), t2);
  rep.radius =
      BigInt(d - 1) * (d - 1) * pt1 * pt2 + BigInt(d - 1) * (pt1 + pt2);
  BigInt dev = rep.count - rep.center;
  if (dev < 0) dev = -dev;
  rep.contains = dev <= rep.radius;
  return rep;
}

}  // namespace diagcount
