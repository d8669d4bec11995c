#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diagcount/charsum.hpp"
#include "diagcount/oracle.hpp"

using namespace diagcount;

namespace {

Equation ones_eq(FieldCtxPtr ctx, std::vector<u64> ds,
                 std::vector<unsigned> ms, FieldElem b) {
  Equation eq;
  eq.ctx = ctx;
  for (size_t i = 0; i < ds.size(); ++i)
    eq.terms.push_back(Term{ctx->one(), ds[i], ms[i]});
  eq.b = std::move(b);
  return eq;
}

}  // namespace

TEST_CASE("term sums by enumeration") {
  FieldCtxPtr Fp = build_field(3, 1);
  const FieldCtx& F = *Fp;
  CycloRing R(3, false);
  // sum of zeta^{x^2} over F_3 is 1 + 2 zeta, the quadratic Gauss sum
  CycloInt s = s_i_enumerated(F, F.one(), F.one(), 2, 1);
  CHECK(R.equal(s, R.add(R.one(), R.mul_int(R.zeta_pow(1), 2))));
  CHECK(R.equal(s, gauss_sum_quadratic(R)));
  // c = 0 collapses every character to 1
  CHECK(R.to_integer(s_i_enumerated(F, F.zero(), F.one(), 2, 1)) == 3);
}

TEST_CASE("term sums sum to q over all twists") {
  // summing S(c) over every c counts pairs (c, x) with tr(c a x^d) summed
  // over all characters: only x with a x^d = 0 survive, giving exactly q
  FieldCtxPtr Fp = build_field(3, 2);
  const FieldCtx& F = *Fp;
  CycloRing R(3, false);
  for (u64 d : {1, 2, 3, 4, 8}) {
    CycloInt total = R.zero();
    for (u64 i = 0; i < F.q(); ++i)
      total = R.add(total,
                    s_i_enumerated(F, F.from_index(i), F.generator(), d, 2));
    CHECK(R.to_integer(total) == 9);
  }
  // a subfield domain scales the same way
  FieldCtxPtr Gp = build_field(3, 4);
  CycloInt total = R.zero();
  for (u64 i = 0; i < Gp->q(); ++i)
    total = R.add(total,
                  s_i_enumerated(*Gp, Gp->from_index(i), Gp->one(), 2, 2));
  CHECK(R.to_integer(total) == 81);
}

TEST_CASE("orthogonality counts match enumeration") {
  FieldCtxPtr F = build_field(3, 2);
  CharsumEngine engine(F);
  for (std::vector<u64> ds :
       {std::vector<u64>{4, 4}, {2, 2}, {3, 5}, {2, 4, 3}}) {
    for (i64 k : {0, 1, 3}) {
      Equation eq = ones_eq(F, ds, std::vector<unsigned>(ds.size(), 2),
                            F->from_pow(k));
      CHECK(engine.count(eq.terms, eq.b).count == brute_count(eq));
      eq.b = F->zero();
      CHECK(engine.count(eq.terms, eq.b).count == brute_count(eq));
    }
  }
  // non-unit coefficients and mixed domains
  FieldCtxPtr G = build_field(3, 4);
  CharsumEngine eng4(G);
  Equation eq;
  eq.ctx = G;
  eq.terms = {Term{G->from_pow(7), 2, 4}, Term{G->from_pow(3), 3, 2},
              Term{G->neg(G->one()), 1, 2}};
  eq.b = G->from_pow(11);
  CHECK(eng4.count(eq.terms, eq.b).count == brute_count(eq));
}

TEST_CASE("cubes on F_9 have a lone cube root of unity") {
  // gcd(3, 8) = 1 makes x -> x^3 a bijection, so x^3 = 1 has exactly one
  // solution; the reduced table sees exponent 1 directly
  FieldCtxPtr F = build_field(3, 2);
  Equation eq = ones_eq(F, {3}, {2}, F->one());
  CountReport rep = count_via_charsum(eq);
  CHECK(rep.count == 1);
  CHECK(rep.method == "charsum");
  CHECK(rep.errata.empty());
}

TEST_CASE("every right-hand side in one pass") {
  FieldCtxPtr F = build_field(3, 2);
  CharsumEngine engine(F);
  std::vector<Term> terms = ones_eq(F, {4, 4}, {2, 2}, F->zero()).terms;
  std::vector<BigInt> all = engine.count_all_b(terms);
  REQUIRE(all.size() == 9);
  CHECK(all == brute_count_all_b(*F, terms));
  BigInt total = 0;
  for (const BigInt& n : all) total += n;
  CHECK(total == 81);
  for (u64 i = 0; i < 9; ++i)
    CHECK(all[i] == engine.count(terms, F->from_index(i)).count);
}

TEST_CASE("proper-subfield domains bucket by the intrinsic trace") {
  // x^2 on F_3 has the lopsided value histogram (1, 2, 0), so any mixup
  // between tr_{9->3} and tr_{3->3} shifts counts between right-hand sides
  FieldCtxPtr F = build_field(3, 2);
  CharsumEngine engine(F);
  Equation sq = ones_eq(F, {2}, {1}, F->zero());
  for (u64 i = 0; i < 9; ++i) {
    sq.b = F->from_index(i);
    CHECK(engine.count(sq.terms, sq.b).count == brute_count(sq));
  }

  std::vector<Term> mixed =
      ones_eq(F, {2, 2}, {1, 2}, F->zero()).terms;
  CHECK(engine.count_all_b(mixed) == brute_count_all_b(*F, mixed));

  // same shape at p = 5, where the index [F_25 : F_5] = 2 is a unit mod p
  // and only the asymmetry of the square histogram can expose a swap
  FieldCtxPtr G = build_field(5, 2);
  CharsumEngine eng5(G);
  Equation pair = ones_eq(G, {2, 2}, {1, 1}, G->zero());
  for (i64 k : {0, 1, 2, 7}) {
    pair.b = G->from_pow(k);
    CHECK(eng5.count(pair.terms, pair.b).count == brute_count(pair));
  }
}

TEST_CASE("engine works past the table limit") {
  FieldCtxPtr Gp = build_field(3, 12);
  REQUIRE_FALSE(Gp->has_tables());
  // x^2 = 0 for x in the F_3 subfield: one solution, found by the
  // element-walk path
  Equation eq = ones_eq(Gp, {2}, {1}, Gp->zero());
  CHECK(count_via_charsum(eq).count == 1);
  CHECK_THROWS_AS(CharsumEngine(Gp).count_all_b(eq.terms), InvalidInput);
}

TEST_CASE("closed square-term values") {
  FieldCtxPtr Fp = build_field(3, 2);
  const FieldCtx& F = *Fp;
  CycloRing R(3, true);
  // even m: a rational integer, sign fixed by chi and m/2
  for (u64 i = 0; i < F.q(); ++i) {
    FieldElem c = F.from_index(i);
    CycloInt closed = s_j_quadratic(F, R, c, F.one(), 2);
    FieldElem ahat = F.mul(c, F.one());
    if (F.is_zero(ahat)) {
      CHECK(R.to_integer(closed) == 9);
    } else {
      CHECK(R.to_integer(closed) == 3 * F.quadratic_character(ahat, 2));
    }
    // and the enumeration agrees, embedded via zeta_3 = zeta_12^4
    CycloInt lit = s_i_enumerated(F, c, F.one(), 2, 2);
    CycloInt lifted = R.zero();
    for (size_t j = 0; j < lit.c.size(); ++j)
      lifted = R.add(lifted,
                     R.mul_int(R.zeta_pow(4 * i64(j)), lit.c[j]));
    CHECK(R.equal(closed, lifted));
  }
  CHECK_THROWS_AS(
      s_j_quadratic(F, CycloRing(3, false), F.one(), F.one(), 2),
      ConductorMismatch);
}

TEST_CASE("closed square-term values for odd m") {
  FieldCtxPtr Fp = build_field(3, 1);
  const FieldCtx& F = *Fp;
  CycloRing R(3, true);
  // S(1) for x^2 on F_3 is the Gauss sum
  CycloInt closed = s_j_quadratic(F, R, F.one(), F.one(), 1);
  CycloInt g = gauss_sum_quadratic(R);
  CHECK(R.equal(closed, g));
  // S(2) twists by chi(2) = -1
  CHECK(R.equal(s_j_quadratic(F, R, F.from_int(2), F.one(), 1), R.neg(g)));
}

TEST_CASE("square counts in closed form") {
  FieldCtxPtr F3 = build_field(3, 1);
  CountReport rep = count_quadratic(ones_eq(F3, {2}, {1}, F3->one()));
  CHECK(rep.count == 2);
  CHECK(rep.method == "quadratic");
  REQUIRE(rep.errata.size() == 2);
  CHECK(rep.errata[0] == "gamma_trace_zero");
  CHECK(rep.errata[1] == "prop_star");
  CHECK(count_quadratic(ones_eq(F3, {2}, {1}, F3->from_int(2))).count == 0);
  CHECK_THROWS_AS(count_quadratic(ones_eq(F3, {4}, {1}, F3->one())),
                  HypothesisViolated);

  // odd and mixed variable degrees, checked against enumeration
  FieldCtxPtr F27 = build_field(3, 3);
  for (std::vector<unsigned> ms :
       {std::vector<unsigned>{3, 3}, {1, 3}, {1, 1, 3}}) {
    std::vector<u64> ds(ms.size(), 2);
    for (i64 k : {0, 2}) {
      Equation eq = ones_eq(F27, ds, ms, F27->from_pow(k));
      CHECK(count_quadratic(eq).count == brute_count(eq));
      eq.b = F27->zero();
      CHECK(count_quadratic(eq).count == brute_count(eq));
    }
  }
  FieldCtxPtr F25 = build_field(5, 2);
  for (std::vector<unsigned> ms : {std::vector<unsigned>{2, 2}, {1, 2}}) {
    std::vector<u64> ds(ms.size(), 2);
    Equation eq = ones_eq(F25, ds, ms, F25->one());
    CHECK(count_quadratic(eq).count == brute_count(eq));
  }
}

TEST_CASE("the trace-zero value must be the full subfield size") {
  // x^2 = 1 over F_3: the two twisted terms contribute 3 in total, and
  // the c = 0 slot contributes S(0). With the corrected S(0) = p^m = 3
  // the total 6 divides by q = 3 to the true count 2. Substituting a
  // sqrt(p)-sized slot instead leaves 3 + sqrt(3), not a rational integer,
  // so no count at all.
  FieldCtxPtr Fp = build_field(3, 1);
  const FieldCtx& F = *Fp;
  CycloRing R(3, true);
  CycloInt twisted = R.zero();
  for (u64 i = 1; i < 3; ++i) {
    FieldElem c = F.from_index(i);
    CycloInt psi =
        R.zeta_pow(4 * i64(F.trace_to_prime(F.mul(c, F.neg(F.one())))));
    twisted = R.add(twisted, R.mul(psi, s_j_quadratic(F, R, c, F.one(), 1)));
  }
  CHECK(R.to_integer(twisted) == 3);
  CHECK(R.to_integer(R.add(twisted, R.from_int(3))) == 6);
  CycloInt misprint = R.add(twisted, sqrt_p(R));
  CHECK_FALSE(R.is_rational_integer(misprint));
  CHECK_THROWS_AS(R.to_integer(misprint), NotRationalInteger);
}

TEST_CASE("square trace level counts") {
  FieldCtxPtr F3 = build_field(3, 1);
  CHECK(n_lambda_quadratic(*F3, F3->one(), 1, 0) == 1);
  CHECK(n_lambda_quadratic(*F3, F3->one(), 1, 1) == 2);
  CHECK(n_lambda_quadratic(*F3, F3->one(), 1, 2) == 0);

  FieldCtxPtr F9 = build_field(3, 2);
  CHECK(n_lambda_quadratic(*F9, F9->from_int(-1), 2, 0) == 5);
  CHECK(n_lambda_quadratic(*F9, F9->from_int(-1), 2, 1) == 2);
  CHECK(n_lambda_quadratic(*F9, F9->from_int(-1), 2, 2) == 2);

  for (auto [p, N] : {std::pair<u64, unsigned>{3, 3}, {3, 4}, {5, 2}}) {
    FieldCtxPtr Fp = build_field(p, N);
    const FieldCtx& F = *Fp;
    for (unsigned m = 1; m <= N; ++m) {
      if (N % m != 0) continue;
      for (u64 i = 0; i < F.q(); i += 7) {
        FieldElem a = F.from_index(i);
        for (u64 lam = 0; lam < p; ++lam)
          CHECK(n_lambda_quadratic(F, a, m, lam) ==
                brute_trace_count(F, a, 2, m, lam));
      }
    }
  }
}
