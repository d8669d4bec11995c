#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diagcount/oracle.hpp"

using namespace diagcount;

namespace {

Equation make_eq(FieldCtxPtr ctx, std::vector<u64> ds, std::vector<unsigned> ms,
                 FieldElem b) {
  Equation eq;
  eq.ctx = ctx;
  for (size_t i = 0; i < ds.size(); ++i)
    eq.terms.push_back(Term{ctx->one(), ds[i], ms[i]});
  eq.b = std::move(b);
  return eq;
}

}  // namespace

TEST_CASE("enumeration fixed points over F_9") {
  FieldCtxPtr F = build_field(3, 2);
  CHECK(brute_count(make_eq(F, {4, 4}, {2, 2}, F->zero())) == 33);
  CHECK(brute_count(make_eq(F, {2, 2}, {2, 2}, F->zero())) == 17);
  CHECK(brute_count(make_eq(F, {4, 4}, {2, 2}, F->one())) == 24);
  CHECK(brute_count(make_eq(F, {2, 2}, {2, 2}, F->one())) == 8);
  CHECK(brute_count(make_eq(F, {3}, {2}, F->one())) == 1);
  CHECK(brute_count(make_eq(F, {8}, {2}, F->one())) == 8);
  CHECK(brute_count(make_eq(F, {1, 1}, {2, 2}, F->from_pow(3))) == 9);
}

TEST_CASE("enumeration fixed points with subfield variables") {
  FieldCtxPtr F = build_field(3, 4);
  // conic over the F_9 subfield sitting inside F_81
  CHECK(brute_count(make_eq(F, {2, 2}, {2, 2}, F->neg(F->one()))) == 8);
  CHECK(brute_count(make_eq(F, {2, 2}, {4, 4}, F->neg(F->one()))) == 80);
  // mixed domains
  Equation eq = make_eq(F, {2, 2}, {2, 4}, F->zero());
  BigInt direct = brute_count(eq);
  // count again by splitting on the first variable
  BigInt split = 0;
  for (const FieldElem& x : F->subfield_elements(2)) {
    FieldElem lhs = F->mul(x, x);
    for (const FieldElem& y : F->subfield_elements(4))
      if (F->add(lhs, F->mul(y, y)) == F->zero()) split += 1;
  }
  CHECK(direct == split);
}

TEST_CASE("histogram convolution agrees with nested loops") {
  FieldCtxPtr F = build_field(3, 2);
  // four terms forces the convolution path; compare against a literal
  // quadruple loop
  Equation eq = make_eq(F, {2, 4, 2, 1}, {2, 2, 1, 2}, F->one());
  BigInt got = brute_count(eq);
  BigInt want = 0;
  for (const FieldElem& x1 : F->subfield_elements(2))
    for (const FieldElem& x2 : F->subfield_elements(2))
      for (const FieldElem& x3 : F->subfield_elements(1))
        for (const FieldElem& x4 : F->subfield_elements(2)) {
          FieldElem s = F->pow(x1, BigInt(2));
          s = F->add(s, F->pow(x2, BigInt(4)));
          s = F->add(s, F->pow(x3, BigInt(2)));
          s = F->add(s, x4);
          if (s == F->one()) want += 1;
        }
  CHECK(got == want);
}

TEST_CASE("enumeration respects the budget") {
  FieldCtxPtr F = build_field(3, 2);
  Equation eq = make_eq(F, {4, 4}, {2, 2}, F->zero());
  CHECK_THROWS_AS(brute_count(eq, 80), BudgetExceeded);
  CHECK(brute_count(eq, 81) == 33);
}

TEST_CASE("all right-hand sides at once") {
  FieldCtxPtr F = build_field(3, 2);
  Equation eq = make_eq(F, {4, 4}, {2, 2}, F->zero());
  std::vector<BigInt> all = brute_count_all_b(*F, eq.terms);
  REQUIRE(all.size() == 9);
  CHECK(all[F->index(F->zero())] == 33);
  CHECK(all[F->index(F->one())] == 24);
  BigInt total = 0;
  for (const BigInt& n : all) total += n;
  CHECK(total == 81);  // 9 * 9 domain tuples
  // every b individually agrees
  for (u64 i = 0; i < 9; ++i) {
    eq.b = F->from_index(i);
    CHECK(all[i] == brute_count(eq));
  }
}

TEST_CASE("trace level sets by enumeration") {
  FieldCtxPtr F = build_field(3, 2);
  // x^2 on F_9: values 0 once, each nonzero square twice; trace splits 9
  // elements across the three levels
  u64 total = 0;
  for (u64 lam = 0; lam < 3; ++lam)
    total += brute_trace_count(*F, F->one(), 2, 2, lam);
  CHECK(total == 9);
  // d = 1 is the plain trace, uniform onto F_3
  for (u64 lam = 0; lam < 3; ++lam)
    CHECK(brute_trace_count(*F, F->one(), 1, 2, lam) == 3);
}

TEST_CASE("radical dimension of the trace form on F_9") {
  FieldCtxPtr F = build_field(3, 2);
  // Phi(x) = tr(a x^4) on F_9, t = r = 1: nondegenerate for a = 1,
  // totally split radical for a = x = g^6 (whose square is -1)
  CHECK(bilinear_kernel_dim(*F, F->one(), 1, 1) == 0);
  CHECK(bilinear_kernel_dim(*F, F->from_coeffs({0, 1}), 1, 1) == 2);
}

TEST_CASE("radical dimensions over F_81") {
  FieldCtxPtr F = build_field(3, 4);
  // t = 2, r = 1: d = 4 divides 3^1 + 1; scan all nonzero a and record the
  // radical dimension distribution
  std::vector<unsigned> hist(5, 0);
  for (u64 k = 0; k < 80; ++k) {
    unsigned dim = bilinear_kernel_dim(*F, F->from_pow(i64(k)), 2, 1);
    REQUIRE(dim % 2 == 0);
    REQUIRE(dim <= 4);
    hist[dim]++;
  }
  // a^20 = eps = -1 picks out 2 s_half = 2 exactly for one residue class
  CHECK(hist[2] == 20);
  CHECK(hist[0] == 60);
  CHECK(hist[4] == 0);
}
