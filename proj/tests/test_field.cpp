#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diagcount/field.hpp"

using namespace diagcount;

TEST_CASE("canonical model of F_9") {
  FieldCtxPtr F = build_field(3, 2);
  CHECK(F->p() == 3);
  CHECK(F->deg() == 2);
  CHECK(F->q() == 9);
  // least irreducible: x^2 + 1
  CHECK(F->modulus() == std::vector<u64>{1, 0, 1});
  // least primitive element: x + 1
  CHECK(F->generator() == F->from_coeffs({1, 1}));
}

TEST_CASE("canonical model of F_25") {
  FieldCtxPtr F = build_field(5, 2);
  CHECK(F->modulus() == std::vector<u64>{2, 0, 1});  // x^2 + 2
}

TEST_CASE("canonical model of a prime field") {
  FieldCtxPtr F = build_field(3, 1);
  CHECK(F->modulus() == std::vector<u64>{0, 1});  // x itself
  CHECK(F->generator() == F->from_int(2));
  CHECK(F->q() == 3);
}

TEST_CASE("construction is deterministic") {
  FieldCtxPtr a = build_field(3, 4);
  FieldCtxPtr b = build_field(3, 4);
  CHECK(a->modulus() == b->modulus());
  CHECK(a->generator() == b->generator());
  for (u64 i = 0; i < a->q(); ++i)
    CHECK(a->index(a->from_index(i)) == b->index(b->from_index(i)));
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(build_field(4, 2), NotPrime);
  CHECK_THROWS_AS(build_field(2, 3), EvenCharacteristic);
  CHECK_THROWS_AS(build_field(0, 1), NotPrime);
  CHECK_THROWS_AS(build_field(3, 0), InvalidInput);
  CHECK_THROWS_AS(build_field(3, 26, 40), SizeExceeded);
  // the same field fits a larger ceiling
  CHECK_NOTHROW(build_field(3, 26, 64));
  CHECK_THROWS_AS(build_field(3, 40, 64), SizeExceeded);  // hard u64 cap
}

TEST_CASE("arithmetic closes over the field") {
  FieldCtxPtr Fp = build_field(3, 3);
  const FieldCtx& F = *Fp;
  for (u64 i = 0; i < F.q(); ++i) {
    FieldElem a = F.from_index(i);
    CHECK(F.index(a) == i);
    CHECK(F.add(a, F.neg(a)) == F.zero());
    if (!F.is_zero(a)) {
      CHECK(F.mul(a, F.inv(a)) == F.one());
      // Fermat
      CHECK(F.pow(a, BigInt(F.q() - 1)) == F.one());
    }
  }
}

TEST_CASE("discrete log inverts the power map") {
  for (auto [p, N] : {std::pair<u64, unsigned>{3, 2}, {3, 4}, {5, 3}}) {
    FieldCtxPtr Fp = build_field(p, N);
    const FieldCtx& F = *Fp;
    for (u64 k = 0; k < F.q() - 1; ++k)
      CHECK(F.dlog(F.from_pow(i64(k))) == k);
  }
}

TEST_CASE("dlog without acceleration tables") {
  // 3^19 > 2^18 forces the baby-step giant-step path
  FieldCtxPtr Fp = build_field(3, 19, 62);
  const FieldCtx& F = *Fp;
  CHECK_FALSE(F.has_tables());
  for (u64 k : {u64(0), u64(1), u64(12345), F.q() - 2})
    CHECK(F.dlog(F.from_pow(i64(k))) == k);
}

TEST_CASE("trace is linear and Frobenius-invariant") {
  FieldCtxPtr Fp = build_field(3, 4);
  const FieldCtx& F = *Fp;
  for (u64 i = 0; i < 30; ++i) {
    FieldElem a = F.from_index(i * 7 % F.q());
    FieldElem b = F.from_index(i * 13 % F.q());
    for (unsigned m : {1u, 2u}) {
      CHECK(F.trace(F.add(a, b), m) ==
            F.add(F.trace(a, m), F.trace(b, m)));
      // tr(a^{p^m}) = tr(a)
      FieldElem frob = F.pow(a, BigInt(9));  // p^m = 9 for m = 2
      if (m == 2) CHECK(F.trace(frob, m) == F.trace(a, m));
      CHECK(F.in_subfield(F.trace(a, m), m));
    }
    // transitivity: tr_{81->3} = tr_{9->3} after tr_{81->9}, with the
    // intermediate trace written out as e + e^3
    FieldElem e = F.trace(a, 2);
    CHECK(F.trace(a, 1) == F.add(e, F.pow(e, BigInt(3))));
    CHECK(F.trace_to_prime(a) == F.trace(a, 1).c[0]);
  }
}

TEST_CASE("subfield trace is intrinsic to the subfield") {
  FieldCtxPtr Fp = build_field(3, 4);
  const FieldCtx& F = *Fp;
  // at m = N both notions coincide
  for (u64 i = 0; i < F.q(); i += 5) {
    FieldElem a = F.from_index(i);
    CHECK(F.subfield_trace_to_prime(a, 4) == F.trace_to_prime(a));
  }
  // on F_9 inside F_81 the full-field trace doubles the intrinsic one:
  // tr_{81->3} = [81:9] * tr_{9->3} on subfield elements
  for (const FieldElem& e : F.subfield_elements(2)) {
    u64 sub = F.subfield_trace_to_prime(e, 2);
    CHECK(F.trace_to_prime(e) == 2 * sub % 3);
    // and it matches the hand-written Frobenius sum e + e^3
    CHECK(sub == F.add(e, F.pow(e, BigInt(3))).c[0]);
  }
  // over F_3 itself the trace is the identity on coefficients
  std::vector<u64> hits(3, 0);
  for (const FieldElem& e : F.subfield_elements(1))
    hits[F.subfield_trace_to_prime(e, 1)]++;
  CHECK(hits[0] == 1);
  CHECK(hits[1] == 1);
  CHECK(hits[2] == 1);
  CHECK_THROWS_AS(F.subfield_trace_to_prime(F.generator(), 2), NotInSubfield);
}

TEST_CASE("trace maps onto the subfield uniformly") {
  FieldCtxPtr Fp = build_field(5, 2);
  const FieldCtx& F = *Fp;
  std::vector<u64> hits(5, 0);
  for (u64 i = 0; i < F.q(); ++i) hits[F.trace_to_prime(F.from_index(i))]++;
  for (u64 h : hits) CHECK(h == 5);
}

TEST_CASE("subfield membership and enumeration") {
  FieldCtxPtr Fp = build_field(3, 4);
  const FieldCtx& F = *Fp;
  std::vector<FieldElem> sub = F.subfield_elements(2);
  REQUIRE(sub.size() == 9);
  CHECK(sub[0] == F.zero());
  CHECK(sub[1] == F.one());  // generator^0
  FieldElem g2 = F.subfield_generator(2);
  CHECK(F.pow(g2, BigInt(8)) == F.one());
  CHECK(F.pow(g2, BigInt(4)) != F.one());  // true order 8
  for (const FieldElem& e : sub) {
    CHECK(F.in_subfield(e, 2));
    // closed under the defining Frobenius
    CHECK(F.pow(e, BigInt(9)) == e);
  }
  // exactly 9 members in the whole field
  unsigned members = 0;
  for (u64 i = 0; i < F.q(); ++i)
    if (F.in_subfield(F.from_index(i), 2)) members++;
  CHECK(members == 9);
}

TEST_CASE("power character stays inside the subfield") {
  FieldCtxPtr Fp = build_field(3, 4);
  const FieldCtx& F = *Fp;
  FieldElem g2 = F.subfield_generator(2);
  CHECK(F.power_character(g2, 2, BigInt(3)) == F.pow(g2, BigInt(3)));
  CHECK(F.power_character(g2, 2, BigInt(-1)) == F.inv(g2));
  CHECK(F.power_character(F.zero(), 2, BigInt(0)) == F.one());
  // an element of F_81 outside F_9 is rejected
  CHECK_THROWS_AS(F.power_character(F.generator(), 2, BigInt(2)),
                  NotInSubfield);
}

TEST_CASE("quadratic character") {
  FieldCtxPtr Fp = build_field(3, 2);
  const FieldCtx& F = *Fp;
  CHECK(F.quadratic_character(F.zero(), 2) == 0);
  int squares = 0, nonsquares = 0;
  for (u64 k = 0; k < 8; ++k) {
    int chi = F.quadratic_character(F.from_pow(i64(k)), 2);
    CHECK(chi == (k % 2 == 0 ? 1 : -1));
    (chi == 1 ? squares : nonsquares)++;
  }
  CHECK(squares == 4);
  CHECK(nonsquares == 4);
  // -1 = g^4 is a square in F_9
  CHECK(F.quadratic_character(F.from_int(-1), 2) == 1);
  // but not in F_3
  FieldCtxPtr F3 = build_field(3, 1);
  CHECK(F3->quadratic_character(F3->from_int(-1), 1) == -1);
}

TEST_CASE("table-backed helpers agree with the generic paths") {
  FieldCtxPtr Fp = build_field(3, 4);
  const FieldCtx& F = *Fp;
  REQUIRE(F.has_tables());
  CHECK(F.log_by_index(F.index(F.zero())) == UINT64_MAX);
  for (u64 k = 0; k < F.q() - 1; ++k)
    CHECK(F.index_of_pow(k) == F.index(F.from_pow(i64(k))));
  for (u64 i = 0; i < F.q(); ++i) {
    FieldElem a = F.from_index(i);
    if (!F.is_zero(a)) CHECK(F.log_by_index(i) == F.dlog(a));
    for (unsigned m : {1u, 2u, 4u})
      CHECK(F.trace_index(i, m) == F.index(F.trace(a, m)));
  }
}

TEST_CASE("element encodings") {
  FieldCtxPtr Fp = build_field(5, 2);
  const FieldCtx& F = *Fp;
  CHECK(F.from_int(7) == F.from_int(2));
  CHECK(F.from_int(-1) == F.from_int(4));
  CHECK(F.from_coeffs({-1, 6}) == F.from_coeffs({4, 1}));
  CHECK_THROWS_AS(F.from_coeffs({1, 2, 3}), InvalidInput);
  CHECK(F.from_pow(-1) == F.inv(F.generator()));
  CHECK_THROWS_AS(F.inv(F.zero()), DivisionByZero);
}
