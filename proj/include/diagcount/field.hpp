#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diagcount/errors.hpp"
#include "diagcount/factor.hpp"
#include "diagcount/ints.hpp"

namespace diagcount {

// Element of F_{p^N} on the power basis of the defining modulus:
// c[0] + c[1] x + ... + c[N-1] x^{N-1}, entries reduced mod p.
struct FieldElem {
  std::vector<u64> c;
  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

// F_{p^N} for an odd prime p, built deterministically:
//   * the modulus is the lexicographically least monic irreducible of
//     degree N, comparing coefficient vectors (c_0,...,c_{N-1}) as the
//     base-p integer sum c_i p^i;
//   * the distinguished generator is the least element, in the same
//     ordering, of multiplicative order p^N - 1.
// The same (p, N) always yields the same modulus, generator, and hence the
// same packed index for every element.
class FieldCtx {
 public:
  // max_bits caps bits(p^N); default 40. Values above 62 are rejected so
  // that q and q-1 arithmetic stays inside u64.
  static FieldCtx build(u64 p, unsigned N, unsigned max_bits = 40);

  u64 p() const { return p_; }
  unsigned deg() const { return N_; }
  u64 q() const { return q_; }

  // Modulus coefficients c_0..c_N with c_N = 1.
  const std::vector<u64>& modulus() const { return modulus_; }
  const FieldElem& generator() const { return gen_; }
  const Factorization& unit_order_factorization() const { return q1_fact_; }

  FieldElem zero() const { return FieldElem{std::vector<u64>(N_, 0)}; }
  FieldElem one() const { return from_int(1); }

  // Encodings. from_int reduces mod p; from_pow is generator^k (k may be
  // negative); from_coeffs reduces each coefficient mod p and requires at
  // most N entries.
  FieldElem from_int(i64 v) const;
  FieldElem from_pow(i64 k) const;
  FieldElem from_coeffs(const std::vector<i64>& coeffs) const;

  // Packed index sum c_i p^i in [0, q); the inverse of from_index.
  u64 index(const FieldElem& a) const;
  FieldElem from_index(u64 idx) const;

  bool is_zero(const FieldElem& a) const;
  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem pow(const FieldElem& a, const BigInt& e) const;

  // Discrete log base the distinguished generator; requires a != 0.
  u64 dlog(const FieldElem& a) const;

  // Subfield F_{p^m} for m | N.
  bool divides_degree(unsigned m) const { return m >= 1 && N_ % m == 0; }
  bool in_subfield(const FieldElem& a, unsigned m) const;

  // Relative trace tr_{p^N -> p^m}(a) = sum of a^{p^{m j}}, j < N/m.
  FieldElem trace(const FieldElem& a, unsigned m) const;
  // tr_{p^N -> p}(a) as an integer in [0, p).
  u64 trace_to_prime(const FieldElem& a) const;
  // tr_{p^m -> p}(a) for a in F_{p^m}: the trace of the subfield over its
  // prime field. Not the restriction of trace_to_prime, which picks up a
  // factor N/m on subfield elements.
  u64 subfield_trace_to_prime(const FieldElem& a, unsigned m) const;

  // generator^{(q-1)/(p^m-1)}, a generator of F_{p^m}^*.
  FieldElem subfield_generator(unsigned m) const;
  // 0 first, then increasing powers of subfield_generator(m).
  std::vector<FieldElem> subfield_elements(unsigned m) const;

  // x^e where x must lie in F_{p^m}; e may be any integer (negative uses
  // the inverse; 0^0 = 1; 0^negative throws DivisionByZero).
  FieldElem power_character(const FieldElem& x, unsigned m,
                            const BigInt& e) const;
  // Quadratic character of F_{p^m}: -1, 0, +1.
  int quadratic_character(const FieldElem& x, unsigned m) const;

  // O(1) table-backed helpers, available when q <= kTableLimit (always the
  // case on enumeration-scale fields). Generic callers should branch on
  // has_tables().
  static constexpr u64 kTableLimit = u64(1) << 18;
  bool has_tables() const { return !log_.empty(); }
  // dlog by packed index; UINT64_MAX for the zero element.
  u64 log_by_index(u64 idx) const { return log_[idx]; }
  u64 index_of_pow(u64 k) const { return exp_[k]; }
  // packed index of tr_{p^N -> p^m}(element with packed index idx).
  u64 trace_index(u64 idx, unsigned m) const;

  std::string describe() const;

 private:
  FieldCtx() = default;

  std::vector<u64> poly_mul_mod(const std::vector<u64>& a,
                                const std::vector<u64>& b) const;
  void build_tables();

  u64 p_ = 0;
  unsigned N_ = 0;
  u64 q_ = 0;
  std::vector<u64> modulus_;
  FieldElem gen_;
  Factorization q1_fact_;
  std::vector<unsigned> deg_divisors_;

  // trace_basis_[di][i] = tr_{p^N -> p^{m}}(x^i) for m = deg_divisors_[di];
  // trace is evaluated by linearity from these.
  std::vector<std::vector<FieldElem>> trace_basis_;

  std::vector<u64> log_;                     // packed index -> dlog
  std::vector<u64> exp_;                     // dlog -> packed index
  std::vector<std::vector<u32>> trace_tab_;  // per divisor: packed -> packed
};

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

FieldCtxPtr build_field(u64 p, unsigned N, unsigned max_bits = 40);

// "x^2 + 1" style rendering, coefficients given low degree first.
std::string format_poly(const std::vector<u64>& coeffs);

}  // namespace diagcount
