#pragma once

#include <vector>

#include "diagcount/errors.hpp"
#include "diagcount/ints.hpp"

namespace diagcount {

// Element of Z[zeta_m] on the power basis 1, zeta, ..., zeta^{phi(m)-1},
// reduced modulo the m-th cyclotomic polynomial. Only conductors m = p and
// m = 4p (p an odd prime) arise here, and both have a power integral
// basis, so "all non-constant coordinates vanish" exactly characterizes
// rational integers.
struct CycloInt {
  u64 conductor = 0;
  std::vector<BigInt> c;
};

class CycloRing {
 public:
  // Conductor p (four_p = false) or 4p (four_p = true), p an odd prime.
  CycloRing(u64 p, bool four_p);

  u64 p() const { return p_; }
  u64 conductor() const { return m_; }
  size_t degree() const { return phi_; }

  CycloInt zero() const;
  CycloInt one() const;
  CycloInt from_int(const BigInt& n) const;
  // zeta^k for any integer k (reduced mod the conductor).
  CycloInt zeta_pow(i64 k) const;

  CycloInt add(const CycloInt& a, const CycloInt& b) const;
  CycloInt sub(const CycloInt& a, const CycloInt& b) const;
  CycloInt neg(const CycloInt& a) const;
  CycloInt mul(const CycloInt& a, const CycloInt& b) const;
  CycloInt mul_int(const CycloInt& a, const BigInt& n) const;
  // zeta -> zeta^{-1}, complex conjugation.
  CycloInt conj(const CycloInt& a) const;

  bool equal(const CycloInt& a, const CycloInt& b) const;
  bool is_rational_integer(const CycloInt& a) const;
  // Throws NotRationalInteger if a has any nonzero zeta coordinate.
  BigInt to_integer(const CycloInt& a) const;

 private:
  void check(const CycloInt& a) const;
  // Reduce a coefficient vector of any length modulo the cyclotomic
  // polynomial (monic, so this is exact integer division).
  std::vector<BigInt> reduce(std::vector<BigInt> v) const;

  u64 p_, m_;
  size_t phi_;
  std::vector<BigInt> cyclo_;  // low degree first, degree phi_, monic
};

// Legendre symbol of a mod p: -1, 0, +1.
int legendre(u64 a, u64 p);

// Quadratic Gauss sum g = sum_{l=1}^{p-1} legendre(l, p) zeta_p^l in the
// given ring (conductor p or 4p). Satisfies g^2 = legendre(-1, p) p and
// g conj(g) = p.
CycloInt gauss_sum_quadratic(const CycloRing& R);

// A square root of p: g itself when p = 1 (mod 4), -i g when p = 3
// (mod 4). The latter needs i = zeta_{4p}^p, so the ring must have
// conductor 4p; ConductorMismatch otherwise.
CycloInt sqrt_p(const CycloRing& R);

}  // namespace diagcount
