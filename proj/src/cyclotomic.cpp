#include "diagcount/cyclotomic.hpp"

#include <string>

#include "diagcount/factor.hpp"

namespace diagcount {

CycloRing::CycloRing(u64 p, bool four_p) : p_(p) {
  if (p < 3 || !is_prime_u64(p))
    throw NotPrime("conductor base " + std::to_string(p) +
                   " must be an odd prime");
  if (!four_p) {
    // Phi_p = 1 + x + ... + x^{p-1}.
    m_ = p;
    phi_ = p - 1;
    cyclo_.assign(p, 1);
  } else {
    // Phi_{4p}(x) = Phi_p(-x^2): alternating +-1 on even degrees.
    m_ = 4 * p;
    phi_ = 2 * (p - 1);
    cyclo_.assign(phi_ + 1, 0);
    for (u64 k = 0; k < p; ++k) cyclo_[2 * k] = (k % 2 == 0) ? 1 : -1;
  }
}

void CycloRing::check(const CycloInt& a) const {
  if (a.conductor != m_ || a.c.size() != phi_)
    throw ConductorMismatch("element of Z[zeta_" +
                            std::to_string(a.conductor) +
                            "] used in Z[zeta_" + std::to_string(m_) + "]");
}

std::vector<BigInt> CycloRing::reduce(std::vector<BigInt> v) const {
  if (v.size() < phi_) v.resize(phi_, 0);
  for (size_t k = v.size(); k-- > phi_;) {
    BigInt c = v[k];
    if (c == 0) continue;
    v[k] = 0;
    for (size_t i = 0; i < phi_; ++i) v[k - phi_ + i] -= c * cyclo_[i];
  }
  v.resize(phi_);
  return v;
}

CycloInt CycloRing::zero() const {
  return CycloInt{m_, std::vector<BigInt>(phi_, 0)};
}

CycloInt CycloRing::one() const { return from_int(1); }

CycloInt CycloRing::from_int(const BigInt& n) const {
  CycloInt a = zero();
  a.c[0] = n;
  return a;
}

CycloInt CycloRing::zeta_pow(i64 k) const {
  i64 r = k % i64(m_);
  if (r < 0) r += i64(m_);
  std::vector<BigInt> v(size_t(r) + 1, 0);
  v[size_t(r)] = 1;
  return CycloInt{m_, reduce(std::move(v))};
}

CycloInt CycloRing::add(const CycloInt& a, const CycloInt& b) const {
  check(a);
  check(b);
  CycloInt r = a;
  for (size_t i = 0; i < phi_; ++i) r.c[i] += b.c[i];
  return r;
}

CycloInt CycloRing::sub(const CycloInt& a, const CycloInt& b) const {
  check(a);
  check(b);
  CycloInt r = a;
  for (size_t i = 0; i < phi_; ++i) r.c[i] -= b.c[i];
  return r;
}

CycloInt CycloRing::neg(const CycloInt& a) const {
  check(a);
  CycloInt r = a;
  for (BigInt& x : r.c) x = -x;
  return r;
}

CycloInt CycloRing::mul(const CycloInt& a, const CycloInt& b) const {
  check(a);
  check(b);
  std::vector<BigInt> v(2 * phi_ - 1, 0);
  for (size_t i = 0; i < phi_; ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < phi_; ++j) {
      if (b.c[j] == 0) continue;
      v[i + j] += a.c[i] * b.c[j];
    }
  }
  return CycloInt{m_, reduce(std::move(v))};
}

CycloInt CycloRing::mul_int(const CycloInt& a, const BigInt& n) const {
  check(a);
  CycloInt r = a;
  for (BigInt& x : r.c) x *= n;
  return r;
}

CycloInt CycloRing::conj(const CycloInt& a) const {
  check(a);
  std::vector<BigInt> v(m_, 0);
  for (size_t i = 0; i < phi_; ++i) {
    if (a.c[i] == 0) continue;
    v[(m_ - i) % m_] += a.c[i];
  }
  return CycloInt{m_, reduce(std::move(v))};
}

bool CycloRing::equal(const CycloInt& a, const CycloInt& b) const {
  check(a);
  check(b);
  return a.c == b.c;
}

bool CycloRing::is_rational_integer(const CycloInt& a) const {
  check(a);
  for (size_t i = 1; i < phi_; ++i)
    if (a.c[i] != 0) return false;
  return true;
}

BigInt CycloRing::to_integer(const CycloInt& a) const {
  if (!is_rational_integer(a))
    throw NotRationalInteger("element has nonzero zeta coordinates");
  return a.c[0];
}

int legendre(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

CycloInt gauss_sum_quadratic(const CycloRing& R) {
  // zeta_p is zeta when the conductor is p, zeta^4 when it is 4p.
  i64 step = R.conductor() == R.p() ? 1 : 4;
  CycloInt g = R.zero();
  for (u64 l = 1; l < R.p(); ++l) {
    CycloInt z = R.zeta_pow(step * i64(l));
    g = legendre(l, R.p()) == 1 ? R.add(g, z) : R.sub(g, z);
  }
  return g;
}

CycloInt sqrt_p(const CycloRing& R) {
  CycloInt g = gauss_sum_quadratic(R);
  if (R.p() % 4 == 1) return g;
  if (R.conductor() != 4 * R.p())
    throw ConductorMismatch(
        "sqrt(p) for p = 3 (mod 4) needs the conductor-4p ring");
  CycloInt i = R.zeta_pow(i64(R.p()));
  return R.neg(R.mul(i, g));
}

}  // namespace diagcount
