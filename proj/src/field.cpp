#include "diagcount/field.hpp"

#include <algorithm>
#include <sstream>

namespace diagcount {

namespace {

// Dense polynomial helpers over F_p, coefficients low degree first.

void ptrim(std::vector<u64>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<u64> pmod(std::vector<u64> a, const std::vector<u64>& f, u64 p) {
  ptrim(a);
  u64 lead_inv = powmod(f.back(), p - 2, p);
  while (a.size() >= f.size()) {
    u64 c = mulmod(a.back(), lead_inv, p);
    size_t shift = a.size() - f.size();
    for (size_t i = 0; i < f.size(); ++i) {
      u64 sub = mulmod(c, f[i], p);
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    ptrim(a);
  }
  return a;
}

std::vector<u64> pgcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    a = pmod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

std::vector<u64> pmul(const std::vector<u64>& a, const std::vector<u64>& b,
                      u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + u128(a[i]) * b[j]) % p;
  }
  return r;
}

std::vector<u64> ppowmod(std::vector<u64> base, u64 e,
                         const std::vector<u64>& f, u64 p) {
  std::vector<u64> r = {1};
  base = pmod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = pmod(pmul(r, base, p), f, p);
    base = pmod(pmul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

// Irreducibility over F_p: f of degree N is irreducible iff x^{p^N} = x
// mod f and gcd(x^{p^k} - x, f) = 1 for every k < N.
bool is_irreducible(const std::vector<u64>& f, u64 p, unsigned N) {
  std::vector<u64> x = {0, 1};
  std::vector<u64> y = pmod(x, f, p);
  for (unsigned k = 1; k <= N; ++k) {
    y = ppowmod(y, p, f, p);
    std::vector<u64> diff = y;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    diff = pmod(std::move(diff), f, p);
    if (k < N) {
      std::vector<u64> g = pgcd(diff, f, p);
      if (g.size() != 1) return false;
    } else {
      if (!diff.empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldCtx FieldCtx::build(u64 p, unsigned N, unsigned max_bits) {
  if (N == 0) throw InvalidInput("extension degree must be positive");
  if (p == 2) throw EvenCharacteristic("characteristic 2 is unsupported");
  if (p < 2 || !is_prime_u64(p))
    throw NotPrime(std::to_string(p) + " is not prime");
  unsigned cap = std::min(max_bits, 62u);
  u128 qw = 1;
  for (unsigned i = 0; i < N; ++i) {
    qw *= p;
    if (qw >> cap)
      throw SizeExceeded("p^N exceeds the 2^" + std::to_string(cap) +
                         " ceiling");
  }

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.N_ = N;
  ctx.q_ = static_cast<u64>(qw);

  // Scan lower-coefficient vectors in base-p counter order; the first
  // irreducible hit is the lexicographic minimum.
  for (u64 val = 0;; ++val) {
    if (val >= ctx.q_)
      throw IntegralityViolation("no irreducible polynomial found");
    std::vector<u64> f(N + 1, 0);
    u64 v = val;
    for (unsigned i = 0; i < N; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[N] = 1;
    if (is_irreducible(f, p, N)) {
      ctx.modulus_ = f;
      break;
    }
  }

  ctx.q1_fact_ = factorize_u64(ctx.q_ - 1);
  for (u64 d : divisors_of(N)) ctx.deg_divisors_.push_back(unsigned(d));

  // Basis traces tr(x^i) for each subfield degree; trace of a general
  // element follows by F_p-linearity.
  ctx.trace_basis_.resize(ctx.deg_divisors_.size());
  for (size_t di = 0; di < ctx.deg_divisors_.size(); ++di) {
    unsigned m = ctx.deg_divisors_[di];
    u64 pm = ipow_u64(p, m);
    for (unsigned i = 0; i < N; ++i) {
      FieldElem xi = ctx.zero();
      xi.c[i] = 1;
      FieldElem acc = xi;
      FieldElem t = xi;
      for (unsigned j = 1; j < N / m; ++j) {
        t = ctx.pow(t, BigInt(pm));
        acc = ctx.add(acc, t);
      }
      ctx.trace_basis_[di].push_back(acc);
    }
  }

  // Least primitive element in index order.
  std::vector<u64> cofactors;
  for (const auto& [ell, e] : ctx.q1_fact_.primes)
    cofactors.push_back((ctx.q_ - 1) / ell);
  for (u64 idx = 1;; ++idx) {
    if (idx >= ctx.q_)
      throw IntegralityViolation("no primitive element found");
    FieldElem e = ctx.from_index(idx);
    bool primitive = true;
    for (u64 c : cofactors) {
      if (ctx.pow(e, BigInt(c)) == ctx.one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      ctx.gen_ = e;
      break;
    }
  }

  if (ctx.q_ <= kTableLimit) ctx.build_tables();
  return ctx;
}

FieldCtxPtr build_field(u64 p, unsigned N, unsigned max_bits) {
  return std::make_shared<const FieldCtx>(FieldCtx::build(p, N, max_bits));
}

FieldElem FieldCtx::from_int(i64 v) const {
  FieldElem e = zero();
  i64 r = v % i64(p_);
  if (r < 0) r += i64(p_);
  e.c[0] = u64(r);
  return e;
}

FieldElem FieldCtx::from_pow(i64 k) const {
  BigInt e = k;
  return pow(gen_, e);
}

FieldElem FieldCtx::from_coeffs(const std::vector<i64>& coeffs) const {
  if (coeffs.size() > N_)
    throw InvalidInput("coefficient vector longer than extension degree");
  FieldElem e = zero();
  for (size_t i = 0; i < coeffs.size(); ++i) {
    i64 r = coeffs[i] % i64(p_);
    if (r < 0) r += i64(p_);
    e.c[i] = u64(r);
  }
  return e;
}

u64 FieldCtx::index(const FieldElem& a) const {
  u64 idx = 0;
  for (unsigned i = N_; i-- > 0;) idx = idx * p_ + a.c[i];
  return idx;
}

FieldElem FieldCtx::from_index(u64 idx) const {
  FieldElem e = zero();
  for (unsigned i = 0; i < N_; ++i) {
    e.c[i] = idx % p_;
    idx /= p_;
  }
  return e;
}

bool FieldCtx::is_zero(const FieldElem& a) const {
  for (u64 v : a.c)
    if (v) return false;
  return true;
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = a;
  for (unsigned i = 0; i < N_; ++i) {
    r.c[i] += b.c[i];
    if (r.c[i] >= p_) r.c[i] -= p_;
  }
  return r;
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = a;
  for (unsigned i = 0; i < N_; ++i) {
    r.c[i] += p_ - b.c[i];
    if (r.c[i] >= p_) r.c[i] -= p_;
  }
  return r;
}

FieldElem FieldCtx::neg(const FieldElem& a) const { return sub(zero(), a); }

std::vector<u64> FieldCtx::poly_mul_mod(const std::vector<u64>& a,
                                        const std::vector<u64>& b) const {
  std::vector<u64> r(2 * N_ - 1, 0);
  for (unsigned i = 0; i < N_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < N_; ++j)
      r[i + j] = (r[i + j] + u128(a[i]) * b[j]) % p_;
  }
  for (unsigned k = 2 * N_ - 2; k >= N_; --k) {
    u64 c = r[k];
    if (c) {
      r[k] = 0;
      for (unsigned i = 0; i < N_; ++i) {
        u64 sub = mulmod(c, modulus_[i], p_);
        r[k - N_ + i] = (r[k - N_ + i] + p_ - sub) % p_;
      }
    }
    if (k == N_) break;
  }
  r.resize(N_);
  return r;
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
  if (N_ == 1) return FieldElem{{mulmod(a.c[0], b.c[0], p_)}};
  return FieldElem{poly_mul_mod(a.c, b.c)};
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
  if (is_zero(a)) throw DivisionByZero("inverse of zero");
  return pow(a, BigInt(q_ - 2));
}

FieldElem FieldCtx::pow(const FieldElem& a, const BigInt& e) const {
  if (is_zero(a)) {
    if (e > 0) return zero();
    if (e == 0) return one();
    throw DivisionByZero("zero raised to a negative power");
  }
  BigInt r = e % (q_ - 1);
  if (r < 0) r += q_ - 1;
  u64 k = r.convert_to<u64>();
  FieldElem acc = one();
  FieldElem base = a;
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

u64 FieldCtx::dlog(const FieldElem& a) const {
  if (is_zero(a)) throw DivisionByZero("discrete log of zero");
  if (has_tables()) return log_[index(a)];
  // Baby-step giant-step.
  u64 n = q_ - 1;
  u64 m = 1;
  while (m * m < n) ++m;
  std::vector<std::pair<u64, u64>> baby;  // (packed index, exponent)
  baby.reserve(m);
  FieldElem cur = one();
  for (u64 j = 0; j < m; ++j) {
    baby.push_back({index(cur), j});
    cur = mul(cur, gen_);
  }
  std::sort(baby.begin(), baby.end());
  FieldElem giant_step = inv(pow(gen_, BigInt(m)));
  FieldElem gamma = a;
  for (u64 i = 0; i <= m; ++i) {
    u64 key = index(gamma);
    auto it = std::lower_bound(baby.begin(), baby.end(),
                               std::make_pair(key, u64(0)));
    if (it != baby.end() && it->first == key) return (i * m + it->second) % n;
    gamma = mul(gamma, giant_step);
  }
  throw IntegralityViolation("discrete log not found");
}

bool FieldCtx::in_subfield(const FieldElem& a, unsigned m) const {
  if (!divides_degree(m))
    throw NotADivisor("subfield degree " + std::to_string(m) +
                      " does not divide " + std::to_string(N_));
  if (m == N_) return true;
  if (is_zero(a)) return true;
  if (has_tables()) {
    u64 step = (q_ - 1) / (ipow_u64(p_, m) - 1);
    return log_[index(a)] % step == 0;
  }
  return pow(a, BigInt(ipow_u64(p_, m))) == a;
}

FieldElem FieldCtx::trace(const FieldElem& a, unsigned m) const {
  if (!divides_degree(m))
    throw NotADivisor("trace target degree " + std::to_string(m) +
                      " does not divide " + std::to_string(N_));
  size_t di =
      std::find(deg_divisors_.begin(), deg_divisors_.end(), m) -
      deg_divisors_.begin();
  if (!trace_tab_.empty())
    return from_index(trace_tab_[di][index(a)]);
  FieldElem acc = zero();
  for (unsigned i = 0; i < N_; ++i) {
    if (a.c[i] == 0) continue;
    const FieldElem& bi = trace_basis_[di][i];
    for (unsigned k = 0; k < N_; ++k)
      acc.c[k] = (acc.c[k] + u128(a.c[i]) * bi.c[k]) % p_;
  }
  return acc;
}

u64 FieldCtx::trace_to_prime(const FieldElem& a) const {
  return trace(a, 1).c[0];
}

u64 FieldCtx::subfield_trace_to_prime(const FieldElem& a, unsigned m) const {
  if (!in_subfield(a, m))
    throw NotInSubfield("element does not lie in the degree-" +
                        std::to_string(m) + " subfield");
  FieldElem acc = a;
  FieldElem f = a;
  for (unsigned j = 1; j < m; ++j) {
    f = pow(f, BigInt(p_));
    acc = add(acc, f);
  }
  return acc.c[0];
}

u64 FieldCtx::trace_index(u64 idx, unsigned m) const {
  size_t di =
      std::find(deg_divisors_.begin(), deg_divisors_.end(), m) -
      deg_divisors_.begin();
  return trace_tab_[di][idx];
}

FieldElem FieldCtx::subfield_generator(unsigned m) const {
  if (!divides_degree(m))
    throw NotADivisor("subfield degree " + std::to_string(m) +
                      " does not divide " + std::to_string(N_));
  u64 step = (q_ - 1) / (ipow_u64(p_, m) - 1);
  return pow(gen_, BigInt(step));
}

std::vector<FieldElem> FieldCtx::subfield_elements(unsigned m) const {
  FieldElem g = subfield_generator(m);
  u64 pm = ipow_u64(p_, m);
  std::vector<FieldElem> out;
  out.reserve(pm);
  out.push_back(zero());
  FieldElem cur = one();
  for (u64 k = 0; k + 1 < pm; ++k) {
    out.push_back(cur);
    cur = mul(cur, g);
  }
  return out;
}

FieldElem FieldCtx::power_character(const FieldElem& x, unsigned m,
                                    const BigInt& e) const {
  if (!in_subfield(x, m))
    throw NotInSubfield("element does not lie in the degree-" +
                        std::to_string(m) + " subfield");
  return pow(x, e);
}

int FieldCtx::quadratic_character(const FieldElem& x, unsigned m) const {
  if (!in_subfield(x, m))
    throw NotInSubfield("element does not lie in the degree-" +
                        std::to_string(m) + " subfield");
  if (is_zero(x)) return 0;
  FieldElem v = pow(x, BigInt((ipow_u64(p_, m) - 1) / 2));
  return v == one() ? 1 : -1;
}

void FieldCtx::build_tables() {
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, UINT64_MAX);
  FieldElem cur = one();
  for (u64 k = 0; k + 1 < q_; ++k) {
    u64 idx = index(cur);
    exp_[k] = idx;
    log_[idx] = k;
    cur = mul(cur, gen_);
  }
  trace_tab_.resize(deg_divisors_.size());
  for (size_t di = 0; di < deg_divisors_.size(); ++di) {
    trace_tab_[di].assign(q_, 0);
    for (u64 idx = 0; idx < q_; ++idx) {
      FieldElem a = from_index(idx);
      FieldElem acc = zero();
      for (unsigned i = 0; i < N_; ++i) {
        if (a.c[i] == 0) continue;
        const FieldElem& bi = trace_basis_[di][i];
        for (unsigned k = 0; k < N_; ++k)
          acc.c[k] = (acc.c[k] + u128(a.c[i]) * bi.c[k]) % p_;
      }
      trace_tab_[di][idx] = u32(index(acc));
    }
  }
}

std::string format_poly(const std::vector<u64>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs.size(); i-- > 0;) {
    u64 c = coeffs[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) {
      if (c != 1) os << "*";
      os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "F_{" << p_ << "^" << N_ << "}, modulus " << format_poly(modulus_)
     << ", generator " << format_poly(gen_.c);
  return os.str();
}

}  // namespace diagcount
