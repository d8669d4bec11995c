#include "diagcount/factor.hpp"

#include <algorithm>

#include "diagcount/errors.hpp"

namespace diagcount {

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned r) {
  u64 x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

constexpr u64 kTrialBound = 1000000;
constexpr u64 kRhoStepBudget = u64(1) << 27;

// Brent's cycle-finding variant of Pollard rho with polynomial x^2 + c.
// Returns a nontrivial factor of composite n, or 0 if the step budget runs
// out across the whole parameter schedule.
u64 pollard_brent(u64 n, u64& budget) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1; c < 64; ++c) {
    u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const u64 m = 128;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = addmod(mulmod(y, y, n), c, n);
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        u64 lim = std::min(m, r - k);
        if (lim > budget) return 0;
        budget -= lim;
        for (u64 i = 0; i < lim; ++i) {
          y = addmod(mulmod(y, y, n), c, n);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r <<= 1;
      if (budget == 0) return 0;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = addmod(mulmod(ys, ys, n), c, n);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
        if (budget-- == 0) return 0;
      }
    }
    if (g != n) return g;
  }
  return 0;
}

void factor_rec(u64 n, std::vector<u64>& out, u64& budget) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n, budget);
  if (d == 0 || d == n)
    throw FactorizationFailure("factorization budget exhausted on " +
                               std::to_string(n));
  factor_rec(d, out, budget);
  factor_rec(n / d, out, budget);
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) d >>= 1, ++r;
  // This base set is a proven deterministic test for all n < 2^64.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

Factorization factorize_u64(u64 n) {
  Factorization f;
  if (n == 0) throw InvalidInput("factorize_u64: n must be positive");
  std::vector<u64> primes;
  for (u64 p = 2; p <= kTrialBound && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  if (n > 1) {
    u64 budget = kRhoStepBudget;
    factor_rec(n, primes, budget);
  }
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!f.primes.empty() && f.primes.back().first == p)
      ++f.primes.back().second;
    else
      f.primes.push_back({p, 1});
  }
  return f;
}

std::vector<u64> divisors_of(u64 n) {
  Factorization f = factorize_u64(n);
  std::vector<u64> divs = {1};
  for (const auto& [p, e] : f.primes) {
    size_t base = divs.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace diagcount
