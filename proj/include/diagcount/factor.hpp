#pragma once

#include <utility>
#include <vector>

#include "diagcount/ints.hpp"

namespace diagcount {

// Prime factorization, sorted by prime, exponents >= 1.
struct Factorization {
  std::vector<std::pair<u64, unsigned>> primes;

  bool has(u64 p) const {
    for (const auto& [q, e] : primes)
      if (q == p) return true;
    return false;
  }
};

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(u64 n);

// Trial division to 10^6, then Pollard rho (Brent variant) with a fixed
// deterministic parameter schedule and a bounded step count. Throws
// FactorizationFailure if the budget is exhausted, so callers never spin.
Factorization factorize_u64(u64 n);

// All positive divisors of n, ascending.
std::vector<u64> divisors_of(u64 n);

}  // namespace diagcount
