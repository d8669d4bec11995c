#pragma once

#include <cstdint>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace diagcount {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(u128(a) * b % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  if (s >= m || s < a) s -= m;
  return s;
}

inline u64 powmod(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// p^e as a u64; caller guarantees no overflow.
inline u64 ipow_u64(u64 p, unsigned e) {
  u64 r = 1;
  while (e--) r *= p;
  return r;
}

inline BigInt ipow_big(u64 p, u64 e) {
  BigInt r = 1;
  BigInt b = p;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

}  // namespace diagcount

