#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "qf3/error.hpp"

namespace qf3 {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

inline i128 checked_mul(i128 a, i128 b) {
  i128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "128-bit product overflow");
  return out;
}

inline i128 checked_add(i128 a, i128 b) {
  i128 out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "128-bit sum overflow");
  return out;
}

inline i64 narrow_i64(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw Error(ErrorKind::Overflow, "value does not fit in signed 64-bit");
  return static_cast<i64>(v);
}

/// floor(sqrt(v)) for v >= 0. The double estimate is only a starting point and
/// is corrected exactly.
inline i128 isqrt(i128 v) {
  if (v <= 0) return 0;
  i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

inline bool is_square(i128 v, i128* root = nullptr) {
  if (v < 0) return false;
  i128 r = isqrt(v);
  if (root) *root = r;
  return r * r == v;
}

inline i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

/// Nonnegative residue of a modulo m (m > 0).
inline i64 mod(i128 a, i64 m) {
  i128 r = a % m;
  if (r < 0) r += m;
  return static_cast<i64>(r);
}

/// p-adic valuation of a nonzero integer; returns a large sentinel for zero.
inline int ord_p(i128 a, i64 p) {
  if (a == 0) return std::numeric_limits<int>::max() / 4;
  if (a < 0) a = -a;
  int k = 0;
  while (a % p == 0) {
    a /= p;
    ++k;
  }
  return k;
}

inline std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  std::string s;
  // Work on the negative side so INT128_MIN does not overflow.
  if (!neg) v = -v;
  while (v != 0) {
    s.insert(s.begin(), static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (neg) s.insert(s.begin(), '-');
  return s;
}

}  // namespace qf3
