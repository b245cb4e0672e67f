#pragma once

// Brute-force references the library is checked against. Deliberately naive.

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <vector>

#include "qf3/form.hpp"

namespace oracle {

using qf3::i64;
using qf3::TernaryForm;
using qf3::Vec3i;

inline i64 value(const TernaryForm& f, i64 x, i64 y, i64 z) {
  return f.a() * x * x + f.b() * y * y + f.c() * z * z + f.r() * y * z + f.s() * z * x + f.t() * x * y;
}

// |x_i| <= sqrt(2 n (A^-1)_ii), padded.
inline std::vector<i64> box(const TernaryForm& f, i64 n) {
  const Eigen::Matrix3d a = f.gram().cast<double>();
  const Eigen::Matrix3d inv = a.inverse();
  std::vector<i64> b(3);
  for (int i = 0; i < 3; ++i) b[i] = static_cast<i64>(std::sqrt(2.0 * n * inv(i, i))) + 1;
  return b;
}

inline std::vector<Vec3i> reps(const TernaryForm& f, i64 n) {
  std::vector<Vec3i> out;
  const auto b = box(f, n);
  for (i64 x = -b[0]; x <= b[0]; ++x)
    for (i64 y = -b[1]; y <= b[1]; ++y)
      for (i64 z = -b[2]; z <= b[2]; ++z)
        if (value(f, x, y, z) == n) out.emplace_back(x, y, z);
  return out;  // lexicographic by construction
}

inline std::vector<qf3::u64> theta(const TernaryForm& f, i64 bound) {
  std::vector<qf3::u64> counts(bound + 1, 0);
  const auto b = box(f, bound);
  for (i64 x = -b[0]; x <= b[0]; ++x)
    for (i64 y = -b[1]; y <= b[1]; ++y)
      for (i64 z = -b[2]; z <= b[2]; ++z) {
        const i64 v = value(f, x, y, z);
        if (v <= bound) ++counts[v];
      }
  return counts;
}

// Random positive definite form with small coefficients.
inline TernaryForm random_form(std::mt19937_64& rng, i64 diag_max = 12, i64 cross_max = 4) {
  std::uniform_int_distribution<i64> dd(1, diag_max), dc(-cross_max, cross_max);
  for (;;) {
    const i64 a = dd(rng), b = dd(rng), c = dd(rng), r = dc(rng), s = dc(rng), t = dc(rng);
    // leading minors of the Gram matrix
    if (4 * a * b - t * t <= 0) continue;
    const i64 det = 2 * a * (4 * b * c - r * r) - t * (2 * t * c - r * s) + s * (t * r - 2 * b * s);
    if (det <= 0) continue;
    return qf3::make_form(a, b, c, r, s, t);
  }
}

}  // namespace oracle
