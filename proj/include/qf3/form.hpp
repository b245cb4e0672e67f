#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "qf3/arith.hpp"

namespace qf3 {

template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

using Mat3i = Matrix3<i64>;
using Vec3i = Vector3<i64>;

/// Exact cofactor-expansion determinant. Instantiate with a wide scalar
/// (i128) when the entries are 64-bit.
template <typename Scalar>
Scalar det3(const Matrix3<Scalar>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Lexicographic order on integer triples; used wherever output order must be
/// deterministic.
inline bool lex_less(const Vec3i& a, const Vec3i& b) {
  return std::lexicographical_compare(a.data(), a.data() + 3, b.data(), b.data() + 3);
}

/// Positive definite integral form ax^2+by^2+cz^2+ryz+szx+txy.
///
/// Instances only come out of make_form / parse_form / transform, so every
/// live value is positive definite.
class TernaryForm {
 public:
  using Coefficients = std::array<i64, 6>;

  i64 a() const { return c_[0]; }
  i64 b() const { return c_[1]; }
  i64 c() const { return c_[2]; }
  i64 r() const { return c_[3]; }
  i64 s() const { return c_[4]; }
  i64 t() const { return c_[5]; }
  const Coefficients& coefficients() const { return c_; }

  /// Coefficient of x_i^2.
  i64 diag(int i) const { return c_[i]; }
  /// Coefficient of x_i x_j for i != j.
  i64 cross(int i, int j) const;

  bool is_diagonal() const { return c_[3] == 0 && c_[4] == 0 && c_[5] == 0; }

  /// Associated matrix: diagonal (2a,2b,2c), off-diagonal (t,s,r).
  Mat3i gram() const;

  /// "a,b,c" for diagonal forms, "a,b,c,r,s,t" otherwise.
  std::string to_string() const;

  auto operator<=>(const TernaryForm&) const = default;

 private:
  explicit TernaryForm(const Coefficients& c) : c_(c) {}
  friend TernaryForm make_form(i64, i64, i64, i64, i64, i64);

  Coefficients c_;
};

TernaryForm make_form(i64 a, i64 b, i64 c, i64 r = 0, i64 s = 0, i64 t = 0);

/// Parses the literal "a,b,c[,r,s,t]".
TernaryForm parse_form(std::string_view literal);

i64 evaluate(const TernaryForm& f, const Vec3i& v);

/// u^T A v with A the associated matrix (so bilinear(f, v, v) = 2 f(v)).
i128 bilinear(const TernaryForm& f, const Vec3i& u, const Vec3i& v);

/// det(A)/2.
i64 discriminant(const TernaryForm& f);

/// Form whose associated matrix is U^T A U, i.e. v -> f(U v).
TernaryForm transform(const TernaryForm& f, const Mat3i& u);

bool is_automorphism(const TernaryForm& f, const Mat3i& u);

/// The full integral isometry group, sorted lexicographically by column-major
/// entries with the identity first.
std::vector<Mat3i> automorphisms(const TernaryForm& f);

}  // namespace qf3
