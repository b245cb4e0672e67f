#include "qf3/form.hpp"

#include <algorithm>
#include <charconv>

#include "qf3/repr.hpp"

namespace qf3 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotRepresented: return "NotRepresented";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NonIntegralImage: return "NonIntegralImage";
    case ErrorKind::NoAdjustmentWorks: return "NoAdjustmentWorks";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::LemmaViolated: return "LemmaViolated";
    case ErrorKind::NoEscape: return "NoEscape";
    case ErrorKind::PipelineStuck: return "PipelineStuck";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

i64 TernaryForm::cross(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == 0 && j == 1) return c_[5];
  if (i == 0 && j == 2) return c_[4];
  return c_[3];
}

Mat3i TernaryForm::gram() const {
  Mat3i g;
  g << 2 * a(), t(), s(),
       t(), 2 * b(), r(),
       s(), r(), 2 * c();
  return g;
}

std::string TernaryForm::to_string() const {
  std::string out = std::to_string(a()) + "," + std::to_string(b()) + "," + std::to_string(c());
  if (!is_diagonal())
    out += "," + std::to_string(r()) + "," + std::to_string(s()) + "," + std::to_string(t());
  return out;
}

TernaryForm make_form(i64 a, i64 b, i64 c, i64 r, i64 s, i64 t) {
  // Keep 2*coef and products of Gram entries comfortably inside 128 bits.
  constexpr i64 kLimit = i64{1} << 40;
  for (i64 v : {a, b, c, r, s, t})
    if (v > kLimit || v < -kLimit)
      throw Error(ErrorKind::Overflow, "coefficient magnitude exceeds 2^40");
  const i128 m1 = 2 * static_cast<i128>(a);
  const i128 m2 = 4 * static_cast<i128>(a) * b - static_cast<i128>(t) * t;
  TernaryForm f({a, b, c, r, s, t});
  const Matrix3<i128> g = f.gram().cast<i128>();
  const i128 m3 = det3(g);
  if (m1 <= 0 || m2 <= 0 || m3 <= 0)
    throw Error(ErrorKind::NotPositiveDefinite, "form " + f.to_string() + " is not positive definite");
  return f;
}

TernaryForm parse_form(std::string_view literal) {
  std::vector<i64> values;
  std::size_t pos = 0;
  while (pos <= literal.size()) {
    std::size_t comma = literal.find(',', pos);
    if (comma == std::string_view::npos) comma = literal.size();
    std::string_view token = literal.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorKind::ParseError, "bad form literal '" + std::string(literal) + "'");
    values.push_back(v);
    pos = comma + 1;
  }
  if (values.size() != 3 && values.size() != 6)
    throw Error(ErrorKind::ParseError,
                "form literal needs 3 or 6 coefficients: '" + std::string(literal) + "'");
  values.resize(6, 0);
  return make_form(values[0], values[1], values[2], values[3], values[4], values[5]);
}

i64 evaluate(const TernaryForm& f, const Vec3i& v) {
  const i128 x = v[0], y = v[1], z = v[2];
  i128 acc = 0;
  acc = checked_add(acc, checked_mul(f.a(), checked_mul(x, x)));
  acc = checked_add(acc, checked_mul(f.b(), checked_mul(y, y)));
  acc = checked_add(acc, checked_mul(f.c(), checked_mul(z, z)));
  acc = checked_add(acc, checked_mul(f.r(), checked_mul(y, z)));
  acc = checked_add(acc, checked_mul(f.s(), checked_mul(z, x)));
  acc = checked_add(acc, checked_mul(f.t(), checked_mul(x, y)));
  return narrow_i64(acc);
}

i128 bilinear(const TernaryForm& f, const Vec3i& u, const Vec3i& v) {
  const Mat3i g = f.gram();
  i128 acc = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      acc = checked_add(acc, checked_mul(checked_mul(u[i], g(i, j)), v[j]));
  return acc;
}

i64 discriminant(const TernaryForm& f) {
  return narrow_i64(det3<i128>(f.gram().cast<i128>()) / 2);
}

TernaryForm transform(const TernaryForm& f, const Mat3i& u) {
  const i128 d = det3<i128>(u.cast<i128>());
  if (d != 1 && d != -1) throw Error(ErrorKind::NotUnimodular, "change of variables has det " + qf3::to_string(d));
  Matrix3<i128> g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = bilinear(f, u.col(i), u.col(j));
  return make_form(narrow_i64(g(0, 0) / 2), narrow_i64(g(1, 1) / 2), narrow_i64(g(2, 2) / 2),
                   narrow_i64(g(1, 2)), narrow_i64(g(0, 2)), narrow_i64(g(0, 1)));
}

bool is_automorphism(const TernaryForm& f, const Mat3i& u) {
  const Mat3i g = f.gram();
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      if (bilinear(f, u.col(i), u.col(j)) != g(i, j)) return false;
  return true;
}

std::vector<Mat3i> automorphisms(const TernaryForm& f) {
  // Column i of an automorph is a vector of norm f(e_i) with prescribed inner
  // products against the earlier columns.
  const Mat3i g = f.gram();
  std::array<std::vector<Vec3i>, 3> candidates;
  for (int i = 0; i < 3; ++i) candidates[i] = representations(f, f.diag(i));

  std::vector<Mat3i> out;
  for (const Vec3i& c0 : candidates[0]) {
    for (const Vec3i& c1 : candidates[1]) {
      if (bilinear(f, c0, c1) != g(0, 1)) continue;
      for (const Vec3i& c2 : candidates[2]) {
        if (bilinear(f, c0, c2) != g(0, 2) || bilinear(f, c1, c2) != g(1, 2)) continue;
        Mat3i u;
        u.col(0) = c0;
        u.col(1) = c1;
        u.col(2) = c2;
        out.push_back(u);
      }
    }
  }
  const Mat3i id = Mat3i::Identity();
  std::sort(out.begin(), out.end(), [&](const Mat3i& x, const Mat3i& y) {
    if ((x == id) != (y == id)) return x == id;
    return std::lexicographical_compare(x.data(), x.data() + 9, y.data(), y.data() + 9);
  });
  return out;
}

}  // namespace qf3
