#include "qf3/descent.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <numeric>
#include <set>

#include "qf3/repr.hpp"

namespace qf3 {

namespace {

int ord5_gcd(i64 x, i64 y) { return ord_p(std::gcd(x, y), 5); }

i64 pow5(int k) {
  i64 r = 1;
  while (k-- > 0) r = narrow_i64(checked_mul(r, 5));
  return r;
}

}  // namespace

DescentResult descent_2_3_mod5(i64 x, i64 y) {
  if (x == 0 && y == 0) throw Error(ErrorKind::InvalidInput, "descent needs (x, y) != (0, 0)");
  const i128 n = checked_add(checked_mul(2, checked_mul(x, x)), checked_mul(3, checked_mul(y, y)));
  if (n % 5 != 0) throw Error(ErrorKind::InvalidInput, "5 does not divide 2x^2+3y^2 = " + to_string(n));

  DescentResult out;
  int k = ord5_gcd(x, y);
  while (k >= 1) {
    const i64 scale = pow5(k);
    const i64 x0 = x / scale, y0 = y / scale;
    const int eps = mod(x0 + 6 * y0, 5) != 0 ? 1 : -1;
    out.trace.push_back({x, y, k, eps});
    const i64 lower = scale / 5;
    x = narrow_i64(checked_mul(lower, x0 + 6 * eps * y0));
    y = narrow_i64(checked_mul(lower, 4 * x0 - eps * y0));
    const int next = ord5_gcd(x, y);
    if (next != k - 1) throw Error(ErrorKind::LemmaViolated, "descent step did not lower ord_5(gcd)");
    k = next;
  }
  out.trace.push_back({x, y, 0, 0});
  if (mod(x, 5) == 0 || mod(y, 5) == 0)
    throw Error(ErrorKind::LemmaViolated, "descent ended with 5 | uv");
  out.u = x;
  out.v = y;
  return out;
}

std::pair<i64, i64> nondivisible_rep_2_2_3(i64 n) {
  if (n <= 0 || n % 3 != 0) throw Error(ErrorKind::InvalidInput, "need n > 0 with 3 | n, got " + std::to_string(n));
  // 2u^2+2uv+3v^2 = n  <=>  v = (-2u +- sqrt(12n - 20u^2)) / 6.
  const i64 ubound = static_cast<i64>(isqrt(3 * static_cast<i128>(n) / 5)) + 1;
  bool any = false;
  for (i64 u = -ubound; u <= ubound; ++u) {
    const i128 disc = 12 * static_cast<i128>(n) - 20 * static_cast<i128>(u) * u;
    i128 s;
    if (!is_square(disc, &s)) continue;
    for (i128 num : {-2 * static_cast<i128>(u) - s, -2 * static_cast<i128>(u) + s}) {
      if (num % 6 != 0) continue;
      const i64 v = static_cast<i64>(num / 6);
      any = true;
      if (u % 3 != 0 && v % 3 != 0) return {u, v};
    }
  }
  if (!any) throw Error(ErrorKind::NotRepresentable, std::to_string(n) + " is not 2u^2+2uv+3v^2");
  throw Error(ErrorKind::LemmaViolated, "every representation of " + std::to_string(n) + " has 3 | uv");
}

std::pair<i64, i64> nondivisible_rep_two_squares(i64 n) {
  if (n <= 0 || n % 5 != 0) throw Error(ErrorKind::InvalidInput, "need n > 0 with 5 | n, got " + std::to_string(n));
  bool any = false;
  for (i64 u = 0; static_cast<i128>(u) * u <= n; ++u) {
    i128 v;
    if (!is_square(static_cast<i128>(n) - static_cast<i128>(u) * u, &v)) continue;
    any = true;
    if (u % 5 != 0 && v % 5 != 0) return {u, static_cast<i64>(v)};
  }
  if (!any) throw Error(ErrorKind::NotRepresentable, std::to_string(n) + " is not a sum of two squares");
  throw Error(ErrorKind::LemmaViolated, "every representation of " + std::to_string(n) + " has 5 | uv");
}

RotationResult two_squares_by_rotation(i64 x, i64 y) {
  const i128 n = static_cast<i128>(x) * x + static_cast<i128>(y) * y;
  if (n == 0 || n % 5 != 0) throw Error(ErrorKind::InvalidInput, "need x^2+y^2 > 0 divisible by 5");
  RotationResult out;
  std::set<std::pair<i64, i64>> seen;
  std::pair<i64, i64> cur{x, y};
  while (true) {
    out.path.push_back(cur);
    if (cur.first % 5 != 0 && cur.second % 5 != 0) {
      out.rep = cur;
      return out;
    }
    if (!seen.insert(cur).second) break;
    const auto [a, b] = cur;
    if ((3 * a + 4 * b) % 5 == 0 && (4 * a - 3 * b) % 5 == 0)
      cur = {(3 * a + 4 * b) / 5, (4 * a - 3 * b) / 5};
    else if ((3 * a - 4 * b) % 5 == 0 && (4 * a + 3 * b) % 5 == 0)
      cur = {(3 * a - 4 * b) / 5, (4 * a + 3 * b) / 5};
    else
      break;
  }
  out.fell_back = true;
  out.rep = nondivisible_rep_two_squares(static_cast<i64>(n));
  return out;
}

OrbitEscapeProblem escape_problem_3_4_4(i64 n) {
  const auto& t = catalog_entry("3,4,4,2,0,0:rotation");
  return {t.source, n, &t, Vec3i(0, 1, 1)};
}

OrbitEscapeProblem escape_problem_2_8_15(i64 n) {
  const auto& t = catalog_entry("2,8,15,0,0,-2:rotation");
  return {t.source, n, &t, Vec3i(1, 0, 0)};
}

bool orbit_problem_valid(const OrbitEscapeProblem& p) {
  const ScaledIsometry& t = *p.rotation;
  if (t.scale != 1 || t.source != p.form || t.target != p.form || t.preconditions.size() != 1) return false;
  if (!verify_identity(t)) return false;
  const Vector3<i128> image = t.numerator.cast<i128>() * p.fixed_line.cast<i128>();
  const Vector3<i128> line = p.fixed_line.cast<i128>() * t.denominator;
  return image == line || image == -line;
}

namespace {

bool on_line(const Vec3i& v, const Vec3i& line) {
  const Vector3<i128> a = v.cast<i128>(), b = line.cast<i128>();
  return a.cross(b).isZero();
}

std::vector<Vec3i> checked_sphere(const OrbitEscapeProblem& p) {
  if (!orbit_problem_valid(p)) throw Error(ErrorKind::InvalidInput, "malformed orbit escape problem");
  std::vector<Vec3i> reps = representations(p.form, p.target);
  if (reps.empty()) throw Error(ErrorKind::InvalidInput, std::to_string(p.target) + " is not represented");
  if (std::all_of(reps.begin(), reps.end(), [&](const Vec3i& v) { return on_line(v, p.fixed_line); }))
    throw Error(ErrorKind::InvalidInput, std::to_string(p.target) + " is represented only on the fixed line");
  return reps;
}

EscapeResult escape_by_enumeration(const OrbitEscapeProblem& p, const std::vector<Vec3i>& reps) {
  // Reverse lexicographic scan.
  for (auto it = reps.rbegin(); it != reps.rend(); ++it)
    if (!p.bad().holds(*it)) return {*it, {}, false};
  throw Error(ErrorKind::NoEscape, "every representation of " + std::to_string(p.target) + " satisfies " +
                                       p.bad().to_string());
}

}  // namespace

EscapeResult orbit_escape(const OrbitEscapeProblem& p, EscapeMode mode) {
  const std::vector<Vec3i> reps = checked_sphere(p);
  if (mode == EscapeMode::Enumerate) return escape_by_enumeration(p, reps);

  auto start = std::find_if(reps.rbegin(), reps.rend(),
                            [&](const Vec3i& v) { return p.bad().holds(v) && !on_line(v, p.fixed_line); });
  if (start == reps.rend()) return escape_by_enumeration(p, reps);

  EscapeResult out;
  std::set<std::array<i64, 3>> seen;
  Vec3i cur = *start;
  while (true) {
    out.path.push_back(cur);
    if (!p.bad().holds(cur)) {
      out.rep = cur;
      return out;
    }
    if (!seen.insert({cur[0], cur[1], cur[2]}).second) break;
    cur = transfer(*p.rotation, cur);
  }
  EscapeResult fb = escape_by_enumeration(p, reps);
  fb.path = std::move(out.path);
  fb.fell_back = true;
  return fb;
}

}  // namespace qf3
