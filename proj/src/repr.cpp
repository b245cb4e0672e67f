#include "qf3/repr.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <thread>

namespace qf3 {

// ---------------------------------------------------------------------------
// CoordinateConstraint

CoordinateConstraint CoordinateConstraint::divisible(int index, i64 modulus) {
  CoordinateConstraint c;
  c.add(index, modulus, {0});
  return c;
}

CoordinateConstraint& CoordinateConstraint::add(int index, i64 modulus, std::vector<i64> allowed) {
  if (index < 1 || index > 3) throw Error(ErrorKind::InvalidInput, "constraint coordinate index must be 1, 2 or 3");
  if (modulus < 2) throw Error(ErrorKind::InvalidInput, "constraint modulus must be at least 2");
  for (i64& a : allowed) a = mod(a, modulus);
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  if (allowed.empty()) throw Error(ErrorKind::InvalidInput, "constraint residue set is empty");
  clauses_.push_back({index, modulus, std::move(allowed)});
  return *this;
}

CoordinateConstraint& CoordinateConstraint::add(const CoordinateConstraint& other) {
  for (const Clause& c : other.clauses_) clauses_.push_back(c);
  return *this;
}

CoordinateConstraint CoordinateConstraint::parse(std::string_view text) {
  auto number = [&](std::string_view tok) {
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::ParseError, "bad constraint '" + std::string(text) + "'");
    return v;
  };
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos)
    throw Error(ErrorKind::ParseError, "constraint must look like i:m:r1,r2 ('" + std::string(text) + "')");
  const i64 index = number(text.substr(0, c1));
  const i64 modulus = number(text.substr(c1 + 1, c2 - c1 - 1));
  std::vector<i64> allowed;
  std::string_view rest = text.substr(c2 + 1);
  while (true) {
    const auto comma = rest.find(',');
    allowed.push_back(number(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  CoordinateConstraint c;
  c.add(static_cast<int>(index), modulus, std::move(allowed));
  return c;
}

std::string CoordinateConstraint::to_string() const {
  std::string out;
  for (const Clause& c : clauses_) {
    if (!out.empty()) out += ';';
    out += std::to_string(c.index) + ":" + std::to_string(c.modulus) + ":";
    for (std::size_t i = 0; i < c.allowed.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c.allowed[i]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration
//
// Coordinates are renamed (outer, middle, inner) with the outer one carrying
// the largest diagonal coefficient. For fixed outer u and middle w the form is
// ci*z^2 + lin*z + rest; completing squares over the rationals gives exact
// integer ranges for w and z.

namespace {

struct Layout {
  std::array<int, 3> axis{};  // axis[k] = original coordinate of layer k
  i64 co = 0, cm = 0, ci = 0;
  i64 x_om = 0, x_oi = 0, x_mi = 0;
  i128 det = 0;    // det(A)
  i128 alpha = 0;  // 4*ci*cm - x_mi^2, cofactor of the outer diagonal entry

  explicit Layout(const TernaryForm& f) {
    std::array<int, 3> idx{0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return f.diag(i) > f.diag(j); });
    axis = idx;
    co = f.diag(axis[0]);
    cm = f.diag(axis[1]);
    ci = f.diag(axis[2]);
    x_om = f.cross(axis[0], axis[1]);
    x_oi = f.cross(axis[0], axis[2]);
    x_mi = f.cross(axis[1], axis[2]);
    det = det3<i128>(f.gram().cast<i128>());
    alpha = 4 * static_cast<i128>(ci) * cm - static_cast<i128>(x_mi) * x_mi;
  }

  i64 outer_bound(i64 n) const { return static_cast<i64>(isqrt(2 * static_cast<i128>(n) * alpha / det)); }

  /// Over-approximate middle range for outer value u (possibly empty).
  bool middle_range(i64 u, i64 n, i64& lo, i64& hi) const {
    const i128 beta = (4 * static_cast<i128>(ci) * x_om - 2 * static_cast<i128>(x_mi) * x_oi) * u;
    const i128 gamma = (4 * static_cast<i128>(ci) * co - static_cast<i128>(x_oi) * x_oi) * u * u -
                       4 * static_cast<i128>(ci) * n;
    const i128 disc = beta * beta - 4 * alpha * gamma;
    if (disc < 0) return false;
    const i128 s = isqrt(disc) + 1;
    lo = static_cast<i64>(floor_div(-beta - s, 2 * alpha));
    hi = static_cast<i64>(ceil_div(-beta + s, 2 * alpha));
    return true;
  }

  i128 lin(i64 u, i64 w) const { return static_cast<i128>(x_mi) * w + static_cast<i128>(x_oi) * u; }
  i128 rest(i64 u, i64 w) const {
    return static_cast<i128>(co) * u * u + static_cast<i128>(cm) * w * w + static_cast<i128>(x_om) * u * w;
  }

  /// Exact inner range {z : ci z^2 + lin z + rest <= n}; false when empty.
  bool inner_range(i128 l, i128 r, i64 n, i64& lo, i64& hi) const {
    const i128 disc = l * l - 4 * static_cast<i128>(ci) * (r - n);
    if (disc < 0) return false;
    const i128 s = isqrt(disc);
    i128 zl = ceil_div(-l - s, 2 * static_cast<i128>(ci));
    i128 zh = floor_div(-l + s, 2 * static_cast<i128>(ci));
    auto val = [&](i128 z) { return ci * z * z + l * z + r; };
    while (val(zl - 1) <= n) --zl;
    while (val(zh + 1) <= n) ++zh;
    while (zl <= zh && val(zl) > n) ++zl;
    while (zh >= zl && val(zh) > n) --zh;
    if (zl > zh) return false;
    lo = static_cast<i64>(zl);
    hi = static_cast<i64>(zh);
    return true;
  }

  Vec3i to_original(i64 u, i64 w, i64 z) const {
    Vec3i v;
    v[axis[0]] = u;
    v[axis[1]] = w;
    v[axis[2]] = z;
    return v;
  }
};

}  // namespace

bool for_each_representation(const TernaryForm& f, i64 n, const std::function<bool(const Vec3i&)>& visit) {
  if (n < 0) return true;
  if (n == 0) return visit(Vec3i::Zero());
  const Layout L(f);
  const i64 U = L.outer_bound(n);
  const i128 two_ci = 2 * static_cast<i128>(L.ci);
  for (i64 u = -U; u <= U; ++u) {
    i64 wlo, whi;
    if (!L.middle_range(u, n, wlo, whi)) continue;
    for (i64 w = wlo; w <= whi; ++w) {
      const i128 l = L.lin(u, w);
      const i128 disc = l * l - 4 * static_cast<i128>(L.ci) * (L.rest(u, w) - n);
      i128 s;
      if (!is_square(disc, &s)) continue;
      // Both roots, smaller first.
      const i128 num_lo = -l - s, num_hi = -l + s;
      if (num_lo % two_ci == 0 && !visit(L.to_original(u, w, static_cast<i64>(num_lo / two_ci)))) return false;
      if (s != 0 && num_hi % two_ci == 0 && !visit(L.to_original(u, w, static_cast<i64>(num_hi / two_ci))))
        return false;
    }
  }
  return true;
}

std::vector<Representation> representations(const TernaryForm& f, i64 n, const CoordinateConstraint& constraint) {
  std::vector<Representation> out;
  if (n < 0) throw Error(ErrorKind::InvalidInput, "representations: n must be nonnegative");
  for_each_representation(f, n, [&](const Vec3i& v) {
    if (constraint.admits(v)) out.push_back(v);
    return true;
  });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

u64 count(const TernaryForm& f, i64 n) {
  u64 total = 0;
  for_each_representation(f, n, [&](const Vec3i&) {
    ++total;
    return true;
  });
  return total;
}

bool is_represented(const TernaryForm& f, i64 n, const CoordinateConstraint& constraint) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "is_represented: n must be nonnegative");
  return !for_each_representation(f, n, [&](const Vec3i& v) { return !constraint.admits(v); });
}

// ---------------------------------------------------------------------------
// Theta sweep

namespace {

constexpr u64 kThetaMemoryBudget = u64{8} << 30;  // bytes across all workers

/// Adds every lattice vector of norm <= N on the outer layer u into counts.
/// Half-box mode (empty constraint) skips v with its first nonzero layer
/// coordinate negative and weights the rest by 2.
void sweep_layer(const Layout& L, i64 u, i64 N, const CoordinateConstraint& constraint, std::vector<u64>& counts) {
  const bool half = constraint.empty();
  i64 wlo, whi;
  if (!L.middle_range(u, N, wlo, whi)) return;
  if (half && u == 0) wlo = std::max<i64>(wlo, 0);
  const i64 ci = L.ci;
  for (i64 w = wlo; w <= whi; ++w) {
    const i128 l = L.lin(u, w);
    const i128 r = L.rest(u, w);
    i64 zlo, zhi;
    if (!L.inner_range(l, r, N, zlo, zhi)) continue;
    if (half && u == 0 && w == 0) zlo = std::max<i64>(zlo, 1);
    if (zlo > zhi) continue;
    // Values on the row fit in [0, N]; step through them incrementally.
    const i64 li = static_cast<i64>(l);
    i64 val = static_cast<i64>(ci * static_cast<i128>(zlo) * zlo + l * zlo + r);
    i64 step = ci * (2 * zlo + 1) + li;
    if (half) {
      for (i64 z = zlo; z <= zhi; ++z) {
        counts[static_cast<std::size_t>(val)] += 2;
        val += step;
        step += 2 * ci;
      }
    } else {
      Vec3i v = L.to_original(u, w, 0);
      const int zi = L.axis[2];
      for (i64 z = zlo; z <= zhi; ++z) {
        v[zi] = z;
        if (constraint.admits(v)) counts[static_cast<std::size_t>(val)] += 1;
        val += step;
        step += 2 * ci;
      }
    }
  }
}

}  // namespace

ThetaSeries theta(const TernaryForm& f, i64 bound, const ThetaOptions& options) {
  if (bound < 0) throw Error(ErrorKind::InvalidInput, "theta: bound must be nonnegative");
  const unsigned workers = std::max(1u, options.workers);
  const u64 bytes = (static_cast<u64>(bound) + 1) * sizeof(u64) * workers;
  if (static_cast<u64>(bound) > (u64{1} << 40) || bytes > kThetaMemoryBudget)
    throw Error(ErrorKind::Overflow, "theta bound " + std::to_string(bound) + " exceeds the memory budget");

  const Layout L(f);
  const i64 U = L.outer_bound(bound);
  const bool half = options.constraint.empty();
  const i64 ufirst = half ? 0 : -U;

  ThetaSeries out{f, bound, std::vector<u64>(static_cast<std::size_t>(bound) + 1, 0)};
  if (workers == 1) {
    for (i64 u = ufirst; u <= U; ++u) sweep_layer(L, u, bound, options.constraint, out.counts);
  } else {
    std::atomic<i64> next{ufirst};
    std::vector<std::vector<u64>> partial(workers);
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < workers; ++k) {
      pool.emplace_back([&, k] {
        partial[k].assign(out.counts.size(), 0);
        for (i64 u = next++; u <= U; u = next++) sweep_layer(L, u, bound, options.constraint, partial[k]);
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : partial)
      for (std::size_t i = 0; i < p.size(); ++i) out.counts[i] += p[i];
  }
  if (half) out.counts[0] += 1;
  return out;
}

std::vector<i64> exceptional_set(const TernaryForm& f, i64 bound, unsigned workers) {
  const ThetaSeries th = theta(f, bound, {workers, {}});
  std::vector<i64> out;
  for (i64 n = 0; n <= bound; ++n)
    if (th.counts[static_cast<std::size_t>(n)] == 0) out.push_back(n);
  return out;
}

}  // namespace qf3
