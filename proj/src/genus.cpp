#include "qf3/genus.hpp"

#include <fstream>
#include <functional>

#include <json.hpp>

#include "qf3/repr.hpp"

namespace qf3 {

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

i64 pow_mod(i64 base, i64 exp, i64 m) {
  i128 result = 1, b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<i64>(result);
}

void require_prime(i64 p) {
  if (!is_prime(p)) throw Error(ErrorKind::BadPrime, std::to_string(p) + " is not prime");
}

}  // namespace

int legendre(i64 a, i64 p) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorKind::BadPrime, std::to_string(p) + " is not an odd prime");
  const i64 r = pow_mod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

namespace {

// Primitive solutions only (some coordinate a p-adic unit). For those,
// adj(A) A v = det(A) v bounds ord((Av)_i) by ord(2d), so Hensel fires by
// depth 2 ord(2d) + 1 and the search stays shallow.
bool primitive_local(const TernaryForm& f, i64 n, i64 p) {
  const int e = ord_p(n, p) + 2 * ord_p(2 * static_cast<i128>(discriminant(f)), p) + 3;
  std::vector<i128> pk(static_cast<std::size_t>(e) + 1, 1);
  for (int k = 1; k <= e; ++k) pk[k] = checked_mul(pk[k - 1], p);
  if (pk[e] > (i128{1} << 40)) throw Error(ErrorKind::Overflow, "lifting modulus too large");

  const Mat3i g = f.gram();
  auto value = [&](const Vector3<i128>& v) {
    return f.a() * v[0] * v[0] + f.b() * v[1] * v[1] + f.c() * v[2] * v[2] + f.r() * v[1] * v[2] +
           f.s() * v[2] * v[0] + f.t() * v[0] * v[1];
  };
  // Multivariate Hensel: a vector v with ord(f(v) - n) > 2 ord(df/dx_i) lifts
  // to a p-adic solution by moving x_i alone.
  auto lifts = [&](const Vector3<i128>& v) {
    const i128 diff = value(v) - n;
    if (diff == 0) return true;
    const int od = ord_p(diff, p);
    for (int i = 0; i < 3; ++i) {
      const i128 grad = g(i, 0) * v[0] + g(i, 1) * v[1] + g(i, 2) * v[2];
      if (grad != 0 && od > 2 * ord_p(grad, p)) return true;
    }
    return false;
  };
  // Depth-first over residues: children of v mod p^k are v + p^k d.
  std::function<bool(const Vector3<i128>&, int)> search = [&](const Vector3<i128>& v, int k) {
    if (k == e || lifts(v)) return true;
    for (i64 d0 = 0; d0 < p; ++d0)
      for (i64 d1 = 0; d1 < p; ++d1)
        for (i64 d2 = 0; d2 < p; ++d2) {
          if (k == 0 && d0 == 0 && d1 == 0 && d2 == 0) continue;
          const Vector3<i128> w(v[0] + pk[k] * d0, v[1] + pk[k] * d1, v[2] + pk[k] * d2);
          const i128 diff = value(w) - n;
          if (diff % pk[k + 1] != 0) continue;
          if (search(w, k + 1)) return true;
        }
    return false;
  };
  return search(Vector3<i128>::Zero(), 0);
}

}  // namespace

bool locally_represented(const TernaryForm& f, i64 n, i64 p) {
  require_prime(p);
  if (n < 1) throw Error(ErrorKind::InvalidInput, "locally_represented: n must be positive");
  // v = p w needs p^2 | n and then represents n / p^2.
  for (;;) {
    if (primitive_local(f, n, p)) return true;
    if (n % (p * p) != 0) return false;
    n /= p * p;
  }
}

GenusClassList::GenusClassList(std::string label, std::string source, const std::vector<TernaryForm>& forms)
    : label_(std::move(label)), source_(std::move(source)) {
  if (forms.empty()) throw Error(ErrorKind::InvalidInput, "genus '" + label_ + "' has no classes");
  discriminant_ = qf3::discriminant(forms.front());
  for (const TernaryForm& f : forms) {
    if (qf3::discriminant(f) != discriminant_)
      throw Error(ErrorKind::InvalidInput, "genus '" + label_ + "': " + f.to_string() + " has discriminant " +
                                               std::to_string(qf3::discriminant(f)) + ", expected " +
                                               std::to_string(discriminant_));
    members_.push_back({f, static_cast<i64>(automorphisms(f).size())});
  }
}

bool represented_by_genus(const GenusClassList& classes, i64 n) {
  if (n == 0) return true;
  for (const auto& m : classes.members())
    if (is_represented(m.form, n)) return true;
  return false;
}

Rational genus_count(const GenusClassList& classes, i64 n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "genus_count: n must be nonnegative");
  Rational total;
  for (const auto& m : classes.members()) total += Rational(static_cast<i128>(count(m.form, n)), m.aut_order);
  return total;
}

namespace {

void check_siegel_inputs(const GenusClassList& classes, i64 m, i64 p) {
  require_prime(p);
  if (m < 1) throw Error(ErrorKind::InvalidInput, "m must be positive");
  if ((2 * static_cast<i128>(m) * classes.discriminant()) % p == 0)
    throw Error(ErrorKind::PreconditionViolated, "p = " + std::to_string(p) + " divides 2 m d(f)");
}

i64 predicted_ratio(const GenusClassList& classes, i64 m, i64 p) {
  const i64 md = mod(-static_cast<i128>(m) * classes.discriminant(), p);
  return p + 1 - legendre(md, p);
}

}  // namespace

SiegelRatio siegel_ratio_check(const GenusClassList& classes, i64 m, i64 p) {
  check_siegel_inputs(classes, m, p);
  const Rational base = genus_count(classes, m);
  if (base.num() == 0)
    throw Error(ErrorKind::NotRepresented, std::to_string(m) + " is not represented by genus " + classes.label());
  SiegelRatio out;
  out.computed = genus_count(classes, narrow_i64(checked_mul(m, checked_mul(p, p)))) / base;
  out.predicted = predicted_ratio(classes, m, p);
  out.match = out.computed == Rational(out.predicted);
  return out;
}

WeightedDisplay weighted_display(const GenusClassList& classes, i64 m, i64 p) {
  check_siegel_inputs(classes, m, p);
  i64 l = 1;
  for (const auto& mem : classes.members()) l = std::lcm(l, mem.aut_order);
  WeightedDisplay out;
  const i64 chi_factor = predicted_ratio(classes, m, p);
  const i64 mp2 = narrow_i64(checked_mul(m, checked_mul(p, p)));
  i128 base = 0;
  for (const auto& mem : classes.members()) {
    const i64 w = l / mem.aut_order;
    out.weights.push_back(w);
    out.lhs += static_cast<i128>(w) * count(mem.form, mp2);
    base += static_cast<i128>(w) * count(mem.form, m);
  }
  out.rhs = base * chi_factor;
  return out;
}

namespace {

std::vector<GenusClassList> make_builtin() {
  struct Row {
    const char* target;
    const char* mate;
    const char* source;
  };
  static const Row rows[] = {
      {"2,3,10", "3,5,5,2,-2,2", "(8,5) transfer genus"},
      {"1,1,30", "2,3,5", "(15,5r) genus"},
      {"1,6,15", "3,3,10", "(15,10) genus"},
      {"1,3,5", "1,2,8,-2,0,0", "(15,3r) genus of x^2+3y^2+5z^2"},
      {"1,5,15", "4,4,5,0,0,2", "(15,3r) genus of x^2+5y^2+15z^2"},
      {"1,3,15", "3,4,4,2,0,0", "(15,r) genus of x^2+3y^2+15z^2, r in {1,7,13}"},
      {"1,15,30", "6,9,10,0,0,-6", "(15,r) genus of x^2+15y^2+30z^2, r in {1,4}"},
      {"1,10,15", "5,5,6", "(15,r) genus of x^2+10y^2+15z^2, r in {4,11,14}"},
      {"3,5,6", "2,6,9,6,0,0", "(15,r) genus of 3x^2+5y^2+6z^2, r in {8,11,14}"},
      {"3,5,15", "2,8,15,0,0,-2", "(15,8) genus of 3x^2+5y^2+15z^2"},
      {"3,5,30", "2,15,15", "(15,8) genus of 3x^2+5y^2+30z^2"},
  };
  std::vector<GenusClassList> out;
  for (const Row& r : rows) out.emplace_back(r.target, r.source, std::vector{parse_form(r.target), parse_form(r.mate)});
  return out;
}

}  // namespace

const std::vector<GenusClassList>& builtin_genera() {
  static const std::vector<GenusClassList> genera = make_builtin();
  return genera;
}

const GenusClassList& builtin_genus(const std::string& label) {
  for (const auto& g : builtin_genera())
    if (g.label() == label) return g;
  throw Error(ErrorKind::InvalidInput, "no built-in genus labelled '" + label + "'");
}

std::vector<GenusClassList> load_genus_catalog(const std::filesystem::path& file) {
  std::ifstream is(file);
  if (!is) throw Error(ErrorKind::IoError, "cannot open " + file.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, file.string() + ": " + e.what());
  }
  auto one = [&](const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("label") || !j.contains("classes"))
      throw Error(ErrorKind::ParseError, "genus entry needs 'label' and 'classes'");
    std::vector<TernaryForm> forms;
    for (const auto& c : j.at("classes")) {
      auto v = c.get<std::vector<i64>>();
      if (v.size() != 3 && v.size() != 6) throw Error(ErrorKind::ParseError, "class needs 3 or 6 coefficients");
      v.resize(6, 0);
      forms.push_back(make_form(v[0], v[1], v[2], v[3], v[4], v[5]));
    }
    return GenusClassList(j.at("label").get<std::string>(), file.filename().string(), forms);
  };
  std::vector<GenusClassList> out;
  try {
    if (doc.is_array())
      for (const auto& j : doc) out.push_back(one(j));
    else
      out.push_back(one(doc));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, file.string() + ": " + e.what());
  }
  return out;
}

}  // namespace qf3
