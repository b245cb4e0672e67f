#include "qf3/identities.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "qf3/repr.hpp"

namespace qf3 {

std::string Precondition::to_string() const {
  static constexpr const char* names[3] = {"x", "y", "z"};
  std::string expr;
  for (int i = 0; i < 3; ++i) {
    const i64 c = coeffs[i];
    if (c == 0) continue;
    if (expr.empty())
      expr += c < 0 ? "-" : "";
    else
      expr += c < 0 ? "-" : "+";
    const i64 a = c < 0 ? -c : c;
    if (a != 1) expr += std::to_string(a);
    expr += names[i];
  }
  if (expr.empty()) expr = "0";
  return std::to_string(modulus) + " | " + expr;
}

std::string_view to_string(ExpectedStatus s) { return s == ExpectedStatus::Verifies ? "verifies" : "erratum"; }

namespace {

i64 residue_modulus(const ScaledIsometry& e) {
  i64 l = e.denominator;
  for (const auto& p : e.preconditions) l = std::lcm(l, p.modulus);
  return l;
}

bool image_integral(const ScaledIsometry& e, const Vec3i& v) {
  const Vector3<i128> w = e.numerator.cast<i128>() * v.cast<i128>();
  for (int i = 0; i < 3; ++i)
    if (w[i] % e.denominator != 0) return false;
  return true;
}

template <typename Visit>
void for_each_residue(i64 l, Visit&& visit) {
  for (i64 x = 0; x < l; ++x)
    for (i64 y = 0; y < l; ++y)
      for (i64 z = 0; z < l; ++z) visit(Vec3i(x, y, z));
}

}  // namespace

IdentityCheck check_identity(const ScaledIsometry& e) {
  IdentityCheck out;
  const Matrix3<i128> m = e.numerator.cast<i128>();
  const Matrix3<i128> lhs = m.transpose() * e.target.gram().cast<i128>() * m;
  const i128 factor = static_cast<i128>(e.scale) * e.denominator * e.denominator;
  const Matrix3<i128> rhs = factor * e.source.gram().cast<i128>();
  out.isometry = lhs == rhs;
  out.integral = true;
  for_each_residue(residue_modulus(e), [&](const Vec3i& v) {
    if (out.integral && e.preconditions_hold(v) && !image_integral(e, v)) out.integral = false;
  });
  return out;
}

bool verify_identity(const ScaledIsometry& e) { return check_identity(e).verifies(); }

bool preconditions_are_needed(const ScaledIsometry& e) {
  bool needed = false;
  for_each_residue(residue_modulus(e), [&](const Vec3i& v) {
    if (!needed && !e.preconditions_hold(v) && !image_integral(e, v)) needed = true;
  });
  return needed;
}

Vec3i transfer(const ScaledIsometry& e, const Vec3i& v) {
  for (const auto& p : e.preconditions)
    if (!p.holds(v))
      throw Error(ErrorKind::PreconditionFailed, e.tag + ": (" + std::to_string(v[0]) + "," + std::to_string(v[1]) +
                                                     "," + std::to_string(v[2]) + ") violates " + p.to_string());
  const Vector3<i128> w = e.numerator.cast<i128>() * v.cast<i128>();
  Vec3i out;
  for (int i = 0; i < 3; ++i) {
    if (w[i] % e.denominator != 0)
      throw Error(ErrorKind::NonIntegralImage, e.tag + ": image coordinate " + std::to_string(i + 1) +
                                                   " is not integral");
    out[i] = narrow_i64(w[i] / e.denominator);
  }
  if (static_cast<i128>(evaluate(e.target, out)) != static_cast<i128>(e.scale) * evaluate(e.source, v))
    throw Error(ErrorKind::InvalidInput, e.tag + " does not preserve values; it is not a verified identity");
  return out;
}

std::vector<Mat3i> adjustment_group(std::span<const ScaledIsometry* const> entries) {
  if (entries.empty()) return {Mat3i::Identity()};
  const TernaryForm& g = entries.front()->source;
  std::vector<Mat3i> gens;
  for (int mask = 1; mask < 8; ++mask) {
    Mat3i d = Mat3i::Identity();
    for (int i = 0; i < 3; ++i)
      if (mask & (1 << i)) d(i, i) = -1;
    if (is_automorphism(g, d)) gens.push_back(d);
  }
  for (const ScaledIsometry* e : entries) {
    if (e->source != g) throw Error(ErrorKind::InvalidInput, "adjustment set mixes source forms");
    for (const Mat3i& a : e->adjustments) {
      if (!is_automorphism(g, a))
        throw Error(ErrorKind::InvalidInput, e->tag + ": declared adjustment is not an automorphism of the source");
      if (std::find(gens.begin(), gens.end(), a) == gens.end()) gens.push_back(a);
    }
  }
  std::vector<Mat3i> group{Mat3i::Identity()};
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const Mat3i cur = group[frontier.front()];
    frontier.pop_front();
    for (const Mat3i& gen : gens) {
      const Mat3i next = gen * cur;
      if (std::find(group.begin(), group.end(), next) == group.end()) {
        group.push_back(next);
        frontier.push_back(group.size() - 1);
      }
    }
  }
  return group;
}

AdjustedTransfer transfer_with_adjustment(std::span<const ScaledIsometry* const> entries, const Vec3i& v) {
  if (entries.empty()) throw Error(ErrorKind::InvalidInput, "transfer_with_adjustment needs at least one entry");
  for (const Mat3i& u : adjustment_group(entries)) {
    const Vec3i adjusted = u * v;
    for (const ScaledIsometry* e : entries) {
      if (!e->preconditions_hold(adjusted)) continue;
      return {e, u, adjusted, transfer(*e, adjusted)};
    }
  }
  throw Error(ErrorKind::NoAdjustmentWorks, "no adjustment of (" + std::to_string(v[0]) + "," + std::to_string(v[1]) +
                                                "," + std::to_string(v[2]) + ") meets the preconditions of " +
                                                entries.front()->tag);
}

const ScaledIsometry& catalog_entry(std::string_view tag) {
  for (const auto& e : builtin_catalog())
    if (e.tag == tag) return e;
  throw Error(ErrorKind::InvalidInput, "no catalog entry tagged '" + std::string(tag) + "'");
}

}  // namespace qf3
