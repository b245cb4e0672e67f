#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qf3/form.hpp"
#include "qf3/rational.hpp"

namespace qf3 {

/// Congruence "modulus | c0 x + c1 y + c2 z".
struct Precondition {
  std::array<i64, 3> coeffs{};
  i64 modulus = 1;

  bool holds(const Vec3i& v) const {
    return mod(static_cast<i128>(coeffs[0]) * v[0] + static_cast<i128>(coeffs[1]) * v[1] +
                   static_cast<i128>(coeffs[2]) * v[2],
               modulus) == 0;
  }
  std::string to_string() const;
};

enum class ExpectedStatus { Verifies, Erratum };

std::string_view to_string(ExpectedStatus s);

/// Substitution identity target(T v) = scale * source(v), with
/// T = numerator / denominator.
struct ScaledIsometry {
  std::string tag;
  TernaryForm source;
  TernaryForm target;
  i64 scale = 1;
  Mat3i numerator = Mat3i::Identity();
  i64 denominator = 1;
  std::vector<Precondition> preconditions;
  /// Unimodular automorphisms of the source that transfer_with_adjustment may
  /// apply (besides the sign changes that preserve the source).
  std::vector<Mat3i> adjustments;
  ExpectedStatus expected = ExpectedStatus::Verifies;
  /// Tag of the erratum entry this one corrects, if any.
  std::string corrects;
  std::string note;

  Rational entry(int i, int j) const { return Rational(numerator(i, j), denominator); }
  bool preconditions_hold(const Vec3i& v) const {
    for (const auto& p : preconditions)
      if (!p.holds(v)) return false;
    return true;
  }
};

struct IdentityCheck {
  bool isometry = false;  // T^t A_target T = scale A_source
  bool integral = false;  // T v integral on every precondition-satisfying residue class
  bool verifies() const { return isometry && integral; }
};

IdentityCheck check_identity(const ScaledIsometry& e);
bool verify_identity(const ScaledIsometry& e);

/// Whether some residue class violating the preconditions has a non-integral
/// image (i.e. the preconditions are not vacuous).
bool preconditions_are_needed(const ScaledIsometry& e);

/// w = T v; target(w) = scale * source(v).
Vec3i transfer(const ScaledIsometry& e, const Vec3i& v);

struct AdjustedTransfer {
  const ScaledIsometry* entry = nullptr;
  Mat3i adjustment = Mat3i::Identity();
  Vec3i adjusted = Vec3i::Zero();  // adjustment * v
  Vec3i image = Vec3i::Zero();     // transfer(*entry, adjusted)
};

/// Finite group of source automorphisms searched by transfer_with_adjustment,
/// identity first, in breadth-first order over the generators.
std::vector<Mat3i> adjustment_group(std::span<const ScaledIsometry* const> entries);

/// First (adjustment, entry) pair in deterministic order whose preconditions
/// hold for the adjusted vector; throws NoAdjustmentWorks otherwise.
AdjustedTransfer transfer_with_adjustment(std::span<const ScaledIsometry* const> entries, const Vec3i& v);

const std::vector<ScaledIsometry>& builtin_catalog();
const ScaledIsometry& catalog_entry(std::string_view tag);

}  // namespace qf3
