#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qf3/form.hpp"

namespace qf3 {

/// An integer triple (x, y, z) with f(x, y, z) equal to the queried value.
using Representation = Vec3i;

/// Conjunction of clauses "x_index mod modulus lies in allowed". The default
/// (no clauses) admits every vector.
class CoordinateConstraint {
 public:
  struct Clause {
    int index;  // 1-based coordinate index
    i64 modulus;
    std::vector<i64> allowed;  // reduced, sorted, nonempty
  };

  CoordinateConstraint() = default;

  /// Shorthand for "m | x_index".
  static CoordinateConstraint divisible(int index, i64 modulus);
  /// Parses "i:m:r1,r2,...".
  static CoordinateConstraint parse(std::string_view text);

  CoordinateConstraint& add(int index, i64 modulus, std::vector<i64> allowed);
  /// Conjunction of two constraints.
  CoordinateConstraint& add(const CoordinateConstraint& other);

  bool empty() const { return clauses_.empty(); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  bool admits(const Vec3i& v) const {
    for (const Clause& c : clauses_)
      if (!allows(c, v[c.index - 1])) return false;
    return true;
  }

  /// Canonical text form, "" when empty; clauses joined with ';'.
  std::string to_string() const;

  bool operator==(const CoordinateConstraint&) const = default;

 private:
  static bool allows(const Clause& c, i64 value) {
    const i64 r = mod(value, c.modulus);
    for (i64 a : c.allowed)
      if (a == r) return true;
    return false;
  }
  std::vector<Clause> clauses_;
};

inline bool operator==(const CoordinateConstraint::Clause& a, const CoordinateConstraint::Clause& b) {
  return a.index == b.index && a.modulus == b.modulus && a.allowed == b.allowed;
}

struct ThetaSeries {
  TernaryForm form;
  i64 bound;
  std::vector<u64> counts;  // counts[n] = r(n, f), 0 <= n <= bound
};

struct ThetaOptions {
  unsigned workers = 1;
  /// When non-empty, counts only vectors admitted by the constraint and the
  /// sweep runs over the full box instead of the half box.
  CoordinateConstraint constraint{};
};

/// All (constrained) representations of n, in lexicographic order.
std::vector<Representation> representations(const TernaryForm& f, i64 n,
                                             const CoordinateConstraint& constraint = {});

/// r(n, f).
u64 count(const TernaryForm& f, i64 n);

/// r(n, f) for every 0 <= n <= bound from a single lattice sweep.
ThetaSeries theta(const TernaryForm& f, i64 bound, const ThetaOptions& options = {});

/// Every 0 <= n <= bound that f does not represent.
std::vector<i64> exceptional_set(const TernaryForm& f, i64 bound, unsigned workers = 1);

bool is_represented(const TernaryForm& f, i64 n, const CoordinateConstraint& constraint = {});

/// Calls visit(v) for each representation of n (unspecified order) until it
/// returns false. Returns false iff stopped early.
bool for_each_representation(const TernaryForm& f, i64 n,
                             const std::function<bool(const Vec3i&)>& visit);

}  // namespace qf3
