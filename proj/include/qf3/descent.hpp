#pragma once

#include <utility>
#include <vector>

#include "qf3/identities.hpp"

namespace qf3 {

// Constructive non-divisibility results for binary pieces of the forms in the
// catalog, and the sphere-finite orbit escape for infinite-order automorphs.

struct DescentStep {
  i64 x = 0, y = 0;
  int k = 0;    // ord_5(gcd(x, y)) at this step
  int eps = 0;  // sign chosen to produce the next step, 0 on the final step
};

struct DescentResult {
  i64 u = 0, v = 0;
  std::vector<DescentStep> trace;
};

/// 5-adic descent for 2x^2+3y^2: strips one power of 5 from gcd(x, y) per step
/// with (x0, y0) -> (x0 + 6 eps y0, 4 x0 - eps y0). Requires 5 | 2x^2+3y^2 and
/// (x, y) != (0, 0); the result has 2u^2+3v^2 = 2x^2+3y^2 and 5 does not
/// divide u v.
DescentResult descent_2_3_mod5(i64 x, i64 y);

/// (u, v) with 2u^2+2uv+3v^2 = n and 3 not dividing u v, first in
/// lexicographic order. Requires n > 0 and 3 | n.
std::pair<i64, i64> nondivisible_rep_2_2_3(i64 n);

/// (u, v) with u^2+v^2 = n, u, v >= 0 and 5 not dividing u v, smallest u
/// first. Requires n > 0 and 5 | n.
std::pair<i64, i64> nondivisible_rep_two_squares(i64 n);

struct RotationResult {
  std::pair<i64, i64> rep;
  std::vector<std::pair<i64, i64>> path;  // starting point first
  bool fell_back = false;
};

/// Walks the rational rotations (3x+-4y)/5, (4x-+3y)/5 from (x, y) until
/// 5 does not divide the product, falling back to the search on a cycle.
RotationResult two_squares_by_rotation(i64 x, i64 y);

struct OrbitEscapeProblem {
  TernaryForm form;
  i64 target = 0;
  /// Infinite-order automorph T of the form; its precondition is the bad
  /// congruence, under which T v stays integral.
  const ScaledIsometry* rotation = nullptr;
  Vec3i fixed_line = Vec3i::Zero();

  const Precondition& bad() const { return rotation->preconditions.front(); }
};

/// 3x^2+4y^2+4z^2+2yz with bad congruence 3 | x+2y-2z.
OrbitEscapeProblem escape_problem_3_4_4(i64 n);
/// 2x^2+8y^2+15z^2-2xy with bad congruence 3 | y+z.
OrbitEscapeProblem escape_problem_2_8_15(i64 n);

/// Checks the structural invariants: T is a verifying value-preserving
/// automorph of the form with a single congruence precondition and
/// T * line = +-line.
bool orbit_problem_valid(const OrbitEscapeProblem& p);

enum class EscapeMode { Enumerate, Certificate };

struct EscapeResult {
  Vec3i rep = Vec3i::Zero();
  std::vector<Vec3i> path;  // certificate mode: the T-orbit walked
  bool fell_back = false;
};

EscapeResult orbit_escape(const OrbitEscapeProblem& p, EscapeMode mode = EscapeMode::Enumerate);

}  // namespace qf3
