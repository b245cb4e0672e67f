#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "qf3/error.hpp"
#include "qf3/genus.hpp"
#include "qf3/identities.hpp"
#include "qf3/universality.hpp"

using namespace qf3;

TEST_CASE("progression spec validation") {
  CHECK_THROWS_AS((ProgressionSpec{0, 0, 0, {}}.validate()), Error);
  CHECK_THROWS_AS((ProgressionSpec{5, 5, 0, {}}.validate()), Error);
  CHECK_THROWS_AS((ProgressionSpec{5, 1, 2, {}}.validate()), Error);
  CHECK((ProgressionSpec{10, 1, 1, {}}.first()) == 11);
}

TEST_CASE("check_universal examples") {
  auto r = check_universal(parse_form("2,3,10"), {8, 5, 0, {}}, 10000);
  CHECK(r.verified);
  CHECK(r.counterexamples.empty());

  r = check_universal(parse_form("1,1,1"), {8, 7, 0, {}}, 100);
  CHECK(!r.verified);
  CHECK(r.counterexamples.size() == 12);  // every 8l+7 <= 100
  CHECK(r.counterexamples.front() == 7);

  r = check_universal(parse_form("1,2,3"), {10, 1, 1, CoordinateConstraint::divisible(2, 2)}, 1000);
  CHECK(r.verified);

  // the same claim from n = 0 fails at 1 = x^2 with x odd
  r = check_universal(parse_form("1,2,3"), {10, 1, 0, CoordinateConstraint::divisible(1, 2)}, 1000);
  CHECK(r.counterexamples == std::vector<i64>{1});

  r = check_universal(parse_form("2,3,10"), {8, 3, 0, {}}, 1000);
  CHECK(!r.counterexamples.empty());

  r = check_universal(parse_form("2,3,10"), {8, 5, 0, {}}, 4);
  CHECK(r.vacuous);
  CHECK(r.verified);
}

TEST_CASE("check_universal agrees with plain membership") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 20; ++k) {
    const TernaryForm f = oracle::random_form(rng, 8, 3);
    const i64 d = std::uniform_int_distribution<i64>(1, 16)(rng);
    const ProgressionSpec spec{d, std::uniform_int_distribution<i64>(0, d - 1)(rng), 0, {}};
    const auto rep = check_universal(f, spec, 2000);
    std::vector<i64> missing;
    for (i64 v = spec.r; v <= 2000; v += d)
      if (!is_represented(f, v)) missing.push_back(v);
    CHECK(rep.counterexamples == missing);
  }
}

TEST_CASE("worker count does not change results") {
  ThetaMemo memo;
  const TernaryForm f = parse_form("1,3,15");
  const ProgressionSpec spec{15, 7, 0, {}};
  const auto a = check_universal(f, spec, 20000, {1, nullptr});
  const auto b = check_universal(f, spec, 20000, {4, &memo});
  const auto c = check_universal(f, spec, 20000, {3, &memo});
  CHECK(a.counterexamples == b.counterexamples);
  CHECK(b.counterexamples == c.counterexamples);
}

TEST_CASE("theorem cases") {
  const auto& cases = theorem_cases();
  std::set<std::string> ids;
  int theorems = 0;
  for (const auto& c : cases) {
    CHECK(ids.insert(c.id).second);
    theorems += c.kind == ClaimKind::Theorem;
    if (c.kind == ClaimKind::Theorem) CHECK(c.route.kind != RouteKind::None);
    for (const auto& tag : c.route.identities) {
      const auto& e = catalog_entry(tag);
      CHECK(e.target == c.form);
      CHECK(verify_identity(e));
    }
    if (c.route.kind == RouteKind::GenusTransfer) CHECK(builtin_genus(c.route.genus).members().front().form == c.form);
  }
  CHECK(theorems == 46);
  CHECK(theorem_case("2,3,10@(8,5)").form == parse_form("2,3,10"));
  CHECK_THROWS_AS(theorem_case("nope"), Error);
}

TEST_CASE("suite at small scale") {
  const auto entries = theorem_suite(3000, {2, {}});
  REQUIRE(entries.size() == theorem_cases().size());
  for (const auto& e : entries) {
    CAPTURE(e.theorem_case->id);
    CHECK(e.report.verified);
    if (e.theorem_case->kind == ClaimKind::Conjecture)
      CHECK(e.status == "conjecture-consistent");
    else
      CHECK(e.status == "verified");
  }
}

TEST_CASE("proof pipelines produce valid representations") {
  CHECK(proof_pipeline(theorem_case("2,3,10@(8,5)"), 1).rep == Vec3i(0, 1, 1));
  CHECK(proof_pipeline(theorem_case("1,1,15@(15,5)"), 0).rep == Vec3i(1, 2, 0));
  const auto r34 = proof_pipeline(theorem_case("1,10,15@(15,4)"), 2);
  CHECK(r34.value == 34);
  CHECK(r34.witness == "mate");

  for (const auto& c : theorem_cases()) {
    if (c.route.kind == RouteKind::None) {
      CHECK_THROWS_AS(proof_pipeline(c, c.spec.n0), Error);
      continue;
    }
    CAPTURE(c.id);
    for (i64 n = c.spec.n0; c.spec.d * n + c.spec.r <= 1500; ++n) {
      CAPTURE(n);
      const auto res = proof_pipeline(c, n);
      CHECK(res.value == c.spec.d * n + c.spec.r);
      CHECK(evaluate(c.form, res.rep) == res.value);
      CHECK(c.spec.constraint.admits(res.rep));
      CHECK(!res.trace.empty());
    }
  }
  CHECK_THROWS_AS(proof_pipeline(theorem_case("1,2,3@(10,1)n>=1[2|x1]"), 0), Error);
}

TEST_CASE("scanner") {
  const auto found = scan_candidates(8, 5, 10, 2000);
  CHECK(std::find(found.begin(), found.end(), parse_form("2,3,10")) != found.end());
  CHECK(std::is_sorted(found.begin(), found.end()));
  for (const auto& f : found) CHECK(check_universal(f, {8, 5, 0, {}}, 2000).verified);

  // monotone in N
  const auto more = scan_candidates(8, 5, 10, 4000, {3, {}, {}});
  for (const auto& f : more) CHECK(std::find(found.begin(), found.end(), f) != found.end());
  CHECK(more == scan_candidates(8, 5, 10, 4000, {1, {}, {}}));

  // exclusion
  const auto excl = scan_candidates(8, 5, 10, 2000, {1, {}, {parse_form("2,3,10")}});
  CHECK(std::find(excl.begin(), excl.end(), parse_form("2,3,10")) == excl.end());
  CHECK(excl.size() + 1 == found.size());
}
