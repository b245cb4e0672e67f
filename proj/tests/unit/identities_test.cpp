#include <doctest.h>

#include <optional>
#include <random>
#include <set>

#include "qf3/error.hpp"
#include "qf3/identities.hpp"
#include "qf3/repr.hpp"

using namespace qf3;

namespace {

// Applies the identity by hand: integral image or nothing.
std::optional<Vec3i> naive_image(const ScaledIsometry& e, const Vec3i& v) {
  Vec3i w;
  for (int i = 0; i < 3; ++i) {
    i64 s = 0;
    for (int j = 0; j < 3; ++j) s += e.numerator(i, j) * v[j];
    if (s % e.denominator != 0) return std::nullopt;
    w[i] = s / e.denominator;
  }
  return w;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("catalog statuses match expectations") {
  std::set<std::string> errata, tags;
  for (const auto& e : builtin_catalog()) {
    CAPTURE(e.tag);
    CHECK(tags.insert(e.tag).second);
    const bool ok = verify_identity(e);
    CHECK(ok == (e.expected == ExpectedStatus::Verifies));
    if (!ok) errata.insert(e.tag);
    if (!e.corrects.empty()) {
      CHECK(ok);
      CHECK(catalog_entry(e.corrects).expected == ExpectedStatus::Erratum);
    }
    if (!e.preconditions.empty() && ok) CHECK(preconditions_are_needed(e));
  }
  CHECK(errata == std::set<std::string>{"1,3,14<=1,3,5,2,0,0:erratum", "3,3,10<=2,3,3:erratum",
                                        "1,10,15<=5,5,6:b:erratum"});
}

TEST_CASE("verified identities hold pointwise") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<i64> d(-60, 60);
  for (const auto& e : builtin_catalog()) {
    if (e.expected != ExpectedStatus::Verifies) continue;
    CAPTURE(e.tag);
    int hits = 0;
    for (int k = 0; k < 400 && hits < 60; ++k) {
      const Vec3i v(d(rng), d(rng), d(rng));
      if (!e.preconditions_hold(v)) {
        if (e.denominator == 1) FAIL("integral entry rejected a vector");
        continue;
      }
      ++hits;
      const auto w = naive_image(e, v);
      REQUIRE(w);
      CHECK(*w == transfer(e, v));
      CHECK(evaluate(e.target, *w) == e.scale * evaluate(e.source, v));
    }
    CHECK(hits > 0);
  }
}

TEST_CASE("identity checks") {
  ScaledIsometry id{"id", parse_form("1,2,3"), parse_form("1,2,3")};
  CHECK(verify_identity(id));
  CHECK(check_identity(id).isometry);

  const auto& wrong = catalog_entry("1,3,14<=1,3,5,2,0,0:erratum");
  CHECK(!check_identity(wrong).isometry);
  CHECK(verify_identity(catalog_entry("1,3,14<=1,2,3")));
  CHECK(!verify_identity(catalog_entry("3,3,10<=2,3,3:erratum")));
  CHECK(verify_identity(catalog_entry("3,3,10<=2,3,3")));
}

TEST_CASE("transfer") {
  const auto& e43 = catalog_entry("2,3,10<=3,5,5,2,-2,2");
  CHECK(transfer(e43, Vec3i(2, 0, 1)) == Vec3i(0, 1, 1));
  CHECK(evaluate(e43.target, Vec3i(0, 1, 1)) == 13);
  CHECK(transfer(e43, Vec3i::Zero()) == Vec3i::Zero());
  CHECK(kind_of([&] { transfer(e43, Vec3i(1, 0, 0)); }) == ErrorKind::PreconditionFailed);

  CHECK(transfer(catalog_entry("1,1,15<=1,1,3"), Vec3i(1, 0, 0)) == Vec3i(1, 2, 0));
  CHECK(kind_of([] { transfer(catalog_entry("3,3,10<=2,3,3:erratum"), Vec3i(1, 0, 0)); }) ==
        ErrorKind::InvalidInput);
}

TEST_CASE("transfer with adjustment") {
  std::vector<const ScaledIsometry*> pair{&catalog_entry("1,3,5<=1,2,8,-2,0,0:minus"),
                                          &catalog_entry("1,3,5<=1,2,8,-2,0,0:plus")};
  const auto t = transfer_with_adjustment(pair, Vec3i(1, 1, 1));
  CHECK(evaluate(parse_form("1,3,5"), t.image) == 9);
  CHECK(t.adjusted == t.adjustment * Vec3i(1, 1, 1));

  // already good for the first entry: identical to a plain transfer
  const Vec3i good(3, 0, 0);
  REQUIRE(pair[0]->preconditions_hold(good));
  CHECK(transfer_with_adjustment(pair, good).image == transfer(*pair[0], good));
  CHECK(transfer_with_adjustment(pair, good).adjustment == Mat3i::Identity());

  const auto group = adjustment_group(pair);
  CHECK(group.front() == Mat3i::Identity());
  for (const auto& g : group) CHECK(is_automorphism(pair[0]->source, g));

  // sign changes that do not preserve the source are left out
  std::vector<const ScaledIsometry*> one{&catalog_entry("2,3,10<=3,5,5,2,-2,2")};
  CHECK(adjustment_group(one).size() == 2);
  CHECK(kind_of([&] { transfer_with_adjustment(one, Vec3i(1, 0, 0)); }) == ErrorKind::NoAdjustmentWorks);

  // declared swaps enlarge the group
  std::vector<const ScaledIsometry*> swap{&catalog_entry("1,10,15<=5,5,6:a"), &catalog_entry("1,10,15<=5,5,6:b")};
  CHECK(adjustment_group(swap).size() == 16);

  // every mate representation up to a bound transfers for the adjustment-only genera
  for (const char* tag : {"1,3,5<=1,2,8,-2,0,0", "1,5,15<=4,4,5,0,0,2"}) {
    std::vector<const ScaledIsometry*> es;
    for (const auto& e : builtin_catalog())
      if (e.tag.rfind(tag, 0) == 0) es.push_back(&e);
    REQUIRE(es.size() == 2);
    for (i64 n = 1; n <= 400; ++n) {
      if (n % 15 != 3 && n % 15 != 6 && n % 15 != 9 && n % 15 != 12) continue;
      for (const auto& v : representations(es[0]->source, n)) {
        CAPTURE(v.transpose());
        const auto t2 = transfer_with_adjustment(es, v);
        CHECK(evaluate(es[0]->target, t2.image) == n);
      }
    }
  }
}
