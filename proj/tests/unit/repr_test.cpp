#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>

#include "oracle.hpp"
#include "qf3/error.hpp"
#include "qf3/repr.hpp"
#include "qf3/theta_cache.hpp"

using namespace qf3;

TEST_CASE("representations match brute force") {
  CHECK(representations(parse_form("1,1,1"), 1).size() == 6);
  const auto r5 = representations(parse_form("1,2,3"), 5);
  CHECK(r5 == std::vector<Vec3i>{{0, -1, -1}, {0, -1, 1}, {0, 1, -1}, {0, 1, 1}});

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<i64> dn(0, 300);
  for (int k = 0; k < 60; ++k) {
    const TernaryForm f = oracle::random_form(rng);
    const i64 n = dn(rng);
    CAPTURE(f.to_string());
    CAPTURE(n);
    const auto got = representations(f, n);
    CHECK(got == oracle::reps(f, n));
    CHECK(count(f, n) == got.size());
    CHECK(is_represented(f, n) == !got.empty());
    // closed under negation, so the count is even past 0
    if (n > 0) CHECK(got.size() % 2 == 0);
    for (const auto& v : got) CHECK(std::binary_search(got.begin(), got.end(), Vec3i(-v), lex_less));
  }
}

TEST_CASE("constrained representations") {
  const TernaryForm f = parse_form("1,2,3");
  const auto even2 = representations(f, 11, CoordinateConstraint::divisible(2, 2));
  CHECK(std::find(even2.begin(), even2.end(), Vec3i(0, 2, 1)) != even2.end());
  for (const auto& v : even2) CHECK(v[1] % 2 == 0);
  CHECK(!is_represented(f, 1, CoordinateConstraint::divisible(1, 2)));
  CHECK(is_represented(f, 11, CoordinateConstraint::divisible(3, 2)));
  CHECK(!is_represented(parse_form("1,1,1"), 7));

  auto c = CoordinateConstraint::parse("1:3:1,2");
  c.add(CoordinateConstraint::parse("3:2:0"));
  CHECK(c.to_string() == "1:3:1,2;3:2:0");
  CHECK(c.admits(Vec3i(4, 7, 2)));
  CHECK(!c.admits(Vec3i(3, 7, 2)));
  CHECK(!c.admits(Vec3i(4, 7, 1)));
  CHECK_THROWS_AS(CoordinateConstraint::parse("4:2:0"), Error);
  CHECK_THROWS_AS(CoordinateConstraint::parse("1:2"), Error);
}

TEST_CASE("theta series") {
  CHECK(theta(parse_form("1,1,1"), 3).counts == std::vector<u64>{1, 6, 12, 8});
  CHECK(theta(parse_form("1,2,3"), 0).counts == std::vector<u64>{1});
  CHECK(count(parse_form("1,1,1"), 25) == 30);
  CHECK(count(parse_form("1,1,1"), 98) == 108);

  const auto t = theta(parse_form("2,3,10"), 13).counts;
  CHECK(t[5] == 4);
  CHECK(t[13] == 4);
  CHECK(t == oracle::theta(parse_form("2,3,10"), 13));

  std::mt19937_64 rng(2);
  for (int k = 0; k < 30; ++k) {
    const TernaryForm f = oracle::random_form(rng);
    CAPTURE(f.to_string());
    const auto ref = oracle::theta(f, 400);
    CHECK(theta(f, 400).counts == ref);
    CHECK(theta(f, 400, {3, {}}).counts == ref);
  }
}

TEST_CASE("constrained theta against filtered brute force") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const TernaryForm f = oracle::random_form(rng, 8, 3);
    const auto c = CoordinateConstraint::parse(std::to_string(1 + k % 3) + ":" + std::to_string(2 + k % 4) + ":0,1");
    CAPTURE(f.to_string());
    CAPTURE(c.to_string());
    std::vector<u64> ref(201, 0);
    for (i64 n = 0; n <= 200; ++n)
      for (const auto& v : oracle::reps(f, n)) ref[n] += c.admits(v);
    CHECK(theta(f, 200, {1, c}).counts == ref);
    CHECK(theta(f, 200, {4, c}).counts == ref);
  }
}

TEST_CASE("exceptional sets") {
  CHECK(exceptional_set(parse_form("1,1,1"), 32) == std::vector<i64>{7, 15, 23, 28, 31});
  CHECK(exceptional_set(parse_form("1,1,1"), 6).empty());
  for (i64 v : exceptional_set(parse_form("1,1,2"), 20)) CHECK(v % 2 == 0);
}

TEST_CASE("theta bound guard") {
  CHECK_THROWS_AS(theta(parse_form("1,1,1"), i64{1} << 40), Error);
  CHECK_THROWS_AS(theta(parse_form("1,1,1"), -1), Error);
}

TEST_CASE("theta cache round trip and layout") {
  const TernaryForm f = parse_form("3,5,5,2,-2,2");
  const ThetaSeries th = theta(f, 50);
  const auto bytes = encode_theta(th);
  REQUIRE(bytes.size() == 8 + 1 + 6 * 8 + 8 + 51 * 8);
  CHECK(std::string(bytes.begin(), bytes.begin() + 8) == "QF3THETA");
  CHECK(bytes[8] == 1);
  CHECK(bytes[9] == 3);               // a, little-endian
  CHECK(bytes[9 + 3 * 8] == 2);       // r
  CHECK(bytes[9 + 4 * 8] == 0xfe);    // s = -2
  CHECK(bytes[9 + 6 * 8] == 50);      // N
  CHECK(bytes[9 + 7 * 8] == 1);       // r(0)

  const ThetaSeries back = decode_theta(bytes);
  CHECK(back.form == f);
  CHECK(back.bound == 50);
  CHECK(back.counts == th.counts);

  auto bad = bytes;
  bad[0] = 'X';
  CHECK_THROWS_AS(decode_theta(bad), Error);
  bad = bytes;
  bad.pop_back();
  CHECK_THROWS_AS(decode_theta(bad), Error);

  const auto dir = std::filesystem::temp_directory_path() / "qf3_unit_cache";
  std::filesystem::remove_all(dir);
  bool loaded = true;
  const auto first = cached_theta(f, 50, dir, 1, &loaded);
  CHECK(!loaded);
  const auto second = cached_theta(f, 50, dir, 1, &loaded);
  CHECK(loaded);
  CHECK(first.counts == second.counts);
  CHECK(std::filesystem::exists(theta_cache_path(dir, f, 50)));
  CHECK(!read_theta_cache(theta_cache_path(dir, f, 50), f, 49));
  CHECK(!read_theta_cache(theta_cache_path(dir, f, 50), parse_form("1,1,1"), 50));
  std::filesystem::remove_all(dir);
}
