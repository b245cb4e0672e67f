#include "qf3/universality.hpp"

#include <atomic>
#include <optional>
#include <thread>

namespace qf3 {

namespace {

std::string case_id(const TernaryForm& f, const ProgressionSpec& s, const std::string& suffix) {
  std::string id = f.to_string() + "@(" + std::to_string(s.d) + "," + std::to_string(s.r) + ")";
  if (s.n0 == 1) id += "n>=1";
  return id + suffix;
}

struct CaseBuilder {
  std::vector<TheoremCase> out;

  void add(ClaimKind kind, const char* form, i64 d, i64 r, ProofRoute route = {}, i64 n0 = 0,
           CoordinateConstraint constraint = {}, const std::string& suffix = {}) {
    ProgressionSpec spec{d, r, n0, std::move(constraint)};
    spec.validate();
    const TernaryForm f = parse_form(form);
    out.push_back({case_id(f, spec, suffix), kind, f, std::move(spec), std::move(route)});
  }
};

ProofRoute genus_route(const char* genus, std::vector<std::string> tags, RouteLemma lemma = RouteLemma::None,
                       std::array<int, 2> coords = {1, 2}, int sign = 1, bool twice_square = false) {
  ProofRoute r;
  r.kind = RouteKind::GenusTransfer;
  r.genus = genus;
  r.identities = std::move(tags);
  r.lemma = lemma;
  r.lemma_coords = coords;
  r.lemma_sign = sign;
  r.twice_square = twice_square;
  return r;
}

ProofRoute source_route(const char* source, std::vector<std::string> tags) {
  ProofRoute r;
  r.kind = RouteKind::SourceTransfer;
  r.source = source;
  r.identities = std::move(tags);
  return r;
}

std::vector<TheoremCase> build_cases() {
  CaseBuilder b;
  using K = ClaimKind;

  b.add(K::Theorem, "2,3,10", 8, 5, genus_route("2,3,10", {"2,3,10<=3,5,5,2,-2,2"}));

  for (i64 delta : {1, 9})
    for (int i = 1; i <= 3; ++i) {
      ProofRoute r;
      r.kind = RouteKind::ParityFlip;
      r.source = "1,2,3";
      r.identities = {"1,2,3:parity-flip"};
      b.add(K::Theorem, "1,2,3", 10, delta, r, 1, CoordinateConstraint::divisible(i, 2),
            "[2|x" + std::to_string(i) + "]");
    }

  b.add(K::Theorem, "1,3,14", 14, 7, source_route("1,2,3", {"1,3,14<=1,2,3"}));
  b.add(K::Theorem, "2,3,7", 14, 7, source_route("1,2,3", {"2,3,7<=1,2,3"}));

  const std::vector<std::string> two_three_five = {"2,3,5<=1,1,6:r+", "2,3,5<=1,1,6:r-", "2,3,5<=1,1,6:s+",
                                                   "2,3,5<=1,1,6:s-"};
  for (int i = 1; i <= 3; ++i)
    b.add(K::Theorem, "2,3,5", 15, 5, source_route("1,1,6", two_three_five), 0,
          CoordinateConstraint::divisible(i, 3), "[3|x" + std::to_string(i) + "]");

  b.add(K::Theorem, "1,1,15", 15, 5, source_route("1,1,3", {"1,1,15<=1,1,3"}));
  b.add(K::Theorem, "1,1,15", 15, 10, source_route("1,1,3", {"1,1,15<=1,1,3"}));
  b.add(K::Theorem, "3,3,5", 15, 5, source_route("1,3,3", {"3,3,5<=1,3,3"}));

  for (i64 r : {5, 10}) {
    b.add(K::Theorem, "1,1,30", 15, r, source_route("1,1,6", {"1,1,30<=1,1,6"}));
    b.add(K::Theorem, "2,3,5", 15, r, source_route("1,1,6", {"2,3,5<=1,1,6:r+"}));
  }
  b.add(K::Theorem, "1,6,15", 15, 10, source_route("2,3,3", {"1,6,15<=2,3,3"}));
  b.add(K::Theorem, "3,3,10", 15, 10, source_route("2,3,3", {"3,3,10<=2,3,3"}));

  for (i64 r : {3, 6, 9, 12}) b.add(K::Theorem, "1,2,15", 15, r, source_route("1,2,5", {"1,2,15<=1,2,5"}));
  for (i64 r : {3, 12}) b.add(K::Theorem, "3,5,10", 15, r, source_route("1,5,10", {"3,5,10<=1,5,10"}));

  for (i64 r : {3, 6, 9, 12})
    b.add(K::Theorem, "1,3,5", 15, r,
          genus_route("1,3,5", {"1,3,5<=1,2,8,-2,0,0:minus", "1,3,5<=1,2,8,-2,0,0:plus"}));
  for (i64 r : {6, 9})
    b.add(K::Theorem, "1,5,15", 15, r,
          genus_route("1,5,15", {"1,5,15<=4,4,5,0,0,2:upper", "1,5,15<=4,4,5,0,0,2:lower"}));

  for (i64 r : {1, 7, 13})
    b.add(K::Theorem, "1,3,15", 15, r,
          genus_route("1,3,15", {"1,3,15<=3,4,4,2,0,0:a", "1,3,15<=3,4,4,2,0,0:b"}, RouteLemma::EscapeRotation));
  for (i64 r : {1, 4})
    b.add(K::Theorem, "1,15,30", 15, r,
          genus_route("1,15,30", {"1,15,30<=6,9,10,0,0,-6"}, RouteLemma::Binary223, {0, 1}, -1));
  for (i64 r : {4, 11, 14})
    b.add(K::Theorem, "1,10,15", 15, r,
          genus_route("1,10,15", {"1,10,15<=5,5,6:a", "1,10,15<=5,5,6:b"}, RouteLemma::TwoSquares, {0, 1}));

  for (i64 r : {8, 11, 14})
    b.add(K::Theorem, "3,5,6", 15, r,
          genus_route("3,5,6", {"3,5,6<=2,6,9,6,0,0"}, RouteLemma::Binary223, {1, 2}, 1, true));
  b.add(K::Theorem, "3,5,15", 15, 8,
        genus_route("3,5,15", {"3,5,15<=2,8,15,0,0,-2:a", "3,5,15<=2,8,15,0,0,-2:b"}, RouteLemma::EscapeRotation,
                    {1, 2}, 1, true));
  b.add(K::Theorem, "3,5,30", 15, 8,
        genus_route("3,5,30", {"3,5,30<=2,15,15:a", "3,5,30<=2,15,15:b"}, RouteLemma::TwoSquares, {1, 2}, 1, true));

  // Known results the theorems sit next to.
  b.add(K::Background, "1,1,1", 4, 1);
  for (const char* f : {"1,1,2", "1,2,3", "1,2,4"}) b.add(K::Background, f, 2, 1);
  b.add(K::Background, "1,3,24", 6, 1);
  b.add(K::Background, "1,2,64", 8, 1);
  b.add(K::Background, "1,8,64", 8, 1);
  b.add(K::Background, "1,8,24", 8, 1);
  // x^2+3y^2+6z^2 with a parity condition; 4x^2+... misses 1, so n >= 1.
  b.add(K::Background, "4,3,6", 6, 1, {}, 1);
  b.add(K::Background, "1,12,6", 6, 1);

  // Open as far as this library is concerned.
  for (const char* f : {"1,3,7", "1,3,42", "1,3,54"}) b.add(K::Conjecture, f, 6, 1);
  b.add(K::Conjecture, "1,7,14", 7, 1);
  for (i64 r : {1, 2, 3}) b.add(K::Conjecture, "1,2,7", 7, r);

  return std::move(b.out);
}

}  // namespace

const std::vector<TheoremCase>& theorem_cases() {
  static const std::vector<TheoremCase> cases = build_cases();
  return cases;
}

const TheoremCase& theorem_case(const std::string& id) {
  for (const auto& c : theorem_cases())
    if (c.id == id) return c;
  throw Error(ErrorKind::InvalidInput, "no theorem case '" + id + "'");
}

SuiteEntry run_case(const TheoremCase& c, i64 bound, const CheckOptions& options) {
  SuiteEntry e{&c, check_universal(c.form, c.spec, bound, options), {}};
  if (e.report.vacuous)
    e.status = "vacuous";
  else if (c.kind == ClaimKind::Conjecture)
    e.status = e.report.verified ? "conjecture-consistent" : "conjecture-refuted";
  else
    e.status = e.report.verified ? "verified" : "counterexample";
  return e;
}

std::vector<SuiteEntry> theorem_suite(i64 bound, const SuiteOptions& options) {
  const auto& cases = theorem_cases();
  ThetaMemo memo(options.cache_dir);
  std::vector<std::optional<SuiteEntry>> slots(cases.size());
  const unsigned workers = std::max(1u, options.workers);
  // Cases are independent; each worker runs whole cases with single-threaded
  // sweeps. Results land in case order.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) slots[i] = run_case(cases[i], bound, {1, &memo});
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::vector<SuiteEntry> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace qf3
