#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "qf3/genus.hpp"
#include "qf3/io.hpp"
#include "qf3/theta_cache.hpp"

using namespace qf3;

namespace {

struct Args {
  std::string form;
  i64 n = 0;
  i64 N = 0;
  i64 d = 1;
  i64 r = 0;
  i64 n0 = 0;
  std::vector<std::string> constraints;
  unsigned workers = 1;
  std::string format = "json";
  std::string cache;
  std::string exclude;
  // subcommand specific
  i64 p = 0;
  i64 x = 0, y = 0;
  i64 max_coeff = 10;
  std::string lemma = "mod5";
  std::string mode = "enumerate";
  std::string genus_file;
  std::string case_id;
  bool list = false;
};

CoordinateConstraint constraint_of(const Args& a) {
  CoordinateConstraint c;
  for (const auto& text : a.constraints) c.add(CoordinateConstraint::parse(text));
  return c;
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

int report_exit(bool ok) { return ok ? 0 : 1; }

int cmd_theta(const Args& a) {
  const TernaryForm f = parse_form(a.form);
  const ThetaSeries th = cached_theta(f, a.N, a.cache, a.workers);
  if (a.format == "csv") {
    std::cout << "n,count\n";
    for (std::size_t i = 0; i < th.counts.size(); ++i) std::cout << i << "," << th.counts[i] << "\n";
  } else {
    emit({{"form", f.to_string()}, {"N", a.N}, {"counts", th.counts}});
  }
  return 0;
}

int cmd_represent(const Args& a) {
  const TernaryForm f = parse_form(a.form);
  const auto reps = representations(f, a.n, constraint_of(a));
  if (a.format == "csv") {
    std::cout << "x,y,z\n";
    for (const auto& v : reps) std::cout << v[0] << "," << v[1] << "," << v[2] << "\n";
  } else {
    Json list = Json::array();
    for (const auto& v : reps) list.push_back(to_json(v));
    emit({{"form", f.to_string()}, {"n", a.n}, {"constraint", constraint_of(a).to_string()}, {"reps", list}});
  }
  return 0;
}

int cmd_count(const Args& a) {
  const TernaryForm f = parse_form(a.form);
  const u64 c = count(f, a.n);
  if (a.format == "csv")
    std::cout << "n,count\n" << a.n << "," << c << "\n";
  else
    emit({{"form", f.to_string()}, {"n", a.n}, {"count", c}});
  return 0;
}

int cmd_exceptional(const Args& a) {
  const TernaryForm f = parse_form(a.form);
  const auto ex = exceptional_set(f, a.N, a.workers);
  if (a.format == "csv") {
    std::cout << "n\n";
    for (i64 v : ex) std::cout << v << "\n";
  } else {
    emit({{"form", f.to_string()}, {"N", a.N}, {"exceptional", ex}});
  }
  return 0;
}

int cmd_aut(const Args& a) {
  const TernaryForm f = parse_form(a.form);
  const auto auts = automorphisms(f);
  Json list = Json::array();
  for (const auto& m : auts) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) rows.push_back({m(i, 0), m(i, 1), m(i, 2)});
    list.push_back(rows);
  }
  if (a.format == "csv")
    std::cout << "form,order\n\"" << f.to_string() << "\"," << auts.size() << "\n";
  else
    emit({{"form", f.to_string()}, {"order", auts.size()}, {"automorphisms", list}});
  return 0;
}

int cmd_genus_ratio(const Args& a) {
  std::vector<GenusClassList> pool;
  if (!a.genus_file.empty()) pool = load_genus_catalog(a.genus_file);
  const GenusClassList* g = nullptr;
  for (const auto& c : pool)
    if (c.label() == a.form) g = &c;
  std::optional<GenusClassList> single;
  if (!g) {
    bool builtin = false;
    for (const auto& c : builtin_genera()) builtin |= c.label() == a.form;
    if (builtin) {
      g = &builtin_genus(a.form);
    } else {
      // A form outside the catalog is taken as a one-class genus.
      single.emplace(a.form, "single class", std::vector<TernaryForm>{parse_form(a.form)});
      g = &*single;
    }
  }
  const SiegelRatio s = siegel_ratio_check(*g, a.n, a.p);
  const WeightedDisplay w = weighted_display(*g, a.n, a.p);
  if (a.format == "csv") {
    std::cout << "genus,m,p,computed,predicted,match\n\"" << g->label() << "\"," << a.n << "," << a.p << ","
              << s.computed.to_string() << "," << s.predicted << "," << (s.match ? "true" : "false") << "\n";
  } else {
    emit({{"genus", g->label()},
          {"m", a.n},
          {"p", a.p},
          {"computed", s.computed.to_string()},
          {"predicted", s.predicted},
          {"match", s.match},
          {"weights", w.weights},
          {"weighted_lhs", to_string(w.lhs)},
          {"weighted_rhs", to_string(w.rhs)}});
  }
  return report_exit(s.match);
}

int cmd_verify_identities(const Args& a) {
  bool all = true;
  Json rows = Json::array();
  if (a.format == "csv") std::cout << "tag,status,expected,match\n";
  for (const auto& e : builtin_catalog()) {
    const bool ok = verify_identity(e);
    const ExpectedStatus got = ok ? ExpectedStatus::Verifies : ExpectedStatus::Erratum;
    const bool match = got == e.expected;
    all &= match;
    if (a.format == "csv")
      std::cout << "\"" << e.tag << "\"," << to_string(got) << "," << to_string(e.expected) << ","
                << (match ? "true" : "false") << "\n";
    else
      rows.push_back({{"tag", e.tag},
                      {"status", std::string(to_string(got))},
                      {"expected", std::string(to_string(e.expected))},
                      {"match", match}});
  }
  if (a.format != "csv") emit({{"entries", rows}, {"all_match", all}});
  return report_exit(all);
}

int cmd_catalog(const Args&) {
  std::cout << catalog_json().dump(2) << "\n";
  return 0;
}

int cmd_descent(const Args& a) {
  if (a.lemma == "mod5") {
    emit({{"lemma", a.lemma}, {"result", to_json(descent_2_3_mod5(a.x, a.y))}});
  } else if (a.lemma == "223") {
    auto [u, v] = nondivisible_rep_2_2_3(a.n);
    emit({{"lemma", a.lemma}, {"n", a.n}, {"u", u}, {"v", v}});
  } else if (a.lemma == "squares") {
    auto [u, v] = nondivisible_rep_two_squares(a.n);
    emit({{"lemma", a.lemma}, {"n", a.n}, {"u", u}, {"v", v}});
  } else {
    const RotationResult rr = two_squares_by_rotation(a.x, a.y);
    Json path = Json::array();
    for (auto [u, v] : rr.path) path.push_back({u, v});
    emit({{"lemma", a.lemma}, {"rep", {rr.rep.first, rr.rep.second}}, {"path", path}, {"fell_back", rr.fell_back}});
  }
  return 0;
}

int cmd_orbit_escape(const Args& a) {
  const TernaryForm f = parse_form(a.form);
  if (f != parse_form("3,4,4,2,0,0") && f != parse_form("2,8,15,0,0,-2"))
    throw Error(ErrorKind::InvalidInput, "orbit escape is available for 3,4,4,2,0,0 and 2,8,15,0,0,-2");
  const OrbitEscapeProblem p = f == parse_form("3,4,4,2,0,0") ? escape_problem_3_4_4(a.n) : escape_problem_2_8_15(a.n);
  const EscapeResult r = orbit_escape(p, a.mode == "certificate" ? EscapeMode::Certificate : EscapeMode::Enumerate);
  emit({{"form", f.to_string()}, {"n", a.n}, {"mode", a.mode}, {"result", to_json(r)}});
  return 0;
}

int cmd_check(const Args& a) {
  const TernaryForm f = parse_form(a.form);
  const ProgressionSpec spec{a.d, a.r, a.n0, constraint_of(a)};
  ThetaMemo memo(a.cache);
  const UniversalityReport rep = check_universal(f, spec, a.N, {a.workers, &memo});
  if (a.format == "csv")
    std::cout << csv_header_report() << "\n" << csv_row(rep) << "\n";
  else
    emit(to_json(rep));
  return report_exit(rep.verified);
}

int cmd_suite(const Args& a) {
  const auto start = std::chrono::steady_clock::now();
  const auto entries = theorem_suite(a.N, {a.workers, a.cache});
  bool ok = true;
  for (const auto& e : entries) ok &= e.report.verified;
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (a.format == "csv") {
    std::cout << csv_header_report() << "\n";
    for (const auto& e : entries) std::cout << csv_row(e.report, e.theorem_case->id, e.status) << "\n";
  } else {
    Json cases = Json::array();
    for (const auto& e : entries) cases.push_back(to_json(e));
    emit({{"N", a.N}, {"all_verified", ok}, {"cases", cases}, {"elapsed_ms", ms}});
  }
  return report_exit(ok);
}

int cmd_pipeline(const Args& a) {
  if (a.list) {
    for (const auto& c : theorem_cases())
      if (c.route.kind != RouteKind::None) std::cout << c.id << "\n";
    return 0;
  }
  const TheoremCase& c = theorem_case(a.case_id);
  // One element with --n, otherwise every element up to --N as JSON lines.
  std::vector<i64> ns;
  if (a.N > 0) {
    for (i64 n = c.spec.n0; c.spec.d * n + c.spec.r <= a.N; ++n) ns.push_back(n);
  } else {
    ns.push_back(a.n);
  }
  for (i64 n : ns) {
    Json j = to_json(proof_pipeline(c, n));
    j["case"] = c.id;
    emit(j);
  }
  return 0;
}

int cmd_scan(const Args& a) {
  ScanOptions opts{a.workers, a.cache, {}};
  if (!a.exclude.empty()) {
    std::ifstream in(a.exclude);
    if (!in) throw Error(ErrorKind::IoError, "cannot read " + a.exclude);
    for (std::string line; std::getline(in, line);) {
      if (line.empty() || line[0] == '#') continue;
      opts.exclude.push_back(parse_form(line));
    }
  }
  const auto found = scan_candidates(a.d, a.r, a.max_coeff, a.N, opts);
  if (a.format == "csv") {
    std::cout << "form\n";
    for (const auto& f : found) std::cout << "\"" << f.to_string() << "\"\n";
  } else {
    Json list = Json::array();
    for (const auto& f : found) list.push_back(f.to_string());
    emit({{"d", a.d}, {"r", a.r}, {"max_coeff", a.max_coeff}, {"N", a.N}, {"candidates", list}});
  }
  return 0;
}

bool usage_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput:
    case ErrorKind::ParseError:
    case ErrorKind::NotPositiveDefinite:
    case ErrorKind::BadPrime:
    case ErrorKind::PreconditionViolated:
    case ErrorKind::IoError:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ternary quadratic forms: representation counts, identities and progression checks"};
  app.require_subcommand(1);
  Args a;
  if (const char* env = std::getenv("QF3_CACHE")) a.cache = env;
  if (a.cache.empty()) a.cache = "./qf3cache";

  auto form = [&](CLI::App* s) { s->add_option("--form", a.form, "form literal a,b,c[,r,s,t]")->required(); };
  auto fmt = [&](CLI::App* s) {
    s->add_option("--format", a.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto workers = [&](CLI::App* s) { s->add_option("--workers", a.workers)->check(CLI::Range(1u, 1024u)); };
  auto cache = [&](CLI::App* s) { s->add_option("--cache", a.cache, "theta cache directory"); };
  std::map<CLI::App*, i64> default_bound;
  auto bound = [&](CLI::App* s, i64 def) {
    default_bound[s] = def;
    s->add_option("--N", a.N, "bound (default " + std::to_string(def) + ")")->check(CLI::Range(i64{0}, i64{1} << 40));
  };

  std::map<CLI::App*, int (*)(const Args&)> handlers;
  auto sub = [&](const char* name, const char* desc, int (*fn)(const Args&)) {
    CLI::App* s = app.add_subcommand(name, desc);
    handlers[s] = fn;
    return s;
  };

  auto* theta_cmd = sub("theta", "representation counts r(n) for n <= N", cmd_theta);
  form(theta_cmd), bound(theta_cmd, 1000), workers(theta_cmd), cache(theta_cmd), fmt(theta_cmd);

  auto* rep_cmd = sub("represent", "all representations of n", cmd_represent);
  form(rep_cmd), fmt(rep_cmd);
  rep_cmd->add_option("--n", a.n)->required()->check(CLI::NonNegativeNumber);
  rep_cmd->add_option("--constraint", a.constraints, "i:m:r1,r2 (repeatable)");

  auto* count_cmd = sub("count", "r(n)", cmd_count);
  form(count_cmd), fmt(count_cmd);
  count_cmd->add_option("--n", a.n)->required()->check(CLI::NonNegativeNumber);

  auto* ex_cmd = sub("exceptional", "integers <= N not represented", cmd_exceptional);
  form(ex_cmd), bound(ex_cmd, 1000), workers(ex_cmd), fmt(ex_cmd);

  auto* aut_cmd = sub("aut", "automorphism group", cmd_aut);
  form(aut_cmd), fmt(aut_cmd);

  auto* gr_cmd = sub("genus-ratio", "genus count ratio at m p^2 against m", cmd_genus_ratio);
  gr_cmd->add_option("--form", a.form, "built-in genus label, or a one-class form")->required();
  gr_cmd->add_option("--n", a.n, "m")->required()->check(CLI::PositiveNumber);
  gr_cmd->add_option("--p", a.p, "odd prime")->required();
  gr_cmd->add_option("--genus-file", a.genus_file, "JSON genus catalog");
  fmt(gr_cmd);

  auto* vi_cmd = sub("verify-identities", "check every catalog identity against its expected status",
                     cmd_verify_identities);
  fmt(vi_cmd);
  sub("catalog", "export the identity catalog as JSON", cmd_catalog);

  auto* de_cmd = sub("descent", "non-divisibility constructions", cmd_descent);
  de_cmd->add_option("--lemma", a.lemma, "mod5 | 223 | squares | rotation")
      ->check(CLI::IsMember({"mod5", "223", "squares", "rotation"}));
  de_cmd->add_option("--n", a.n);
  de_cmd->add_option("--x", a.x);
  de_cmd->add_option("--y", a.y);

  auto* oe_cmd = sub("orbit-escape", "representation avoiding the bad congruence", cmd_orbit_escape);
  form(oe_cmd);
  oe_cmd->add_option("--n", a.n)->required()->check(CLI::PositiveNumber);
  oe_cmd->add_option("--mode", a.mode)->check(CLI::IsMember({"enumerate", "certificate"}));

  auto* ck_cmd = sub("check", "bounded check that f represents every d n + r", cmd_check);
  form(ck_cmd), bound(ck_cmd, 100000), workers(ck_cmd), cache(ck_cmd), fmt(ck_cmd);
  ck_cmd->add_option("--d", a.d)->required();
  ck_cmd->add_option("--r", a.r)->required();
  ck_cmd->add_option("--n0", a.n0);
  ck_cmd->add_option("--constraint", a.constraints, "i:m:r1,r2 (repeatable)");

  auto* su_cmd = sub("suite", "every theorem, background and conjecture case", cmd_suite);
  bound(su_cmd, 100000), workers(su_cmd), cache(su_cmd), fmt(su_cmd);

  auto* pl_cmd = sub("pipeline", "constructive representation along a case's proof route", cmd_pipeline);
  pl_cmd->add_option("--case", a.case_id, "case id (see --list)");
  pl_cmd->add_option("--n", a.n)->check(CLI::NonNegativeNumber);
  pl_cmd->add_option("--N", a.N, "run every element up to N");
  pl_cmd->add_flag("--list", a.list);

  auto* sc_cmd = sub("scan", "diagonal forms representing a progression up to N", cmd_scan);
  bound(sc_cmd, 10000), workers(sc_cmd), cache(sc_cmd), fmt(sc_cmd);
  sc_cmd->add_option("--d", a.d)->required();
  sc_cmd->add_option("--r", a.r)->required();
  sc_cmd->add_option("--max-coeff", a.max_coeff)->check(CLI::Range(i64{1}, i64{200}));
  sc_cmd->add_option("--exclude", a.exclude, "file of form literals to skip");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (auto& [s, fn] : handlers) {
      if (!s->parsed()) continue;
      if (auto it = default_bound.find(s); it != default_bound.end() && s->get_option("--N")->count() == 0)
        a.N = it->second;
      return fn(a);
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return usage_error(e.kind()) ? 2 : 1;
  }
  return 2;
}
