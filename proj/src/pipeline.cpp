#include <algorithm>
#include <optional>
#include <sstream>

#include "qf3/descent.hpp"
#include "qf3/genus.hpp"
#include "qf3/universality.hpp"

namespace qf3 {

namespace {

std::string vec(const Vec3i& v) {
  std::ostringstream os;
  os << "(" << v[0] << "," << v[1] << "," << v[2] << ")";
  return os.str();
}

[[noreturn]] void stuck(const std::string& msg) { throw Error(ErrorKind::PipelineStuck, msg); }

std::vector<const ScaledIsometry*> entries_of(const ProofRoute& route) {
  std::vector<const ScaledIsometry*> out;
  for (const auto& tag : route.identities) out.push_back(&catalog_entry(tag));
  return out;
}

PipelineResult finish(const TheoremCase& c, PipelineResult res) {
  if (evaluate(c.form, res.rep) != res.value)
    stuck("produced " + vec(res.rep) + " which does not represent " + std::to_string(res.value));
  if (!c.spec.constraint.admits(res.rep))
    stuck("produced " + vec(res.rep) + " which violates " + c.spec.constraint.to_string());
  return res;
}

// Positive coordinates first: reverse lexicographic order.
std::vector<Vec3i> reps_desc(const TernaryForm& f, i64 n) {
  auto reps = representations(f, n);
  std::reverse(reps.begin(), reps.end());
  return reps;
}

bool off_plane(const Vec3i& v) { return v[1] != 0 || v[2] != 0; }

// Replaces two coordinates of a mate representation by a representation of
// the same binary value avoiding the bad prime. Returns false if the lemma
// does not apply.
bool apply_binary_lemma(const TernaryForm& mate, const ProofRoute& route, Vec3i& v, std::vector<std::string>& trace) {
  const int i = route.lemma_coords[0], j = route.lemma_coords[1];
  const i64 s = route.lemma_sign;
  const i64 a = v[i], b = s * v[j];
  const i64 lam = mate.diag(i);
  if (route.lemma == RouteLemma::Binary223) {
    const i64 half = lam / 2;
    if (lam % 2 != 0 || s * mate.cross(i, j) != lam || 2 * mate.diag(j) != 3 * lam)
      throw Error(ErrorKind::LemmaViolated, "coordinates do not carry a multiple of 2u^2+2uv+3v^2");
    const i64 n = 2 * a * a + 2 * a * b + 3 * b * b;
    if (n == 0 || n % 3 != 0) return false;
    auto [u, w] = nondivisible_rep_2_2_3(n);
    trace.push_back(std::to_string(half) + "*(2u^2+2uv+3v^2) at " + std::to_string(n) + ": (" + std::to_string(a) +
                    "," + std::to_string(b) + ") -> (" + std::to_string(u) + "," + std::to_string(w) + ")");
    v[i] = u;
    v[j] = s * w;
    return true;
  }
  if (mate.diag(j) != lam || mate.cross(i, j) != 0)
    throw Error(ErrorKind::LemmaViolated, "coordinates do not carry a multiple of u^2+v^2");
  const i64 n = a * a + b * b;
  if (n == 0 || n % 5 != 0) return false;
  auto [u, w] = nondivisible_rep_two_squares(n);
  trace.push_back(std::to_string(lam) + "*(u^2+v^2) at " + std::to_string(n) + ": (" + std::to_string(a) + "," +
                  std::to_string(b) + ") -> (" + std::to_string(u) + "," + std::to_string(w) + ")");
  v[i] = u;
  v[j] = s * w;
  return true;
}

PipelineResult via_transfer(const std::vector<const ScaledIsometry*>& entries, const Vec3i& v, i64 value,
                            const char* witness, std::vector<std::string> trace) {
  const AdjustedTransfer t = transfer_with_adjustment(entries, v);
  trace.push_back("adjust " + vec(v) + " -> " + vec(t.adjusted) + ", " + t.entry->tag + " -> " + vec(t.image));
  return {t.image, value, witness, std::move(trace)};
}

std::optional<PipelineResult> try_transfer(const std::vector<const ScaledIsometry*>& entries, const Vec3i& v,
                                           i64 value, const char* witness, const std::vector<std::string>& trace) {
  try {
    return via_transfer(entries, v, value, witness, trace);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoAdjustmentWorks) throw;
    return std::nullopt;
  }
}

PipelineResult genus_pipeline(const TheoremCase& c, i64 m) {
  const GenusClassList& genus = builtin_genus(c.route.genus);
  const ProofRoute& route = c.route;
  const auto entries = entries_of(route);
  const TernaryForm& mate = entries.front()->source;
  std::vector<std::string> trace;

  if (!represented_by_genus(genus, m)) stuck("genus does not represent " + std::to_string(m));
  const auto mate_reps = reps_desc(mate, m);
  if (mate_reps.empty()) {
    auto reps = reps_desc(c.form, m);
    trace.push_back("mate " + mate.to_string() + " misses " + std::to_string(m) + "; target class represents it");
    return {reps.front(), m, "target", std::move(trace)};
  }

  Vec3i v = mate_reps.front();
  trace.push_back("mate " + mate.to_string() + " represents " + std::to_string(m) + " by " + vec(v));

  if (route.twice_square && !off_plane(v)) {
    auto it = std::find_if(mate_reps.begin(), mate_reps.end(), off_plane);
    if (it != mate_reps.end()) {
      v = *it;
      trace.push_back("leave the line y=z=0: " + vec(v));
    } else {
      // Only rep is (+-x, 0, 0): m = 2 x^2.
      i64 x = v[0] < 0 ? -v[0] : v[0];
      int k = 0;
      while (x % 2 == 0 && x > 0) x /= 2, ++k;
      if (x == 1 && k >= 1) {
        const i64 h = i64{1} << (k - 1);
        trace.push_back(std::to_string(m) + " = 2*4^" + std::to_string(k) + ", explicit target rep");
        return {Vec3i(h, h, 0), m, "explicit", std::move(trace)};
      }
      // m = 2 x^2 with x = 2^k x', x' > 1. For a prime p > 5 dividing x the
      // mate has no off-line rep of 2p^2 (scaling would give one of m), so the
      // target represents 2p^2; scale it.
      for (i64 p = 7; p <= x; p += 2) {
        if (x % p != 0 || !is_prime(p)) continue;
        const auto small = reps_desc(c.form, 2 * p * p);
        if (small.empty()) break;
        const i64 f = (v[0] < 0 ? -v[0] : v[0]) / p;
        trace.push_back("mate only on the line; target represents 2*" + std::to_string(p) + "^2 by " +
                        vec(small.front()) + ", scale by " + std::to_string(f));
        return {small.front() * f, m, "target", std::move(trace)};
      }
      auto reps = reps_desc(c.form, m);
      if (reps.empty()) stuck("no representation of " + std::to_string(m) + " off the line");
      trace.push_back("mate only on the line; target class represents it");
      return {reps.front(), m, "target", std::move(trace)};
    }
  }

  if (auto r = try_transfer(entries, v, m, "mate", trace)) return *r;
  if (route.lemma == RouteLemma::None) stuck("no adjustment works for " + vec(v));

  if (route.lemma == RouteLemma::EscapeRotation) {
    const OrbitEscapeProblem p =
        mate == parse_form("3,4,4,2,0,0") ? escape_problem_3_4_4(m) : escape_problem_2_8_15(m);
    const EscapeResult esc = orbit_escape(p);
    trace.push_back("orbit escape under " + p.rotation->tag + ": " + vec(esc.rep));
    v = esc.rep;
  } else if (!apply_binary_lemma(mate, route, v, trace)) {
    stuck("lemma does not apply to " + vec(v));
  }
  if (auto r = try_transfer(entries, v, m, "mate", trace)) return *r;
  stuck("no adjustment works for " + vec(v) + " after the lemma");
}

PipelineResult source_pipeline(const TheoremCase& c, i64 m) {
  const auto entries = entries_of(c.route);
  const TernaryForm source = parse_form(c.route.source);
  const i64 lam = entries.front()->scale;
  if (m % lam != 0) stuck(std::to_string(m) + " is not a multiple of " + std::to_string(lam));
  const i64 s = m / lam;
  const auto reps = reps_desc(source, s);
  if (reps.empty()) stuck("source " + source.to_string() + " misses " + std::to_string(s));
  std::vector<std::string> trace{"source " + source.to_string() + " at " + std::to_string(s)};
  for (const Vec3i& v : reps)
    for (const ScaledIsometry* e : entries) {
      if (!e->preconditions_hold(v)) continue;
      const Vec3i w = transfer(*e, v);
      if (c.spec.constraint.admits(w)) {
        trace.push_back(vec(v) + " via " + e->tag + " -> " + vec(w));
        return {w, m, "source", std::move(trace)};
      }
    }
  stuck("no source representation of " + std::to_string(s) + " transfers under " + c.spec.constraint.to_string());
}

PipelineResult parity_pipeline(const TheoremCase& c, i64 m) {
  const auto entries = entries_of(c.route);
  const ScaledIsometry& flip = *entries.front();
  const auto reps = reps_desc(c.form, m);
  if (reps.empty()) stuck(c.form.to_string() + " misses " + std::to_string(m));
  auto it = std::find_if(reps.begin(), reps.end(), off_plane);
  Vec3i v = it != reps.end() ? *it : reps.front();
  std::vector<std::string> trace{"start " + vec(v)};

  const auto group = adjustment_group(entries);
  auto attempt = [&](const Vec3i& base) -> std::optional<PipelineResult> {
    for (const Mat3i& g : group) {
      const Vec3i a = g * base;
      if (c.spec.constraint.admits(a)) {
        trace.push_back("adjust -> " + vec(a));
        return PipelineResult{a, m, "source", trace};
      }
      if (!flip.preconditions_hold(a)) continue;
      const Vec3i w = transfer(flip, a);
      if (c.spec.constraint.admits(w)) {
        trace.push_back("adjust -> " + vec(a) + ", " + flip.tag + " -> " + vec(w));
        return PipelineResult{w, m, "source", trace};
      }
    }
    return std::nullopt;
  };
  if (auto r = attempt(v)) return *r;
  if (!off_plane(v) || v[1] % 5 != 0 || v[2] % 5 != 0) stuck("parity flip fails for " + vec(v));
  const DescentResult d = descent_2_3_mod5(v[1], v[2]);
  v[1] = d.u;
  v[2] = d.v;
  trace.push_back("5-adic descent on 2y^2+3z^2 -> " + vec(v));
  if (auto r = attempt(v)) return *r;
  stuck("parity flip fails for " + vec(v) + " after descent");
}

}  // namespace

PipelineResult proof_pipeline(const TheoremCase& c, i64 n) {
  if (n < c.spec.n0) throw Error(ErrorKind::InvalidInput, "n below the progression start");
  const i64 m = narrow_i64(checked_add(checked_mul(c.spec.d, n), c.spec.r));
  switch (c.route.kind) {
    case RouteKind::GenusTransfer: return finish(c, genus_pipeline(c, m));
    case RouteKind::SourceTransfer: return finish(c, source_pipeline(c, m));
    case RouteKind::ParityFlip: return finish(c, parity_pipeline(c, m));
    case RouteKind::None: break;
  }
  throw Error(ErrorKind::InvalidInput, "case " + c.id + " has no executable proof route");
}

}  // namespace qf3
