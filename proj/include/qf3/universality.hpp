#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qf3/repr.hpp"

namespace qf3 {

/// The claim "f represents every d n + r with n >= n0", optionally with a
/// coordinate constraint on the representation.
struct ProgressionSpec {
  i64 d = 1;
  i64 r = 0;
  i64 n0 = 0;
  CoordinateConstraint constraint{};

  /// Throws InvalidInput unless d >= 1, 0 <= r < d and n0 in {0, 1}.
  void validate() const;
  i64 first() const { return d * n0 + r; }
};

struct UniversalityReport {
  TernaryForm form;
  ProgressionSpec spec;
  i64 bound = 0;
  bool verified = false;
  bool vacuous = false;  // no progression element <= bound
  std::vector<i64> counterexamples;
  double elapsed_ms = 0;
};

/// Memoizes theta sweeps across checks in one run, keyed by form, bound and
/// constraint. Thread-safe.
class ThetaMemo {
 public:
  explicit ThetaMemo(std::filesystem::path cache_dir = {}) : cache_dir_(std::move(cache_dir)) {}

  std::shared_ptr<const std::vector<u64>> get(const TernaryForm& f, i64 bound, const CoordinateConstraint& c,
                                              unsigned workers);

 private:
  std::filesystem::path cache_dir_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const std::vector<u64>>> memo_;
};

struct CheckOptions {
  unsigned workers = 1;
  ThetaMemo* memo = nullptr;  // optional
};

/// Exhaustive bounded check of the progression: one (possibly constrained)
/// theta sweep, then a stride over it.
UniversalityReport check_universal(const TernaryForm& f, const ProgressionSpec& spec, i64 bound,
                                   const CheckOptions& options = {});

// ---------------------------------------------------------------------------
// Theorem cases and proof routes

enum class ClaimKind { Theorem, Background, Conjecture };

std::string_view to_string(ClaimKind k);

enum class RouteKind {
  None,            // cited or conjectural; no executable route
  GenusTransfer,   // represent by the two-class genus, move mate reps to the target
  SourceTransfer,  // represent value / scale by a regular source form, then substitute
  ParityFlip,      // rational automorph that flips every coordinate's parity
};

enum class RouteLemma {
  None,
  Binary223,      // make 2a^2+2ab+3b^2 on two coordinates free of 3 | ab
  TwoSquares,     // make a^2+b^2 on two coordinates free of 5 | ab
  EscapeRotation, // orbit escape with the mate's infinite-order automorph
};

struct ProofRoute {
  RouteKind kind = RouteKind::None;
  std::string genus;                     // built-in genus label (GenusTransfer)
  std::string source;                    // source form literal (SourceTransfer, ParityFlip)
  std::vector<std::string> identities;   // catalog tags
  RouteLemma lemma = RouteLemma::None;
  std::array<int, 2> lemma_coords{1, 2}; // 0-based coordinates the binary lemma acts on
  int lemma_sign = 1;                    // second coordinate enters the binary form as sign * v
  bool twice_square = false;             // handle mate reps on the line y = z = 0
};

struct TheoremCase {
  std::string id;
  ClaimKind kind = ClaimKind::Theorem;
  TernaryForm form;
  ProgressionSpec spec;
  ProofRoute route;
};

/// Every claim checked by the suite, theorem cases first.
const std::vector<TheoremCase>& theorem_cases();
const TheoremCase& theorem_case(const std::string& id);

struct SuiteEntry {
  const TheoremCase* theorem_case = nullptr;
  UniversalityReport report;
  /// "verified", "counterexample", "vacuous", "conjecture-consistent",
  /// "conjecture-refuted".
  std::string status;
};

struct SuiteOptions {
  unsigned workers = 1;
  std::filesystem::path cache_dir{};
};

std::vector<SuiteEntry> theorem_suite(i64 bound, const SuiteOptions& options = {});
SuiteEntry run_case(const TheoremCase& c, i64 bound, const CheckOptions& options = {});

struct PipelineResult {
  Vec3i rep = Vec3i::Zero();
  i64 value = 0;
  /// Which class produced the representation: "mate", "target", "source" or
  /// "explicit".
  std::string witness;
  std::vector<std::string> trace;
};

/// Builds a representation of d n + r by the case's proof route, without
/// searching the target form directly (except where the genus itself
/// witnesses through the target class). Throws PipelineStuck.
PipelineResult proof_pipeline(const TheoremCase& c, i64 n);

// ---------------------------------------------------------------------------
// Scanner

struct ScanOptions {
  unsigned workers = 1;
  std::filesystem::path cache_dir{};
  std::vector<TernaryForm> exclude{};
};

/// Diagonal (a, b, c), 1 <= a <= b <= c <= max_coeff, representing every
/// d n + r <= bound; ascending order.
std::vector<TernaryForm> scan_candidates(i64 d, i64 r, i64 max_coeff, i64 bound, const ScanOptions& options = {});

}  // namespace qf3
