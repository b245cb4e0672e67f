#include "qf3/universality.hpp"

#include <chrono>

#include "qf3/theta_cache.hpp"

namespace qf3 {

void ProgressionSpec::validate() const {
  if (d < 1) throw Error(ErrorKind::InvalidInput, "d must be at least 1");
  if (r < 0 || r >= d) throw Error(ErrorKind::InvalidInput, "r must satisfy 0 <= r < d");
  if (n0 != 0 && n0 != 1) throw Error(ErrorKind::InvalidInput, "n0 must be 0 or 1");
}

std::string_view to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::Theorem: return "theorem";
    case ClaimKind::Background: return "background";
    case ClaimKind::Conjecture: return "conjecture";
  }
  return "unknown";
}

std::shared_ptr<const std::vector<u64>> ThetaMemo::get(const TernaryForm& f, i64 bound, const CoordinateConstraint& c,
                                                       unsigned workers) {
  const std::string key = f.to_string() + "|" + std::to_string(bound) + "|" + c.to_string();
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  std::vector<u64> counts = c.empty() ? cached_theta(f, bound, cache_dir_, workers).counts
                                      : theta(f, bound, {workers, c}).counts;
  auto ptr = std::make_shared<const std::vector<u64>>(std::move(counts));
  std::lock_guard lock(mu_);
  return memo_.emplace(key, ptr).first->second;
}

UniversalityReport check_universal(const TernaryForm& f, const ProgressionSpec& spec, i64 bound,
                                   const CheckOptions& options) {
  spec.validate();
  if (bound < 0) throw Error(ErrorKind::InvalidInput, "bound must be nonnegative");
  const auto start = std::chrono::steady_clock::now();
  UniversalityReport rep{f, spec, bound, true, false, {}, 0};
  if (spec.first() > bound) {
    rep.vacuous = true;
  } else {
    std::shared_ptr<const std::vector<u64>> counts;
    if (options.memo) {
      counts = options.memo->get(f, bound, spec.constraint, options.workers);
    } else {
      counts = std::make_shared<const std::vector<u64>>(theta(f, bound, {options.workers, spec.constraint}).counts);
    }
    for (i64 v = spec.first(); v <= bound; v += spec.d)
      if ((*counts)[static_cast<std::size_t>(v)] == 0) rep.counterexamples.push_back(v);
    rep.verified = rep.counterexamples.empty();
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace qf3
