#include <algorithm>
#include <atomic>
#include <thread>

#include "qf3/theta_cache.hpp"
#include "qf3/universality.hpp"

namespace qf3 {

namespace {

bool covers(const std::vector<u64>& counts, i64 d, i64 r, i64 bound) {
  for (i64 v = r; v <= bound; v += d)
    if (counts[static_cast<std::size_t>(v)] == 0) return false;
  return true;
}

}  // namespace

std::vector<TernaryForm> scan_candidates(i64 d, i64 r, i64 max_coeff, i64 bound, const ScanOptions& options) {
  ProgressionSpec{d, r, 0, {}}.validate();
  if (max_coeff < 1 || bound < 0) throw Error(ErrorKind::InvalidInput, "max_coeff >= 1 and bound >= 0 required");

  std::vector<TernaryForm> pool;
  for (i64 a = 1; a <= max_coeff; ++a)
    for (i64 b = a; b <= max_coeff; ++b)
      for (i64 c = b; c <= max_coeff; ++c) {
        TernaryForm f = make_form(a, b, c, 0, 0, 0);
        if (std::find(options.exclude.begin(), options.exclude.end(), f) == options.exclude.end())
          pool.push_back(f);
      }

  // Most candidates miss a small element of the progression, so a short
  // sweep rejects them before the full one.
  const i64 quick = std::min<i64>(bound, 64 * d);
  std::vector<char> keep(pool.size(), 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < pool.size(); i = next++) {
      const TernaryForm& f = pool[i];
      if (!covers(theta(f, quick).counts, d, r, quick)) continue;
      const auto counts = options.cache_dir.empty() ? theta(f, bound).counts
                                                    : cached_theta(f, bound, options.cache_dir).counts;
      keep[i] = covers(counts, d, r, bound);
    }
  };
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (unsigned k = 0; k < workers; ++k) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }

  std::vector<TernaryForm> out;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (keep[i]) out.push_back(pool[i]);
  return out;
}

}  // namespace qf3
