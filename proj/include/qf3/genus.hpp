#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qf3/form.hpp"
#include "qf3/rational.hpp"

namespace qf3 {

/// Deterministic trial-division primality; fine for the prime sizes used here.
bool is_prime(i64 n);

/// Legendre symbol (a/p) for an odd prime p, by Euler's criterion.
int legendre(i64 a, i64 p);

/// Whether f represents n over the p-adic integers, decided by solvability of
/// f(v) = n mod p^e with e = ord_p(n) + 2 ord_p(2 d(f)) + 3.
bool locally_represented(const TernaryForm& f, i64 n, i64 p);

/// Representatives of the classes of one genus.
class GenusClassList {
 public:
  struct Member {
    TernaryForm form;
    i64 aut_order;
  };

  /// Validates a shared discriminant and computes every |Aut|.
  GenusClassList(std::string label, std::string source, const std::vector<TernaryForm>& forms);

  const std::string& label() const { return label_; }
  const std::string& source() const { return source_; }
  const std::vector<Member>& members() const { return members_; }
  i64 discriminant() const { return discriminant_; }

 private:
  std::string label_;
  std::string source_;
  std::vector<Member> members_;
  i64 discriminant_ = 0;
};

bool represented_by_genus(const GenusClassList& classes, i64 n);

/// sum over classes of r(n, f*) / |Aut(f*)|.
Rational genus_count(const GenusClassList& classes, i64 n);

struct SiegelRatio {
  Rational computed;   // genus_count(m p^2) / genus_count(m)
  i64 predicted = 0;   // p + 1 - (-m d / p)
  bool match = false;
};

SiegelRatio siegel_ratio_check(const GenusClassList& classes, i64 m, i64 p);

/// Integer-weighted form of the ratio identity: weights w_i = L / |Aut_i| with
/// L the lcm of the automorphism orders.
struct WeightedDisplay {
  std::vector<i64> weights;
  i128 lhs = 0;  // sum w_i r(m p^2, f_i)
  i128 rhs = 0;  // (p + 1 - chi) * sum w_i r(m, f_i)
};

WeightedDisplay weighted_display(const GenusClassList& classes, i64 m, i64 p);

/// The eleven two-class genera whose representatives are used in the proofs.
const std::vector<GenusClassList>& builtin_genera();

/// Looks up a built-in genus by label; throws InvalidInput when absent.
const GenusClassList& builtin_genus(const std::string& label);

/// Reads {label, classes: [[a,b,c,r,s,t], ...]} or an array of such objects.
std::vector<GenusClassList> load_genus_catalog(const std::filesystem::path& file);

}  // namespace qf3
