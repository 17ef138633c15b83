// Integer partitions, hook lengths and the Nekrasov-Okounkov specializations.
#pragma once

#include "qmac/json.hpp"
#include "qmac/rational.hpp"
#include "qmac/report.hpp"

#include <compare>
#include <vector>

namespace qmac {

/// A non-increasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// m[s] = multiplicity of the part s, for s = 0..largest part (m[0] unused, 0).
  std::vector<int> multiplicities() const;
  Partition conjugate() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Hook lengths of a Young diagram, sorted non-increasing. One entry per box.
class HookMultiset {
 public:
  explicit HookMultiset(std::vector<int> hooks);

  const std::vector<int>& hooks() const { return hooks_; }
  std::size_t size() const { return hooks_.size(); }
  bool operator==(const HookMultiset&) const = default;

 private:
  std::vector<int> hooks_;
};

/// All partitions of n in reverse-lexicographic order; n = 0 gives {()}.
std::vector<Partition> enumerate_partitions(int n);

/// Hooks via h(i,j) = (lambda_i - j) + (lambda'_j - i) + 1 using the conjugate.
HookMultiset hook_multiset(const Partition& lambda);

/// prod over hooks h of (z / h^2 + 1).
Rational no_weight(const Partition& lambda, const Rational& z);

/// prod over part sizes s of C(2 + m_s, 2).
Integer multiplicity_weight(const Partition& lambda);

/// Compares, for every m < N, the coefficient of q^m in
/// prod_j (1 - q^j)^{-(z+1)} (a formal exponential) with the hook sum.
Report nekrasov_okounkov_check(const Rational& z, std::size_t N);

/// c_3(m), the number of 3-colored partitions of m, computed from the
/// product and from the z = 2 hook sum. Throws std::logic_error if they differ.
Integer colored3(int m);

Json to_json(const Partition& lambda);
/// {partition, hooks, weight} with weight = no_weight(lambda, z).
Json hook_report(const Partition& lambda, const Rational& z);

}  // namespace qmac
