#include "qmac/partitions.hpp"

#include "qmac/series.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qmac {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    size_ += parts_[i];
  }
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(parts_.empty() ? 1 : static_cast<std::size_t>(parts_.front()) + 1, 0);
  for (int s : parts_) ++m[static_cast<std::size_t>(s)];
  return m;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> cols(static_cast<std::size_t>(parts_.front()), 0);
  for (int row : parts_) {
    for (int j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

HookMultiset::HookMultiset(std::vector<int> hooks) : hooks_(std::move(hooks)) {
  std::sort(hooks_.begin(), hooks_.end(), std::greater<>());
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Successor in reverse-lexicographic order: decrement the last part > 1 and
  // refill the tail greedily with parts no larger than the new value.
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) break;
    int v = --a.back();
    int rem = ones + 1;
    while (rem > 0) {
      int part = std::min(v, rem);
      a.push_back(part);
      rem -= part;
    }
  }
  return out;
}

HookMultiset hook_multiset(const Partition& lambda) {
  const auto& rows = lambda.parts();
  const auto cols = lambda.conjugate().parts();
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      int arm = rows[i] - (j + 1);
      int leg = cols[static_cast<std::size_t>(j)] - static_cast<int>(i + 1);
      hooks.push_back(arm + leg + 1);
    }
  }
  return HookMultiset(std::move(hooks));
}

Rational no_weight(const Partition& lambda, const Rational& z) {
  Rational r(1);
  const HookMultiset hooks = hook_multiset(lambda);
  for (int h : hooks.hooks()) {
    Rational factor(z);
    factor /= static_cast<long>(h) * h;
    factor += 1;
    r *= factor;
  }
  return r;
}

Integer multiplicity_weight(const Partition& lambda) {
  Integer r(1);
  auto m = lambda.multiplicities();
  for (std::size_t s = 1; s < m.size(); ++s) r *= binomial(2 + m[s], 2);
  return r;
}

namespace {

// log prod_j (1 - q^j)^{-1} = sum_n (sum_{d | n} 1/d) q^n
QSeries log_euler_inverse(std::size_t N) {
  std::vector<Rational> c(N, Rational(0));
  for (std::size_t d = 1; d < N; ++d) {
    const Rational inv = frac(1, static_cast<long>(d));
    for (std::size_t n = d; n < N; n += d) c[n] += inv;
  }
  return QSeries(RationalField{}, std::move(c));
}

}  // namespace

Report nekrasov_okounkov_check(const Rational& z, std::size_t N) {
  if (N < 1) throw std::invalid_argument("nekrasov_okounkov_check needs N >= 1");
  Report report("no-identity", Json{{"z", exact_json(z)}, {"N", N}});
  QSeries product = exp_series(scale(log_euler_inverse(N), Rational(z + 1)));
  for (std::size_t m = 0; m < N; ++m) {
    Rational hook_sum(0);
    for (const auto& lambda : enumerate_partitions(static_cast<int>(m))) hook_sum += no_weight(lambda, z);
    report.add("q^" + std::to_string(m), hook_sum == product[m],
               Json{{"product", exact_json(product[m])}, {"hook_sum", exact_json(hook_sum)}});
  }
  return report;
}

Integer colored3(int m) {
  if (m < 0) throw std::invalid_argument("colored3 needs m >= 0");
  QSeries p3 = euler_product(RationalField{}, static_cast<std::size_t>(m) + 1, -3);
  Rational by_product = p3[static_cast<std::size_t>(m)];
  Rational by_hooks(0);
  for (const auto& lambda : enumerate_partitions(m)) by_hooks += no_weight(lambda, Rational(2));
  if (by_product != by_hooks) {
    throw std::logic_error("colored3(" + std::to_string(m) + "): product " + to_string(by_product) +
                           " != hook sum " + to_string(by_hooks));
  }
  return Integer(by_product.get_num());
}

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Json hook_report(const Partition& lambda, const Rational& z) {
  return Json{{"partition", to_json(lambda)},
              {"hooks", hook_multiset(lambda).hooks()},
              {"weight", exact_json(no_weight(lambda, z))}};
}

}  // namespace qmac
