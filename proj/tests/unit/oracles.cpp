#include "oracles.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace oracle {

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<int> hooks(const std::vector<int>& parts) {
  std::vector<int> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      int arm = parts[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < parts.size(); ++k) {
        if (parts[k] > j) ++leg;
      }
      out.push_back(arm + leg + 1);
    }
  }
  return out;
}

Integer macmahon(bool strict, unsigned a, int n) {
  // A chain k_1 < ... < k_a contributes m_1 ... m_a for the partitions with
  // exactly those part sizes, m_i copies of k_i. In a weak chain a size used j
  // times contributes the q^{mk} coefficient of (sum_m m q^{mk})^j, which is
  // C(m + j - 1, 2j - 1).
  Integer total = 0;
  for (const auto& lambda : partitions(n)) {
    std::map<int, int> mult;
    for (int part : lambda) ++mult[part];
    std::vector<int> m;
    for (auto [part, k] : mult) m.push_back(k);
    if (m.size() > a || (strict && m.size() != a)) continue;
    std::function<Integer(std::size_t, unsigned)> assign = [&](std::size_t i, unsigned left) -> Integer {
      if (i == m.size()) return left == 0 ? 1 : 0;
      Integer acc = 0;
      for (unsigned j = 1; j <= (strict ? 1u : left); ++j) {
        Integer c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m[i] + j - 1), 2 * j - 1);
        acc += c * assign(i + 1, left - j);
      }
      return acc;
    };
    total += assign(0, a);
  }
  return total;
}

Integer sigma(unsigned nu, unsigned long n) {
  Integer acc = 0;
  for (unsigned long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), d, nu);
    acc += power;
  }
  return acc;
}

Rational bernoulli(unsigned n) {
  std::vector<Rational> row(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    row[m] = Rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      row[j - 1] = Rational(j) * (row[j - 1] - row[j]);
      row[j - 1].canonicalize();
    }
  }
  // The triangle yields B_1 = +1/2.
  return n == 1 ? Rational(-1, 2) : row[0];
}

Rational w_by_combinations(unsigned t, unsigned a) {
  Rational sum = 0;
  std::vector<unsigned> idx;
  std::function<void(unsigned)> rec = [&](unsigned start) {
    if (idx.size() == t) {
      Rational prod = 1;
      for (unsigned l : idx) prod /= Rational((2 * l + 1) * (2 * l + 1));
      sum += prod;
      return;
    }
    for (unsigned l = start; l < a; ++l) {
      idx.push_back(l);
      rec(l + 1);
      idx.pop_back();
    }
  };
  rec(0);
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * a, a);
  Integer sixteen;
  mpz_ui_pow_ui(sixteen.get_mpz_t(), 16, a);
  Rational pre(binom, sixteen * (2 * a + 1));
  pre.canonicalize();
  return pre * sum;
}

namespace {

std::vector<Rational> poly_mul(const std::vector<Rational>& f, const std::vector<Rational>& g, std::size_t len) {
  std::vector<Rational> h(len, Rational(0));
  for (std::size_t i = 0; i < f.size() && i < len; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size() && i + j < len; ++j) h[i + j] += f[i] * g[j];
  }
  return h;
}

}  // namespace

Rational w_by_arcsin(unsigned t, unsigned a) {
  const std::size_t len = 2 * a + 2;
  // arcsin y = sum_k C(2k,k) / (4^k (2k+1)) y^{2k+1}
  std::vector<Rational> arcsin(len, Rational(0));
  for (std::size_t k = 0; 2 * k + 1 < len; ++k) {
    Integer binom, four;
    mpz_bin_uiui(binom.get_mpz_t(), 2 * k, k);
    mpz_ui_pow_ui(four.get_mpz_t(), 4, k);
    arcsin[2 * k + 1] = Rational(binom, four * (2 * k + 1));
    arcsin[2 * k + 1].canonicalize();
  }
  std::vector<Rational> power(len, Rational(0));
  power[0] = 1;
  for (unsigned i = 0; i < 2 * t + 1; ++i) power = poly_mul(power, arcsin, len);
  Integer fact, four;
  mpz_fac_ui(fact.get_mpz_t(), 2 * t + 1);
  mpz_ui_pow_ui(four.get_mpz_t(), 4, a);
  return power[2 * a + 1] / Rational(fact * four);
}

QSeries eta_power(long e, std::size_t N) {
  std::vector<Rational> c(N, Rational(0));
  if (N > 0) c[0] = 1;
  for (std::size_t n = 1; n < N; ++n) {
    for (long k = 0; k < std::abs(e); ++k) {
      if (e > 0) {
        for (std::size_t i = N; i-- > n;) c[i] -= c[i - n];
      } else {
        for (std::size_t i = n; i < N; ++i) c[i] += c[i - n];
      }
    }
  }
  return QSeries(qmac::RationalField{}, std::move(c));
}

std::optional<std::vector<Rational>> fit(const std::vector<QSeries>& basis, const QSeries& target) {
  const std::size_t cols = basis.size();
  const std::size_t rows = target.precision();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = basis[c][r];
    m[r][cols] = target[r];
  }
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) return std::nullopt;
    std::swap(m[sel], m[pivot_row]);
    const Rational inv = 1 / m[pivot_row][c];
    for (auto& v : m[pivot_row]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[pivot_row][k];
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  if (pivots.size() != cols) return std::nullopt;
  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (m[r][cols] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[i] = m[i][cols];
  return x;
}

QSeries eisenstein(unsigned weight, std::size_t N) {
  std::vector<Rational> c(N, Rational(0));
  const Rational factor = Rational(-2 * static_cast<long>(weight)) / bernoulli(weight);
  if (N > 0) c[0] = 1;
  for (std::size_t n = 1; n < N; ++n) c[n] = factor * Rational(sigma(weight - 1, n));
  return QSeries(qmac::RationalField{}, std::move(c));
}

}  // namespace oracle
