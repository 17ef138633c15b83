// Truncated formal power series over a coefficient ring.
//
// A Series knows its coefficients for exponents 0..precision-1. Binary
// operations truncate to the smaller operand precision, so a result never
// claims more terms than were actually determined by its inputs.
#pragma once

#include "qmac/ring.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace qmac {

template <class Ring>
class Series {
 public:
  using ring_type = Ring;
  using value_type = typename Ring::value_type;

  Series(Ring ring, std::size_t precision)
      : ring_(std::move(ring)), coeffs_(precision, ring_.zero()) {}
  Series(Ring ring, std::vector<value_type> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

  static Series constant(Ring ring, std::size_t precision, value_type c) {
    Series s(std::move(ring), precision);
    if (precision > 0) s.coeffs_[0] = std::move(c);
    return s;
  }
  static Series one(Ring ring, std::size_t precision) {
    auto c = ring.one();
    return constant(std::move(ring), precision, std::move(c));
  }
  /// c q^exponent, or the zero series if exponent >= precision.
  static Series monomial(Ring ring, std::size_t precision, std::size_t exponent, value_type c) {
    Series s(std::move(ring), precision);
    if (exponent < precision) s.coeffs_[exponent] = std::move(c);
    return s;
  }

  const Ring& ring() const { return ring_; }
  std::size_t precision() const { return coeffs_.size(); }
  const value_type& operator[](std::size_t n) const { return coeffs_[n]; }
  const std::vector<value_type>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const value_type& c) { return ring_.is_zero(c); });
  }
  /// Smallest exponent with a nonzero coefficient.
  std::optional<std::size_t> valuation() const {
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      if (!ring_.is_zero(coeffs_[n])) return n;
    }
    return std::nullopt;
  }

  bool operator==(const Series& other) const {
    return ring_ == other.ring_ && coeffs_ == other.coeffs_;
  }

 private:
  Ring ring_;
  std::vector<value_type> coeffs_;
};

using QSeries = Series<RationalField>;
using ModSeries = Series<IntegersMod>;

template <class Ring>
void require_same_ring(const Series<Ring>& f, const Series<Ring>& g) {
  if (!(f.ring() == g.ring())) throw RingMismatch(f.ring().descriptor(), g.ring().descriptor());
}

template <class Ring>
Series<Ring> truncate(const Series<Ring>& f, std::size_t precision) {
  precision = std::min(precision, f.precision());
  return Series<Ring>(f.ring(), std::vector(f.coeffs().begin(), f.coeffs().begin() + static_cast<std::ptrdiff_t>(precision)));
}

template <class Ring>
Series<Ring> add(const Series<Ring>& f, const Series<Ring>& g) {
  require_same_ring(f, g);
  const auto& R = f.ring();
  std::size_t n = std::min(f.precision(), g.precision());
  std::vector<typename Ring::value_type> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = R.add(f[i], g[i]);
  return Series<Ring>(R, std::move(c));
}

template <class Ring>
Series<Ring> sub(const Series<Ring>& f, const Series<Ring>& g) {
  require_same_ring(f, g);
  const auto& R = f.ring();
  std::size_t n = std::min(f.precision(), g.precision());
  std::vector<typename Ring::value_type> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = R.sub(f[i], g[i]);
  return Series<Ring>(R, std::move(c));
}

template <class Ring>
Series<Ring> neg(const Series<Ring>& f) {
  const auto& R = f.ring();
  std::vector<typename Ring::value_type> c(f.precision());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = R.neg(f[i]);
  return Series<Ring>(R, std::move(c));
}

template <class Ring>
Series<Ring> scale(const Series<Ring>& f, const typename Ring::value_type& s) {
  const auto& R = f.ring();
  std::vector<typename Ring::value_type> c(f.precision());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = R.mul(f[i], s);
  return Series<Ring>(R, std::move(c));
}

/// Schoolbook Cauchy product truncated to the smaller precision.
template <class Ring>
Series<Ring> mul(const Series<Ring>& f, const Series<Ring>& g) {
  require_same_ring(f, g);
  const auto& R = f.ring();
  std::size_t n = std::min(f.precision(), g.precision());
  std::vector<typename Ring::value_type> c(n, R.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (R.is_zero(f[i])) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!R.is_zero(g[j])) R.fma(c[i + j], f[i], g[j]);
    }
  }
  return Series<Ring>(R, std::move(c));
}

template <class Ring>
Series<Ring> power(const Series<Ring>& f, unsigned exponent) {
  Series<Ring> result = Series<Ring>::one(f.ring(), f.precision());
  Series<Ring> base = f;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

/// Multiplicative inverse; the constant term must be a unit.
template <class Ring>
Series<Ring> invert(const Series<Ring>& f) {
  const auto& R = f.ring();
  std::size_t n = f.precision();
  if (n == 0) return f;
  if (!R.is_unit(f[0])) throw NotAUnit("constant term is not a unit in " + R.descriptor().name());
  auto inv0 = R.inverse(f[0]);
  std::vector<typename Ring::value_type> c(n, R.zero());
  c[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    auto acc = R.zero();
    for (std::size_t i = 1; i <= k; ++i) {
      if (!R.is_zero(f[i])) R.fma(acc, f[i], c[k - i]);
    }
    c[k] = R.neg(R.mul(acc, inv0));
  }
  return Series<Ring>(R, std::move(c));
}

/// Theta = q d/dq: the coefficient of q^n is multiplied by n.
template <class Ring>
Series<Ring> theta(const Series<Ring>& f) {
  const auto& R = f.ring();
  std::vector<typename Ring::value_type> c(f.precision());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = R.mul(f[n], R.from_int(static_cast<long long>(n)));
  return Series<Ring>(R, std::move(c));
}

template <class Ring>
Series<Ring> theta_power(const Series<Ring>& f, unsigned k) {
  Series<Ring> r = f;
  for (unsigned i = 0; i < k; ++i) r = theta(r);
  return r;
}

/// q^shift * f, keeping the precision of f.
template <class Ring>
Series<Ring> shift_up(const Series<Ring>& f, std::size_t shift) {
  const auto& R = f.ring();
  std::vector<typename Ring::value_type> c(f.precision(), R.zero());
  for (std::size_t n = 0; n + shift < c.size(); ++n) c[n + shift] = f[n];
  return Series<Ring>(R, std::move(c));
}

/// q^{-shift} * f; the dropped low coefficients must be zero. Precision drops by shift.
template <class Ring>
Series<Ring> shift_down(const Series<Ring>& f, std::size_t shift) {
  const auto& R = f.ring();
  for (std::size_t n = 0; n < std::min(shift, f.precision()); ++n) {
    if (!R.is_zero(f[n])) throw std::domain_error("shift_down would drop a nonzero coefficient");
  }
  if (shift >= f.precision()) return Series<Ring>(R, 0);
  return Series<Ring>(R, std::vector(f.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), f.coeffs().end()));
}

/// f | V_d: q -> q^d. Precision is kept (the result is known to the same order).
template <class Ring>
Series<Ring> v_operator(const Series<Ring>& f, std::size_t d) {
  const auto& R = f.ring();
  std::vector<typename Ring::value_type> c(f.precision(), R.zero());
  for (std::size_t n = 0; n * d < c.size(); ++n) c[n * d] = f[n];
  return Series<Ring>(R, std::move(c));
}

/// f | U_d: keeps a(dn). Output precision is ceil(precision / d).
template <class Ring>
Series<Ring> u_operator(const Series<Ring>& f, std::size_t d) {
  const auto& R = f.ring();
  std::size_t out = f.precision() == 0 ? 0 : (f.precision() - 1) / d + 1;
  std::vector<typename Ring::value_type> c(out);
  for (std::size_t n = 0; n < out; ++n) c[n] = f[n * d];
  return Series<Ring>(R, std::move(c));
}

/// f * (1 - q^k)^{-1}, in O(precision).
template <class Ring>
Series<Ring> divide_one_minus_qk(const Series<Ring>& f, std::size_t k) {
  const auto& R = f.ring();
  std::vector<typename Ring::value_type> c = f.coeffs();
  for (std::size_t n = k; n < c.size(); ++n) R.add_assign(c[n], c[n - k]);
  return Series<Ring>(R, std::move(c));
}

/// f * (1 - q^k), in O(precision).
template <class Ring>
Series<Ring> times_one_minus_qk(const Series<Ring>& f, std::size_t k) {
  const auto& R = f.ring();
  std::vector<typename Ring::value_type> c = f.coeffs();
  for (std::size_t n = c.size(); n-- > k;) R.sub_assign(c[n], c[n - k]);
  return Series<Ring>(R, std::move(c));
}

/// prod_{n>=1} (1 - q^{step*n})^exponent for any integer exponent.
template <class Ring>
Series<Ring> euler_product(const Ring& ring, std::size_t precision, long exponent, std::size_t step = 1) {
  Series<Ring> r = Series<Ring>::one(ring, precision);
  for (std::size_t k = step; k < precision; k += step) {
    for (long e = 0; e < (exponent < 0 ? -exponent : exponent); ++e) {
      r = exponent < 0 ? divide_one_minus_qk(r, k) : times_one_minus_qk(r, k);
    }
  }
  return r;
}

/// Exponent of the first coefficient where f and g differ, comparing up to
/// the shared precision.
template <class Ring>
std::optional<std::size_t> first_difference(const Series<Ring>& f, const Series<Ring>& g) {
  require_same_ring(f, g);
  std::size_t n = std::min(f.precision(), g.precision());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(f[i] == g[i])) return i;
  }
  return std::nullopt;
}

template <class Ring>
bool agree(const Series<Ring>& f, const Series<Ring>& g) {
  return !first_difference(f, g).has_value();
}

template <class Ring>
Series<Ring> operator+(const Series<Ring>& f, const Series<Ring>& g) { return add(f, g); }
template <class Ring>
Series<Ring> operator-(const Series<Ring>& f, const Series<Ring>& g) { return sub(f, g); }
template <class Ring>
Series<Ring> operator-(const Series<Ring>& f) { return neg(f); }
template <class Ring>
Series<Ring> operator*(const Series<Ring>& f, const Series<Ring>& g) { return mul(f, g); }

/// sum_{n>=1} sigma_nu(n) q^n, where sigma_nu(n) is the sum of d^nu over divisors d of n.
template <class Ring>
Series<Ring> sigma_series(const Ring& ring, unsigned nu, std::size_t precision) {
  std::vector<Integer> sums(precision, Integer(0));
  Integer dpow;
  for (std::size_t d = 1; d < precision; ++d) {
    mpz_ui_pow_ui(dpow.get_mpz_t(), d, nu);
    for (std::size_t n = d; n < precision; n += d) sums[n] += dpow;
  }
  std::vector<typename Ring::value_type> c(precision);
  for (std::size_t n = 0; n < precision; ++n) c[n] = ring.from_integer(sums[n]);
  return Series<Ring>(ring, std::move(c));
}

QSeries sigma_series(unsigned nu, std::size_t precision);

/// sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2}: eta(q)^3 with its q^{1/8} stripped.
template <class Ring>
Series<Ring> psi_tilde(const Ring& ring, std::size_t precision) {
  std::vector<typename Ring::value_type> c(precision, ring.zero());
  for (std::size_t n = 0; n * (n + 1) / 2 < precision; ++n) {
    long long v = static_cast<long long>(2 * n + 1);
    c[n * (n + 1) / 2] = ring.from_int(n % 2 == 0 ? v : -v);
  }
  return Series<Ring>(ring, std::move(c));
}

QSeries psi_tilde(std::size_t precision);

/// Coefficient-wise reduction of a rational series modulo m.
ModSeries reduce_mod(const QSeries& f, std::uint64_t modulus);

/// exp(h) for h with zero constant term, over the rationals.
QSeries exp_series(const QSeries& h);

/// Lifts residues to the rationals as integers in [0, m).
QSeries lift(const ModSeries& f);

}  // namespace qmac
