// Coefficient rings for truncated q-series: the rationals and Z/mZ.
#pragma once

#include "qmac/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qmac {

__extension__ using uint128 = unsigned __int128;
__extension__ using int128 = __int128;

enum class RingKind { ExactRational, IntegerMod };

/// Runtime description of a coefficient ring, used for mismatch checks and
/// serialization.
struct CoefficientRing {
  RingKind kind = RingKind::ExactRational;
  std::uint64_t modulus = 0;

  static CoefficientRing rational() { return {RingKind::ExactRational, 0}; }
  static CoefficientRing integers_mod(std::uint64_t m);

  std::string name() const;
  bool operator==(const CoefficientRing&) const = default;
};

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch(const CoefficientRing& a, const CoefficientRing& b);
};

class NotAUnit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A rational that cannot be reduced modulo m because its denominator
/// shares a factor with m.
class NonIntegralCoefficient : public std::domain_error {
 public:
  NonIntegralCoefficient(std::size_t exponent, Integer denominator, std::uint64_t modulus);

  std::size_t exponent() const { return exponent_; }
  const Integer& denominator() const { return denominator_; }
  std::uint64_t modulus() const { return modulus_; }

 private:
  std::size_t exponent_;
  Integer denominator_;
  std::uint64_t modulus_;
};

class RationalField {
 public:
  using value_type = Rational;

  CoefficientRing descriptor() const { return CoefficientRing::rational(); }

  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type from_int(long long v) const { return Rational(static_cast<long>(v)); }
  value_type from_integer(const Integer& v) const { return Rational(v); }
  value_type from_rational(const Rational& v) const { return v; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  void add_assign(value_type& acc, const value_type& x) const { acc += x; }
  void sub_assign(value_type& acc, const value_type& x) const { acc -= x; }
  void fma(value_type& acc, const value_type& a, const value_type& b) const { acc += a * b; }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_unit(const value_type& a) const { return sgn(a) != 0; }
  value_type inverse(const value_type& a) const {
    if (sgn(a) == 0) throw NotAUnit("zero has no inverse");
    return Rational(1) / a;
  }

  std::string format(const value_type& a) const { return to_string(a); }

  bool operator==(const RationalField&) const { return true; }
};

/// Z/mZ with m >= 2. Elements are canonical residues in [0, m).
class IntegersMod {
 public:
  using value_type = std::uint64_t;

  explicit IntegersMod(std::uint64_t modulus);

  std::uint64_t modulus() const { return m_; }
  CoefficientRing descriptor() const { return CoefficientRing::integers_mod(m_); }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % m_; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(m_);
    return static_cast<value_type>(r < 0 ? r + static_cast<long long>(m_) : r);
  }
  value_type from_integer(const Integer& v) const;
  /// Throws NonIntegralCoefficient (exponent 0) if the denominator is not
  /// invertible; series-level callers rethrow with the true exponent.
  value_type from_rational(const Rational& v) const;

  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= m_ || s < a ? s - m_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (m_ - b); }
  value_type neg(value_type a) const { return a == 0 ? 0 : m_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<uint128>(a) * b % m_);
  }
  void add_assign(value_type& acc, value_type x) const { acc = add(acc, x); }
  void sub_assign(value_type& acc, value_type x) const { acc = sub(acc, x); }
  void fma(value_type& acc, value_type a, value_type b) const { acc = add(acc, mul(a, b)); }

  bool is_zero(value_type a) const { return a == 0; }
  bool is_unit(value_type a) const;
  value_type inverse(value_type a) const;
  value_type pow(value_type base, std::uint64_t exponent) const;

  std::string format(value_type a) const { return std::to_string(a); }

  bool operator==(const IntegersMod& other) const { return m_ == other.m_; }

 private:
  std::uint64_t m_;
};

}  // namespace qmac
