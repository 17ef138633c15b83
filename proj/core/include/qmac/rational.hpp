// Exact integer and rational scalars backed by GMP.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qmac {

using Integer = mpz_class;
using Rational = mpq_class;

/// Renders "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// num/den in lowest terms. gmpxx's two-argument constructor does not reduce,
/// and unreduced values break structural equality.
Rational frac(long num, long den);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned long n);

/// C(n, k) for integer n (negative n allowed, generalized binomial); 0 when k < 0.
Integer binomial(long n, long k);

/// Generalized binomial coefficient C(top, k) = top (top-1) ... (top-k+1) / k!.
Rational binomial(const Rational& top, unsigned long k);

/// Integer power of a rational; negative exponents invert (base must be nonzero).
Rational pow(const Rational& base, long exponent);

/// p-adic valuation; x must be nonzero.
long valuation(const Integer& x, unsigned long p);
long valuation(const Rational& x, unsigned long p);

bool is_prime(std::uint64_t n);

}  // namespace qmac
