// MacMahon's partition-multiplicity series U_a (strict chains, family MO) and
// U_a* (weak chains, family M), computed by independent methods.
#pragma once

#include "qmac/eisenstein.hpp"
#include "qmac/quasimodular.hpp"
#include "qmac/report.hpp"
#include "qmac/series.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmac {

enum class Family { MO, M };
enum class Method { Direct, SingleSum, Recursion, Eisenstein };

std::string to_string(Family f);
std::string to_string(Method m);
/// Accepts "mo"/"m" and "direct"/"single-sum"/"recursion"/"eisenstein"; throws std::invalid_argument otherwise.
Family parse_family(std::string_view s);
Method parse_method(std::string_view s);

struct MacMahonSeries {
  Family family;
  unsigned a;
  Method method;
  QSeries series;
  /// Filled by the Eisenstein method only.
  std::optional<QuasimodularExpansion> expansion;
};

/// {family, a, method, precision, coeffs}
Json to_json(const MacMahonSeries& s);

/// Sum over chains k_1 < ... < k_a (strict) or k_1 <= ... <= k_a (weak) of
/// prod q^{k_i} / (1 - q^{k_i})^2. Works over any coefficient ring.
///
/// D[j] holds the chains of length j whose indices are below the current K.
/// Adding K appends it to shorter chains; running j downward forbids
/// repeating K (strict), running j upward allows it (weak).
template <class Ring>
Series<Ring> macmahon_direct(const Ring& ring, Family family, unsigned a, std::size_t N) {
  using S = Series<Ring>;
  std::vector<S> D(a + 1, S(ring, N));
  D[0] = S::one(ring, N);
  auto attach = [&](const S& g, std::size_t K) {
    return divide_one_minus_qk(divide_one_minus_qk(shift_up(g, K), K), K);
  };
  for (std::size_t K = 1; K < N; ++K) {
    if (family == Family::MO) {
      for (unsigned j = a; j >= 1; --j) D[j] = D[j] + attach(D[j - 1], K);
    } else {
      for (unsigned j = 1; j <= a; ++j) D[j] = D[j] + attach(D[j - 1], K);
    }
  }
  return D[a];
}

/// U_a prod (1-q^n)^3 = (-1)^a / (2a+1)! sum_n (-1)^n (2n+1) (n+a)!/(n-a)! q^{n(n+1)/2}.
template <class Ring>
Series<Ring> mo_single_sum_series(const Ring& ring, unsigned a, std::size_t N) {
  std::vector<typename Ring::value_type> c(N, ring.zero());
  const Integer denom = factorial(2 * a + 1);
  for (std::size_t n = a; n * (n + 1) / 2 < N; ++n) {
    // (n+a)!/(n-a)! as a product of 2a consecutive integers.
    Integer num(static_cast<unsigned long>(2 * n + 1));
    for (std::size_t i = n - a + 1; i <= n + a; ++i) num *= static_cast<unsigned long>(i);
    if (!mpz_divisible_p(num.get_mpz_t(), denom.get_mpz_t())) {
      throw std::logic_error("single-sum term is not integral");
    }
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
    if ((n + a) % 2 == 1) num = -num;
    c[n * (n + 1) / 2] = ring.from_integer(num);
  }
  return mul(Series<Ring>(ring, std::move(c)), euler_product(ring, N, -3));
}

/// U_a* = sum_{k>=1} (-1)^{k-1} (1 + q^k) q^{C(k,2) + a k} / (1 - q^k)^{2a}.
template <class Ring>
Series<Ring> m_single_sum_series(const Ring& ring, unsigned a, std::size_t N) {
  using S = Series<Ring>;
  S total(ring, N);
  for (std::size_t k = 1; k * (k - 1) / 2 + a * k < N; ++k) {
    const std::size_t e = k * (k - 1) / 2 + a * k;
    auto sign = ring.from_int(k % 2 == 1 ? 1 : -1);
    S term = S::monomial(ring, N, e, sign) + S::monomial(ring, N, e + k, sign);
    for (unsigned i = 0; i < 2 * a; ++i) term = divide_one_minus_qk(term, k);
    total = total + term;
  }
  return total;
}

MacMahonSeries mo_direct(unsigned a, std::size_t N);
MacMahonSeries m_direct(unsigned a, std::size_t N);
ModSeries mo_direct_mod(unsigned a, std::size_t N, std::uint64_t modulus);
ModSeries m_direct_mod(unsigned a, std::size_t N, std::uint64_t modulus);

MacMahonSeries mo_single_sum(unsigned a, std::size_t N);
MacMahonSeries m_single_sum(unsigned a, std::size_t N);

/// Andrews-Rose recursion seeded with U_1 = sum sigma_1(n) q^n.
MacMahonSeries mo_recursion(unsigned a, std::size_t N);

/// sum_t w_t(a) sum_{alpha+2beta+3gamma=t} c(alpha,beta,gamma) E2^alpha E4^beta E6^gamma.
QuasimodularExpansion mo_expansion(unsigned a, const ConstantTables& tables);
/// sum_t w*_t(a) bbE*_{2t}.
QuasimodularExpansion m_expansion(unsigned a, const ConstantTables& tables);

MacMahonSeries mo_eisenstein(unsigned a, std::size_t N);
MacMahonSeries m_eisenstein(unsigned a, std::size_t N);
MacMahonSeries mo_eisenstein(unsigned a, std::size_t N, const ConstantTables& tables);
MacMahonSeries m_eisenstein(unsigned a, std::size_t N, const ConstantTables& tables);

/// Dispatches on family and method. Recursion is only defined for MO.
MacMahonSeries compute(Family family, Method method, unsigned a, std::size_t N);

/// The coefficient MO(a;n) or M(a;n) from the direct sum.
Integer coefficient(Family family, unsigned a, std::size_t n);

/// sum_{i=0}^{a} (-1)^i U_i U*_{a-i} = 0, with U_0 = U_0* = 1.
Report convolution_check(unsigned a, std::size_t N);

/// MO(a;n) = c_3(n - a(a+1)/2) for a(a+1)/2 <= n <= a + a(a+1)/2.
/// Throws std::out_of_range outside that window.
Integer hook_limit_value(unsigned a, std::size_t n);

/// hook_limit_value against the direct series over the whole window, for 1 <= a <= a_max.
Report hook_limit_check(unsigned a_max);

/// q^{-a(a+1)/2} U_a prod (1-q^n)^3 against its closed sum, the marker
/// terms at q^{a+1} and q^{2a+3}, and agreement with prod (1-q^n)^{-3} below q^{a+1}.
Report limit_expansion_check(unsigned a, std::size_t N);

/// p_n(x) = C(2x+n-1, n) + C(2x+n-2, n-1) as polynomial coefficients in x (index = degree).
std::vector<Rational> p_poly_coefficients(unsigned n);
Rational p_poly(unsigned n, const Rational& x);

/// C(a+n-1, n-a) + C(a+n-2, n-a-1).
Integer m_closed_form(unsigned a, std::size_t n);

/// Coefficients of s^a q^n, truncated to s-degree A and q-precision N.
class BivariateSeries {
 public:
  BivariateSeries(std::size_t s_degree, std::size_t q_precision);

  std::size_t s_degree() const { return coeffs_.size() - 1; }
  std::size_t q_precision() const { return q_precision_; }
  Rational& at(std::size_t a, std::size_t n) { return coeffs_[a][n]; }
  const Rational& at(std::size_t a, std::size_t n) const { return coeffs_[a][n]; }
  QSeries row(std::size_t a) const { return QSeries(RationalField{}, coeffs_[a]); }

  friend BivariateSeries operator*(const BivariateSeries& f, const BivariateSeries& g);
  BivariateSeries inverse() const;

 private:
  std::size_t q_precision_;
  std::vector<std::vector<Rational>> coeffs_;
};

/// prod_k (1 + 4 s q^k/(1-q^k)^2) = sum 4^a U_a s^a, and its reciprocal gives (-4)^a U_a*.
Report bivariate_identity_check(unsigned A, std::size_t N);

}  // namespace qmac
