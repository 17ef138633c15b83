#include "qmac/macmahon.hpp"

#include "qmac/partitions.hpp"

#include <stdexcept>

namespace qmac {

std::string to_string(Family f) { return f == Family::MO ? "mo" : "m"; }

std::string to_string(Method m) {
  switch (m) {
    case Method::Direct: return "direct";
    case Method::SingleSum: return "single-sum";
    case Method::Recursion: return "recursion";
    case Method::Eisenstein: return "eisenstein";
  }
  return "unknown";
}

Family parse_family(std::string_view s) {
  if (s == "mo" || s == "MO") return Family::MO;
  if (s == "m" || s == "M") return Family::M;
  throw std::invalid_argument("unknown family '" + std::string(s) + "' (expected mo or m)");
}

Method parse_method(std::string_view s) {
  if (s == "direct") return Method::Direct;
  if (s == "single-sum") return Method::SingleSum;
  if (s == "recursion") return Method::Recursion;
  if (s == "eisenstein") return Method::Eisenstein;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

Json to_json(const MacMahonSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.series.coeffs()) coeffs.push_back(exact_json(c));
  return Json{{"family", to_string(s.family)},
              {"a", s.a},
              {"method", to_string(s.method)},
              {"precision", s.series.precision()},
              {"coeffs", std::move(coeffs)}};
}

namespace {

void require_order(unsigned a, unsigned min) {
  if (a < min) throw std::invalid_argument("order a must be >= " + std::to_string(min));
}

}  // namespace

MacMahonSeries mo_direct(unsigned a, std::size_t N) {
  require_order(a, 1);
  return {Family::MO, a, Method::Direct, macmahon_direct(RationalField{}, Family::MO, a, N), std::nullopt};
}

MacMahonSeries m_direct(unsigned a, std::size_t N) {
  require_order(a, 1);
  return {Family::M, a, Method::Direct, macmahon_direct(RationalField{}, Family::M, a, N), std::nullopt};
}

ModSeries mo_direct_mod(unsigned a, std::size_t N, std::uint64_t modulus) {
  require_order(a, 1);
  return macmahon_direct(IntegersMod(modulus), Family::MO, a, N);
}

ModSeries m_direct_mod(unsigned a, std::size_t N, std::uint64_t modulus) {
  require_order(a, 1);
  return macmahon_direct(IntegersMod(modulus), Family::M, a, N);
}

MacMahonSeries mo_single_sum(unsigned a, std::size_t N) {
  require_order(a, 1);
  return {Family::MO, a, Method::SingleSum, mo_single_sum_series(RationalField{}, a, N), std::nullopt};
}

MacMahonSeries m_single_sum(unsigned a, std::size_t N) {
  require_order(a, 1);
  return {Family::M, a, Method::SingleSum, m_single_sum_series(RationalField{}, a, N), std::nullopt};
}

MacMahonSeries mo_recursion(unsigned a, std::size_t N) {
  require_order(a, 1);
  const QSeries u1 = sigma_series(1, N);
  QSeries u = u1;
  for (unsigned k = 2; k <= a; ++k) {
    QSeries factor = scale(u1, Rational(6)) + QSeries::constant(RationalField{}, N, Rational(k * (k - 1)));
    u = scale(factor * u - scale(theta(u), Rational(2)), frac(1, static_cast<long>(2 * k * (2 * k + 1))));
  }
  return {Family::MO, a, Method::Recursion, std::move(u), std::nullopt};
}

QuasimodularExpansion mo_expansion(unsigned a, const ConstantTables& tables) {
  QuasimodularExpansion e("mo-eisenstein");
  for (unsigned t = 0; t <= a; ++t) e.add(script_E_expansion(t, tables), tables.w(t, a));
  return e;
}

QuasimodularExpansion m_expansion(unsigned a, const ConstantTables& tables) {
  QuasimodularExpansion e("m-eisenstein");
  for (unsigned t = 0; t <= a; ++t) e.add(bbE_expansion(t, true), tables.w_star(t, a));
  return e;
}

MacMahonSeries mo_eisenstein(unsigned a, std::size_t N, const ConstantTables& tables) {
  auto e = mo_expansion(a, tables);
  QSeries s = expansion_eval(e, N);
  return {Family::MO, a, Method::Eisenstein, std::move(s), std::move(e)};
}

MacMahonSeries m_eisenstein(unsigned a, std::size_t N, const ConstantTables& tables) {
  auto e = m_expansion(a, tables);
  QSeries s = expansion_eval(e, N);
  return {Family::M, a, Method::Eisenstein, std::move(s), std::move(e)};
}

MacMahonSeries mo_eisenstein(unsigned a, std::size_t N) { return mo_eisenstein(a, N, ConstantTables(a)); }

MacMahonSeries m_eisenstein(unsigned a, std::size_t N) { return m_eisenstein(a, N, ConstantTables(a)); }

MacMahonSeries compute(Family family, Method method, unsigned a, std::size_t N) {
  switch (method) {
    case Method::Direct: return family == Family::MO ? mo_direct(a, N) : m_direct(a, N);
    case Method::SingleSum: return family == Family::MO ? mo_single_sum(a, N) : m_single_sum(a, N);
    case Method::Recursion:
      if (family != Family::MO) throw std::invalid_argument("the recursion method exists only for family mo");
      return mo_recursion(a, N);
    case Method::Eisenstein: return family == Family::MO ? mo_eisenstein(a, N) : m_eisenstein(a, N);
  }
  throw std::invalid_argument("unknown method");
}

Integer coefficient(Family family, unsigned a, std::size_t n) {
  QSeries s = macmahon_direct(RationalField{}, family, a, n + 1);
  return Integer(s[n].get_num());
}

Report convolution_check(unsigned a, std::size_t N) {
  require_order(a, 1);
  Report report("convolution", Json{{"a", a}, {"N", N}});
  QSeries total(RationalField{}, N);
  for (unsigned i = 0; i <= a; ++i) {
    QSeries u = i == 0 ? QSeries::one(RationalField{}, N) : mo_direct(i, N).series;
    QSeries v = i == a ? QSeries::one(RationalField{}, N) : m_direct(a - i, N).series;
    QSeries term = u * v;
    total = i % 2 == 0 ? total + term : total - term;
  }
  auto nz = total.valuation();
  Json detail = Json::object();
  if (nz) detail["first_nonzero"] = *nz;
  report.add("sum (-1)^i U_i U*_{a-i} = 0", !nz.has_value(), std::move(detail));
  return report;
}

Integer hook_limit_value(unsigned a, std::size_t n) {
  const std::size_t T = static_cast<std::size_t>(a) * (a + 1) / 2;
  if (n < T || n > T + a) {
    throw std::out_of_range("hook limit needs " + std::to_string(T) + " <= n <= " + std::to_string(T + a));
  }
  return colored3(static_cast<int>(n - T));
}

Report hook_limit_check(unsigned a_max) {
  Report report("hook-limit", Json{{"a_max", a_max}, {"partition_index", "n - a(a+1)/2"}});
  for (unsigned a = 1; a <= a_max; ++a) {
    const std::size_t T = static_cast<std::size_t>(a) * (a + 1) / 2;
    QSeries direct = mo_direct(a, T + a + 1).series;
    for (std::size_t n = T; n <= T + a; ++n) {
      Integer h = hook_limit_value(a, n);
      report.add("MO(" + std::to_string(a) + ";" + std::to_string(n) + ")", Rational(h) == direct[n],
                 Json{{"hook", exact_json(h)}, {"direct", exact_json(direct[n])}});
    }
  }
  return report;
}

Report limit_expansion_check(unsigned a, std::size_t N) {
  require_order(a, 1);
  Report report("limit-expansion", Json{{"a", a}, {"N", N}});
  const std::size_t T = static_cast<std::size_t>(a) * (a + 1) / 2;
  const QSeries shifted = shift_down(mo_direct(a, T + N).series, T);
  const QSeries lhs = shifted * euler_product(RationalField{}, N, 3);

  std::vector<Rational> c(N, Rational(0));
  for (std::size_t j = 0; a * j + j * (j + 1) / 2 < N; ++j) {
    Rational v = frac(static_cast<long>(2 * j + 2 * a + 1), 2 * a + 1) * Rational(binomial(static_cast<long>(j + 2 * a), static_cast<long>(j)));
    c[a * j + j * (j + 1) / 2] = j % 2 == 0 ? v : Rational(-v);
  }
  const QSeries rhs(RationalField{}, std::move(c));
  auto diff = first_difference(lhs, rhs);
  Json detail = Json::object();
  if (diff) detail["first_difference"] = *diff;
  report.add("closed sum", !diff.has_value(), std::move(detail));

  auto marker = [&](std::size_t e, const Rational& expected) {
    if (e >= N) return;
    report.add("marker q^" + std::to_string(e), lhs[e] == expected,
               Json{{"expected", exact_json(expected)}, {"found", exact_json(lhs[e])}});
  };
  marker(a + 1, Rational(-static_cast<long>(2 * a + 3)));
  marker(2 * a + 3, Rational(static_cast<long>((a + 1) * (2 * a + 5))));

  const std::size_t window = std::min<std::size_t>(a + 1, N);
  const QSeries p3 = euler_product(RationalField{}, window, -3);
  report.add("agrees with prod (1-q^n)^-3 below q^" + std::to_string(a + 1), agree(truncate(shifted, window), p3));
  return report;
}

namespace {

using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& f, const Poly& g) {
  Poly r(f.size() + g.size() - 1, Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
  }
  return r;
}

// C(2x + shift, k) as a polynomial in x.
Poly binomial_poly(long shift, long k) {
  if (k < 0) return Poly{Rational(0)};
  Poly r{Rational(1)};
  for (long i = 0; i < k; ++i) r = poly_mul(r, Poly{Rational(shift - i), Rational(2)});
  const Rational inv = Rational(1) / Rational(factorial(static_cast<unsigned long>(k)));
  for (auto& c : r) c *= inv;
  return r;
}

}  // namespace

std::vector<Rational> p_poly_coefficients(unsigned n) {
  const long N = n;
  Poly f = binomial_poly(N - 1, N);
  Poly g = binomial_poly(N - 2, N - 1);
  if (g.size() > f.size()) f.resize(g.size(), Rational(0));
  for (std::size_t i = 0; i < g.size(); ++i) f[i] += g[i];
  while (f.size() > 1 && sgn(f.back()) == 0) f.pop_back();
  return f;
}

Rational p_poly(unsigned n, const Rational& x) {
  Rational r(0);
  const auto c = p_poly_coefficients(n);
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

Integer m_closed_form(unsigned a, std::size_t n) {
  const long A = a, N = static_cast<long>(n);
  return binomial(A + N - 1, N - A) + binomial(A + N - 2, N - A - 1);
}

BivariateSeries::BivariateSeries(std::size_t s_degree, std::size_t q_precision)
    : q_precision_(q_precision), coeffs_(s_degree + 1, std::vector<Rational>(q_precision, Rational(0))) {}

BivariateSeries operator*(const BivariateSeries& f, const BivariateSeries& g) {
  const std::size_t A = std::min(f.s_degree(), g.s_degree());
  const std::size_t N = std::min(f.q_precision(), g.q_precision());
  BivariateSeries r(A, N);
  for (std::size_t a1 = 0; a1 <= A; ++a1) {
    for (std::size_t n1 = 0; n1 < N; ++n1) {
      const Rational& x = f.at(a1, n1);
      if (sgn(x) == 0) continue;
      for (std::size_t a2 = 0; a1 + a2 <= A; ++a2) {
        for (std::size_t n2 = 0; n1 + n2 < N; ++n2) {
          const Rational& y = g.at(a2, n2);
          if (sgn(y) != 0) r.at(a1 + a2, n1 + n2) += x * y;
        }
      }
    }
  }
  return r;
}

BivariateSeries BivariateSeries::inverse() const {
  if (q_precision_ == 0 || at(0, 0) != 1) throw NotAUnit("bivariate series must have constant term 1");
  // Write f = 1 - h with h vanishing at s = q = 0; the geometric series in h
  // terminates because h^k has total degree at least k.
  BivariateSeries h(s_degree(), q_precision_);
  for (std::size_t a = 0; a <= s_degree(); ++a) {
    for (std::size_t n = 0; n < q_precision_; ++n) h.at(a, n) = -at(a, n);
  }
  h.at(0, 0) = 0;
  BivariateSeries result(s_degree(), q_precision_), power(s_degree(), q_precision_);
  result.at(0, 0) = 1;
  power.at(0, 0) = 1;
  for (std::size_t k = 1; k <= s_degree() + q_precision_; ++k) {
    power = power * h;
    bool zero = true;
    for (std::size_t a = 0; a <= s_degree(); ++a) {
      for (std::size_t n = 0; n < q_precision_; ++n) {
        if (sgn(power.at(a, n)) != 0) {
          zero = false;
          result.at(a, n) += power.at(a, n);
        }
      }
    }
    if (zero) break;
  }
  return result;
}

Report bivariate_identity_check(unsigned A, std::size_t N) {
  if (A < 1 || N < 1) throw std::invalid_argument("bivariate_identity_check needs A >= 1 and N >= 1");
  Report report("bivariate", Json{{"A", A}, {"N", N}});
  BivariateSeries product(A, N);
  product.at(0, 0) = 1;
  for (std::size_t k = 1; k < N; ++k) {
    // 1 + 4 s q^k / (1 - q^k)^2 = 1 + 4 s sum_m m q^{mk}
    BivariateSeries factor(A, N);
    factor.at(0, 0) = 1;
    for (std::size_t m = 1; m * k < N; ++m) factor.at(1, m * k) = Rational(static_cast<long>(4 * m));
    product = product * factor;
  }
  const BivariateSeries reciprocal = product.inverse();
  for (unsigned a = 1; a <= A; ++a) {
    QSeries expected = scale(mo_direct(a, N).series, pow(Rational(4), a));
    report.add("s^" + std::to_string(a) + " of product", agree(product.row(a), expected));
    QSeries expected_star = scale(m_direct(a, N).series, pow(Rational(-4), a));
    report.add("s^" + std::to_string(a) + " of reciprocal", agree(reciprocal.row(a), expected_star));
  }
  return report;
}

}  // namespace qmac
