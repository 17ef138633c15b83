#include "qmac/series.hpp"

#include "qmac/json.hpp"

#include <limits>
#include <numeric>

namespace qmac {

CoefficientRing CoefficientRing::integers_mod(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("IntegerMod requires modulus >= 2");
  return {RingKind::IntegerMod, m};
}

std::string CoefficientRing::name() const {
  if (kind == RingKind::ExactRational) return "ExactRational";
  return "IntegerMod(" + std::to_string(modulus) + ")";
}

RingMismatch::RingMismatch(const CoefficientRing& a, const CoefficientRing& b)
    : std::invalid_argument("ring mismatch: " + a.name() + " vs " + b.name()) {}

NonIntegralCoefficient::NonIntegralCoefficient(std::size_t exponent, Integer denominator, std::uint64_t modulus)
    : std::domain_error("coefficient of q^" + std::to_string(exponent) + " has denominator " +
                        denominator.get_str() + ", not invertible mod " + std::to_string(modulus)),
      exponent_(exponent),
      denominator_(std::move(denominator)),
      modulus_(modulus) {}

IntegersMod::IntegersMod(std::uint64_t modulus) : m_(modulus) {
  if (modulus < 2) throw std::invalid_argument("IntegerMod requires modulus >= 2");
}

IntegersMod::value_type IntegersMod::from_integer(const Integer& v) const {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(v.get_mpz_t(), m_);
}

IntegersMod::value_type IntegersMod::from_rational(const Rational& v) const {
  if (mpz_gcd_ui(nullptr, v.get_den_mpz_t(), m_) != 1) throw NonIntegralCoefficient(0, Integer(v.get_den()), m_);
  return mul(from_integer(Integer(v.get_num())), inverse(from_integer(Integer(v.get_den()))));
}

bool IntegersMod::is_unit(value_type a) const { return std::gcd(a, m_) == 1; }

IntegersMod::value_type IntegersMod::inverse(value_type a) const {
  // extended Euclid on signed 128-bit values
  int128 t = 0, new_t = 1;
  int128 r = m_, new_r = a;
  while (new_r != 0) {
    int128 q = r / new_r;
    int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw NotAUnit(std::to_string(a) + " is not a unit mod " + std::to_string(m_));
  if (t < 0) t += m_;
  return static_cast<value_type>(t);
}

IntegersMod::value_type IntegersMod::pow(value_type base, std::uint64_t exponent) const {
  value_type result = one();
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1U;
  }
  return result;
}

QSeries sigma_series(unsigned nu, std::size_t precision) { return sigma_series(RationalField{}, nu, precision); }

QSeries psi_tilde(std::size_t precision) { return psi_tilde(RationalField{}, precision); }

ModSeries reduce_mod(const QSeries& f, std::uint64_t modulus) {
  IntegersMod ring(modulus);
  std::vector<std::uint64_t> c(f.precision());
  for (std::size_t n = 0; n < c.size(); ++n) {
    try {
      c[n] = ring.from_rational(f[n]);
    } catch (const NonIntegralCoefficient& e) {
      throw NonIntegralCoefficient(n, e.denominator(), modulus);
    }
  }
  return ModSeries(ring, std::move(c));
}

QSeries exp_series(const QSeries& h) {
  std::size_t n = h.precision();
  if (n == 0) return h;
  if (sgn(h[0]) != 0) throw std::domain_error("exp_series needs a zero constant term");
  // g' = h' g  =>  k g_k = sum_{i=1}^{k} i h_i g_{k-i}
  std::vector<Rational> g(n, Rational(0));
  g[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc(0);
    for (std::size_t i = 1; i <= k; ++i) {
      if (sgn(h[i]) != 0) acc += Rational(static_cast<long>(i)) * h[i] * g[k - i];
    }
    g[k] = acc / Rational(static_cast<long>(k));
  }
  return QSeries(RationalField{}, std::move(g));
}

QSeries lift(const ModSeries& f) {
  std::vector<Rational> c(f.precision());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = Rational(static_cast<unsigned long>(f[n]));
  return QSeries(RationalField{}, std::move(c));
}

Json exact_json(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t()) != 0) return Json(x.get_si());
  return Json(x.get_str());
}

Json exact_json(const Rational& x) {
  if (x.get_den() == 1) return exact_json(Integer(x.get_num()));
  return Json(to_string(x));
}

Json to_json(const QSeries& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(exact_json(c));
  return Json{{"ring", "ExactRational"}, {"precision", f.precision()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const ModSeries& f) {
  Json coeffs = Json::array();
  for (auto c : f.coeffs()) coeffs.push_back(c);
  return Json{{"ring", "IntegerMod"},
              {"modulus", f.ring().modulus()},
              {"precision", f.precision()},
              {"coeffs", std::move(coeffs)}};
}

namespace {

Rational rational_from_json(const Json& v) {
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or a \"p/q\" string");
}

void check_shape(const Json& j, const char* ring) {
  if (j.at("ring").get<std::string>() != ring) throw std::invalid_argument(std::string("expected ring ") + ring);
  if (j.at("coeffs").size() != j.at("precision").get<std::size_t>()) {
    throw std::invalid_argument("coeffs length does not match precision");
  }
}

}  // namespace

QSeries qseries_from_json(const Json& j) {
  check_shape(j, "ExactRational");
  std::vector<Rational> c;
  for (const auto& v : j.at("coeffs")) c.push_back(rational_from_json(v));
  return QSeries(RationalField{}, std::move(c));
}

ModSeries modseries_from_json(const Json& j) {
  check_shape(j, "IntegerMod");
  IntegersMod ring(j.at("modulus").get<std::uint64_t>());
  std::vector<std::uint64_t> c;
  for (const auto& v : j.at("coeffs")) {
    auto x = v.get<std::uint64_t>();
    if (x >= ring.modulus()) throw std::invalid_argument("residue out of range");
    c.push_back(x);
  }
  return ModSeries(ring, std::move(c));
}

}  // namespace qmac
