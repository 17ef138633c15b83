#include "qmac/eisenstein.hpp"

#include "qmac/partitions.hpp"

#include <mutex>
#include <stdexcept>

namespace qmac {

Rational bernoulli(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mutex);
  while (cache.size() <= n) {
    const unsigned m = static_cast<unsigned>(cache.size());
    Rational acc(0);
    for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[j];
    cache.push_back(-acc / Rational(m + 1));
  }
  return cache[n];
}

QSeries eisenstein(unsigned weight, std::size_t N) {
  if (weight < 2 || weight % 2 != 0) throw std::invalid_argument("Eisenstein weight must be even and >= 2");
  const Rational factor = -Rational(2 * weight) / bernoulli(weight);
  QSeries s = scale(sigma_series(weight - 1, N), factor);
  std::vector<Rational> c = s.coeffs();
  if (N > 0) c[0] = 1;
  return QSeries(RationalField{}, std::move(c));
}

Report ramanujan_check(std::size_t N) {
  if (N < 2) throw std::invalid_argument("ramanujan_check needs N >= 2");
  Report report("ramanujan", Json{{"N", N}});
  const QSeries e2 = eisenstein(2, N), e4 = eisenstein(4, N), e6 = eisenstein(6, N);
  auto record = [&](const std::string& label, const QSeries& lhs, const QSeries& rhs) {
    auto diff = first_difference(lhs, rhs);
    Json detail = Json::object();
    if (diff) detail["first_difference"] = *diff;
    report.add(label, !diff.has_value(), std::move(detail));
  };
  record("theta(E2) = (E2^2 - E4)/12", theta(e2), scale(e2 * e2 - e4, frac(1, 12)));
  record("theta(E4) = (E2 E4 - E6)/3", theta(e4), scale(e2 * e4 - e6, frac(1, 3)));
  record("theta(E6) = (E2 E6 - E4^2)/2", theta(e6), scale(e2 * e6 - e4 * e4, frac(1, 2)));
  return report;
}

std::map<Exponents, Rational> c_table(unsigned t_max) {
  std::map<Exponents, Rational> c;
  auto get = [&](long a, long b, long g) -> Rational {
    if (a < 0 || b < 0 || g < 0) return Rational(0);
    auto it = c.find({static_cast<unsigned>(a), static_cast<unsigned>(b), static_cast<unsigned>(g)});
    return it == c.end() ? Rational(0) : it->second;
  };
  c[{0, 0, 0}] = 1;
  // Every term on the right has total order t - 1, so filling by increasing t
  // only ever reads finished entries.
  for (unsigned t = 1; t <= t_max; ++t) {
    for (unsigned g = 0; 3 * g <= t; ++g) {
      for (unsigned b = 0; 2 * b + 3 * g <= t; ++b) {
        const long a = t - 2 * b - 3 * g;
        const long B = b, G = g;
        Rational v = -frac(2 * a + 8 * B + 12 * G + 1, 3) * get(a - 1, B, G) +
                     frac(2 * (a + 1), 3) * get(a + 1, B - 1, G) +
                     frac(8 * (B + 1), 3) * get(a, B + 1, G - 1) + Rational(4 * (G + 1)) * get(a, B - 2, G + 1);
        c[{static_cast<unsigned>(a), b, g}] = v;
      }
    }
  }
  return c;
}

Rational weight_constant(unsigned t, unsigned a) {
  if (t > a) throw std::out_of_range("w_t(a) needs t <= a");
  // e[k] = k-th elementary symmetric function of 1/1^2, ..., 1/(2a-1)^2.
  std::vector<Rational> e(t + 1, Rational(0));
  e[0] = 1;
  for (unsigned l = 0; l < a; ++l) {
    const Rational x = frac(1, static_cast<long>((2 * l + 1) * (2 * l + 1)));
    for (unsigned k = std::min(t, l + 1); k >= 1; --k) e[k] += e[k - 1] * x;
  }
  Rational pre(binomial(2 * static_cast<long>(a), a));
  pre /= pow(Rational(16), a) * (2 * a + 1);
  return pre * e[t];
}

namespace {

Rational w0_star_recursive(unsigned a, std::vector<Rational>& memo) {
  while (memo.size() <= a) {
    const unsigned m = static_cast<unsigned>(memo.size());
    Rational acc(0);
    for (unsigned i = 1; i <= m; ++i) {
      Rational term(binomial(2 * static_cast<long>(i), i));
      term /= pow(Rational(16), i) * (2 * i + 1);
      if (i % 2 == 0) term = -term;
      acc += term * memo[m - i];
    }
    memo.push_back(acc);
  }
  return memo[a];
}

}  // namespace

Rational weight_constant_star(unsigned t, unsigned a) {
  if (t > a) throw std::out_of_range("w*_t(a) needs t <= a");
  if (t == 0) {
    std::vector<Rational> memo{Rational(1)};
    return w0_star_recursive(a, memo);
  }
  Rational r = pow(Rational(4), t - 1) * Rational(factorial(2 * t - 1)) * weight_constant(t - 1, a - 1);
  return (a + t) % 2 == 0 ? r : Rational(-r);
}

ConstantTables::ConstantTables(unsigned a_max) : a_max_(a_max), c_(c_table(a_max)) {
  w_.resize(a_max + 1);
  w_star_.resize(a_max + 1);
  b_.resize(a_max + 1);
  std::vector<Rational> w0_star_memo{Rational(1)};
  for (unsigned a = 0; a <= a_max; ++a) {
    w_[a].resize(a + 1);
    w_star_[a].resize(a + 1);
    b_[a].resize(a + 1);
    for (unsigned t = 0; t <= a; ++t) {
      w_[a][t] = weight_constant(t, a);
      w_star_[a][t] = t == 0 ? w0_star_recursive(a, w0_star_memo) : weight_constant_star(t, a);
      if (a == 0) {
        b_[a][t] = 1;
      } else {
        auto prev = [&](long tt) { return tt < 0 || tt > static_cast<long>(a - 1) ? Rational(0) : b_[a - 1][tt]; };
        Rational lhs = Rational((2 * a - 1) * (2 * a - 1)) * prev(t) - Rational(8 * t * (2 * t + 1)) * prev(static_cast<long>(t) - 1);
        b_[a][t] = lhs / Rational(8 * a * (2 * a + 1));
      }
    }
  }
}

void ConstantTables::check(unsigned t, unsigned a) const {
  if (a > a_max_ || t > a) {
    throw std::out_of_range("constant (t=" + std::to_string(t) + ", a=" + std::to_string(a) + ") outside table");
  }
}

Rational ConstantTables::c(long alpha, long beta, long gamma) const {
  if (alpha < 0 || beta < 0 || gamma < 0) return Rational(0);
  auto it = c_.find({static_cast<unsigned>(alpha), static_cast<unsigned>(beta), static_cast<unsigned>(gamma)});
  return it == c_.end() ? Rational(0) : it->second;
}

Rational ConstantTables::w(unsigned t, unsigned a) const {
  check(t, a);
  return w_[a][t];
}

Rational ConstantTables::w_star(unsigned t, unsigned a) const {
  check(t, a);
  return w_star_[a][t];
}

Rational ConstantTables::b(long t, long a) const {
  if (t < 0 || a < 0 || t > a) return Rational(0);
  check(static_cast<unsigned>(t), static_cast<unsigned>(a));
  return b_[static_cast<std::size_t>(a)][static_cast<std::size_t>(t)];
}

Json ConstantTables::to_json() const {
  Json c = Json::array();
  for (const auto& [k, v] : c_) c.push_back({{"alpha", k[0]}, {"beta", k[1]}, {"gamma", k[2]}, {"value", to_string(v)}});
  auto table = [](const std::vector<std::vector<Rational>>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(to_string(v));
      out.push_back(std::move(r));
    }
    return out;
  };
  return Json{{"version", 1}, {"a_max", a_max_}, {"c", std::move(c)},
              {"w", table(w_)}, {"w_star", table(w_star_)}, {"b", table(b_)}};
}

ConstantTables ConstantTables::from_json(const Json& j) {
  if (j.value("version", 0) != 1) throw std::invalid_argument("unsupported constant table version");
  ConstantTables t;
  t.a_max_ = j.at("a_max").get<unsigned>();
  for (const auto& e : j.at("c")) {
    t.c_[{e.at("alpha").get<unsigned>(), e.at("beta").get<unsigned>(), e.at("gamma").get<unsigned>()}] =
        parse_rational(e.at("value").get<std::string>());
  }
  auto table = [&](const Json& rows) {
    std::vector<std::vector<Rational>> out;
    for (const auto& row : rows) {
      out.emplace_back();
      for (const auto& v : row) out.back().push_back(parse_rational(v.get<std::string>()));
    }
    if (out.size() != t.a_max_ + 1) throw std::invalid_argument("constant table has the wrong number of rows");
    for (std::size_t a = 0; a < out.size(); ++a) {
      if (out[a].size() != a + 1) throw std::invalid_argument("constant table row has the wrong length");
    }
    return out;
  };
  t.w_ = table(j.at("w"));
  t.w_star_ = table(j.at("w_star"));
  t.b_ = table(j.at("b"));
  return t;
}

QSeries script_E(unsigned t, std::size_t N) {
  const QSeries psi = psi_tilde(N);
  QSeries f = psi;
  for (unsigned i = 0; i < t; ++i) f = theta(f) + scale(f, frac(1, 8));
  return scale(f * invert(psi), pow(Rational(-8), t));
}

QuasimodularExpansion bbE_expansion(unsigned t, bool starred) {
  QuasimodularExpansion e(starred ? "bbE_star" : "bbE");
  if (t == 0) {
    e.add(EisensteinProduct(), Rational(1));
    return e;
  }
  for (const auto& lambda : enumerate_partitions(static_cast<int>(t))) {
    auto m = lambda.multiplicities();
    Rational coeff(1);
    EisensteinProduct product;
    for (unsigned j = 1; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      Rational base = bernoulli(2 * j) / (Rational(2 * j) * Rational(factorial(2 * j)));
      if (starred) base = -base;
      coeff *= pow(base, m[j]) / Rational(factorial(static_cast<unsigned long>(m[j])));
      product = product.times(2 * j, static_cast<unsigned>(m[j]));
    }
    e.add(product, coeff);
  }
  return e;
}

QSeries bbE(unsigned t, std::size_t N) { return expansion_eval(bbE_expansion(t, false), N); }

QSeries bbE_star(unsigned t, std::size_t N) { return expansion_eval(bbE_expansion(t, true), N); }

Report theta_bbE_check(unsigned t, std::size_t N) {
  if (t < 1) throw std::invalid_argument("theta_bbE_check needs t >= 1");
  Report report("theta-bbE", Json{{"t", t}, {"N", N}});
  const QSeries prev = bbE(t - 1, N);
  const QSeries rhs = scale(bbE(t, N), Rational(t * (2 * t + 1))) - scale(bbE(1, N) * prev, Rational(3));
  auto diff = first_difference(theta(prev), rhs);
  Json detail = Json::object();
  if (diff) detail["first_difference"] = *diff;
  report.add("theta(bbE_" + std::to_string(2 * t - 2) + ")", !diff.has_value(), std::move(detail));
  return report;
}

QuasimodularExpansion script_E_expansion(unsigned t, const ConstantTables& tables) {
  QuasimodularExpansion e("script_E");
  for (unsigned g = 0; 3 * g <= t; ++g) {
    for (unsigned b = 0; 2 * b + 3 * g <= t; ++b) {
      const unsigned a = t - 2 * b - 3 * g;
      e.add(EisensteinProduct::e246(a, b, g), tables.c(a, b, g));
    }
  }
  return e;
}

}  // namespace qmac
