#include "qmac/quasimodular.hpp"

#include "qmac/eisenstein.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qmac {

EisensteinProduct EisensteinProduct::e246(unsigned alpha, unsigned beta, unsigned gamma) {
  return EisensteinProduct().times(2, alpha).times(4, beta).times(6, gamma);
}

unsigned EisensteinProduct::power(unsigned index) const {
  auto it = powers_.find(index);
  return it == powers_.end() ? 0 : it->second;
}

std::map<unsigned, unsigned> EisensteinProduct::general_factors() const {
  return {powers_.lower_bound(8), powers_.end()};
}

unsigned EisensteinProduct::weight() const {
  unsigned w = 0;
  for (auto [index, mult] : powers_) w += index * mult;
  return w;
}

EisensteinProduct EisensteinProduct::times(unsigned index, unsigned multiplicity) const {
  if (index == 0 || index % 2 != 0) throw std::invalid_argument("Eisenstein index must be positive and even");
  EisensteinProduct r = *this;
  if (multiplicity > 0) r.powers_[index] += multiplicity;
  return r;
}

EisensteinProduct EisensteinProduct::operator*(const EisensteinProduct& other) const {
  EisensteinProduct r = *this;
  for (auto [index, mult] : other.powers_) r.powers_[index] += mult;
  return r;
}

std::string EisensteinProduct::to_string() const {
  if (powers_.empty()) return "1";
  std::string s;
  for (auto [index, mult] : powers_) {
    if (!s.empty()) s += "*";
    s += "E" + std::to_string(index);
    if (mult > 1) s += "^" + std::to_string(mult);
  }
  return s;
}

void QuasimodularExpansion::add(const EisensteinProduct& product, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(product, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void QuasimodularExpansion::add(const QuasimodularExpansion& other, const Rational& factor) {
  for (const auto& [product, coeff] : other.terms_) add(product, coeff * factor);
}

std::vector<QuasimodularMonomial> QuasimodularExpansion::terms() const {
  std::vector<QuasimodularMonomial> out;
  out.reserve(terms_.size());
  for (const auto& [product, coeff] : terms_) out.push_back({coeff, product});
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.product.weight() < y.product.weight();
  });
  return out;
}

Rational QuasimodularExpansion::coefficient(const EisensteinProduct& product) const {
  auto it = terms_.find(product);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned QuasimodularExpansion::max_weight() const {
  unsigned w = 0;
  for (const auto& [product, coeff] : terms_) w = std::max(w, product.weight());
  return w;
}

QuasimodularExpansion operator*(const QuasimodularExpansion& f, const QuasimodularExpansion& g) {
  QuasimodularExpansion r(f.provenance());
  for (const auto& x : f.terms()) {
    for (const auto& y : g.terms()) r.add(x.product * y.product, x.coeff * y.coeff);
  }
  return r;
}

QSeries expansion_eval(const QuasimodularExpansion& e, std::size_t N) {
  // Powers of each E_{2j} are shared across monomials within one call.
  std::map<std::pair<unsigned, unsigned>, QSeries> powers;
  std::function<const QSeries&(unsigned, unsigned)> power_of = [&](unsigned index, unsigned mult) -> const QSeries& {
    auto key = std::make_pair(index, mult);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    QSeries value = mult == 1 ? eisenstein(index, N) : mul(power_of(index, mult - 1), power_of(index, 1));
    return powers.emplace(key, std::move(value)).first->second;
  };

  std::vector<Rational> acc(N, Rational(0));
  for (const auto& term : e.terms()) {
    QSeries m = QSeries::one(RationalField{}, N);
    for (auto [index, mult] : term.product.powers()) m = mul(m, power_of(index, mult));
    for (std::size_t n = 0; n < N; ++n) acc[n] += term.coeff * m[n];
  }
  for (auto& c : acc) c.canonicalize();
  return QSeries(RationalField{}, std::move(acc));
}

Json to_json(const QuasimodularExpansion& e) {
  Json out = Json::array();
  for (const auto& term : e.terms()) {
    Json factors = Json::array();
    for (auto [index, mult] : term.product.general_factors()) factors.push_back({{"index", index}, {"mult", mult}});
    out.push_back({{"alpha", term.product.alpha()},
                   {"beta", term.product.beta()},
                   {"gamma", term.product.gamma()},
                   {"factors", std::move(factors)},
                   {"coeff", exact_json(term.coeff)}});
  }
  return out;
}

QuasimodularExpansion expansion_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expansion JSON must be an array");
  QuasimodularExpansion e;
  for (const auto& item : j) {
    EisensteinProduct p = EisensteinProduct::e246(item.at("alpha").get<unsigned>(), item.at("beta").get<unsigned>(),
                                                   item.at("gamma").get<unsigned>());
    for (const auto& f : item.value("factors", Json::array())) {
      p = p.times(f.at("index").get<unsigned>(), f.at("mult").get<unsigned>());
    }
    const auto& c = item.at("coeff");
    Rational coeff = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
    e.add(p, coeff);
  }
  return e;
}

}  // namespace qmac
