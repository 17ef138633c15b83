#include "qmac/modform.hpp"

#include "qmac/eisenstein.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qmac {

std::size_t sturm_bound(unsigned k) { return k / 12; }

Json History::to_json() const {
  Json j{{"op", op}, {"params", params}};
  if (!inputs.empty()) {
    Json in = Json::array();
    for (const auto& h : inputs) in.push_back(h.to_json());
    j["inputs"] = std::move(in);
  }
  return j;
}

History History::from_json(const Json& j) {
  History h{j.at("op").get<std::string>(), j.value("params", Json::object()), {}};
  for (const auto& in : j.value("inputs", Json::array())) h.inputs.push_back(from_json(in));
  return h;
}

unsigned replay_weight(const History& h, std::uint64_t p) {
  auto only_input = [&]() -> const History& {
    if (h.inputs.size() != 1) throw std::logic_error("history op '" + h.op + "' needs exactly one input");
    return h.inputs.front();
  };
  if (h.op == "grade") return h.params.at("weight").get<unsigned>();
  if (h.op == "theta") return replay_weight(only_input(), p) + static_cast<unsigned>(p) + 1;
  if (h.op == "lift") return replay_weight(only_input(), p) + h.params.at("count").get<unsigned>() * static_cast<unsigned>(p - 1);
  if (h.op == "scale") return replay_weight(only_input(), p);
  if (h.op == "sum") {
    if (h.inputs.empty()) throw std::logic_error("empty sum in history");
    unsigned w = replay_weight(h.inputs.front(), p);
    for (const auto& in : h.inputs) {
      if (replay_weight(in, p) != w) throw std::logic_error("sum of forms with different weights");
    }
    return w;
  }
  throw std::logic_error("unknown history op '" + h.op + "'");
}

Json to_json(const ModularFormModP& f) {
  return Json{{"p", f.p}, {"weight", f.weight}, {"series", to_json(f.series)}, {"history", f.history.to_json()}};
}

namespace {

void require_grading_prime(std::uint64_t p) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("grading mod p needs a prime p >= 5");
}

// Weight of a monomial after E_2 -> E_{p+1}.
unsigned substituted_weight(const EisensteinProduct& m, std::uint64_t p) {
  return m.weight() + m.alpha() * static_cast<unsigned>(p - 1);
}

struct ClassData {
  unsigned weight = 0;
  QuasimodularExpansion members;
};

std::map<unsigned, ClassData> classify(const QuasimodularExpansion& e, std::uint64_t p) {
  std::map<unsigned, ClassData> classes;
  for (const auto& term : e.terms()) {
    const unsigned w = substituted_weight(term.product, p);
    auto& c = classes[w % static_cast<unsigned>(p - 1)];
    c.weight = std::max(c.weight, w);
    c.members.add(term.product, term.coeff);
  }
  return classes;
}

}  // namespace

std::vector<std::pair<unsigned, unsigned>> graded_weights(const QuasimodularExpansion& e, std::uint64_t p) {
  require_grading_prime(p);
  std::vector<std::pair<unsigned, unsigned>> out;
  for (const auto& [cls, data] : classify(e, p)) out.emplace_back(cls, data.weight);
  return out;
}

std::vector<ModularFormModP> grade_mod_p(const QuasimodularExpansion& e, std::uint64_t p, std::size_t precision,
                                         GradingInfo* info) {
  require_grading_prime(p);
  const unsigned pu = static_cast<unsigned>(p);
  std::vector<ModularFormModP> out;
  if (info) *info = GradingInfo{};
  for (const auto& [cls, data] : classify(e, p)) {
    ModSeries reduced = reduce_mod(expansion_eval(data.members, precision), p);
    if (info) {
      QuasimodularExpansion substituted;
      for (const auto& term : data.members.terms()) {
        if (sgn(term.coeff) != 0) {
          long v = valuation(term.coeff, pu);
          info->min_coefficient_valuation = std::min(info->min_coefficient_valuation, v);
          if (v < 0) info->monomials_p_integral = false;
        }
        EisensteinProduct m;
        for (auto [index, mult] : term.product.powers()) m = m.times(index == 2 ? pu + 1 : index, mult);
        const unsigned lift_count = (data.weight - substituted_weight(term.product, p)) / (pu - 1);
        substituted.add(m.times(pu - 1, lift_count), term.coeff);
      }
      try {
        ModSeries exact = reduce_mod(expansion_eval(substituted, precision), p);
        if (!(exact == reduced)) info->substitution_agrees = false;
      } catch (const NonIntegralCoefficient&) {
        info->substitution_agrees = false;
      }
    }
    History h{"grade", Json{{"class", cls}, {"weight", data.weight}, {"monomials", data.members.size()}}, {}};
    out.push_back({p, data.weight, std::move(reduced), std::move(h)});
  }
  return out;
}

ModularFormModP theta_modp(const ModularFormModP& f) {
  return {f.p, f.weight + static_cast<unsigned>(f.p) + 1, theta(f.series), History{"theta", Json::object(), {f.history}}};
}

ModularFormModP lift(const ModularFormModP& f, unsigned count) {
  if (count == 0) return f;
  return {f.p, f.weight + count * static_cast<unsigned>(f.p - 1), f.series,
          History{"lift", Json{{"count", count}}, {f.history}}};
}

ModularFormModP sum_forms(const std::vector<ModularFormModP>& forms) {
  if (forms.empty()) throw std::invalid_argument("cannot sum an empty list of forms");
  const std::uint64_t p = forms.front().p;
  const unsigned step = static_cast<unsigned>(p - 1);
  unsigned W = 0;
  for (const auto& f : forms) {
    if (f.p != p) throw std::invalid_argument("forms modulo different primes");
    if (f.weight % step != forms.front().weight % step) throw std::invalid_argument("forms in different weight classes");
    W = std::max(W, f.weight);
  }
  if (forms.size() == 1) return forms.front();
  ModSeries total(IntegersMod(p), forms.front().series.precision());
  History h{"sum", Json::object(), {}};
  for (const auto& f : forms) {
    ModularFormModP lifted = lift(f, (W - f.weight) / step);
    total = total + lifted.series;
    h.inputs.push_back(std::move(lifted.history));
  }
  return {p, W, std::move(total), std::move(h)};
}

std::vector<std::uint64_t> projector_coefficients(std::uint64_t p, std::uint64_t r) {
  if (!is_prime(p)) throw std::invalid_argument("projector needs a prime modulus");
  if (r >= p) throw std::invalid_argument("projector residue must satisfy 0 <= r < p");
  const IntegersMod R(p);
  std::vector<std::uint64_t> c(p, 0);
  const auto minus_r = R.neg(R.from_int(static_cast<long long>(r)));
  for (std::uint64_t k = 0; k < p; ++k) {
    auto binom = R.from_integer(binomial(static_cast<long>(p - 1), static_cast<long>(k)));
    c[k] = R.neg(R.mul(binom, R.pow(minus_r, p - 1 - k)));
  }
  c[0] = R.add(c[0], 1);
  return c;
}

std::vector<ModularFormModP> theta_combination(const ModularFormModP& f, const std::vector<std::uint64_t>& coeffs) {
  const IntegersMod R(f.p);
  std::vector<ModularFormModP> terms;
  ModularFormModP current = f;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) current = theta_modp(current);
    const auto c = R.from_int(static_cast<long long>(coeffs[k] % f.p));
    if (c == 0) continue;
    terms.push_back({f.p, current.weight, scale(current.series, c),
                     History{"scale", Json{{"factor", c}}, {current.history}}});
  }
  if (terms.empty()) {
    // The zero combination; keep one explicit zero form in f's class.
    return {{f.p, f.weight, ModSeries(R, f.series.precision()), History{"scale", Json{{"factor", 0}}, {f.history}}}};
  }
  return regroup(terms);
}

std::vector<ModularFormModP> projector(const ModularFormModP& f, std::uint64_t r) {
  return theta_combination(f, projector_coefficients(f.p, r));
}

ModSeries project_series(const ModSeries& f, std::uint64_t r) {
  const std::uint64_t p = f.ring().modulus();
  std::vector<std::uint64_t> c(f.precision(), 0);
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (n % p == r % p) c[n] = f[n];
  }
  return ModSeries(f.ring(), std::move(c));
}

std::vector<ModularFormModP> regroup(const std::vector<ModularFormModP>& forms) {
  std::map<unsigned, std::vector<ModularFormModP>> groups;
  for (const auto& f : forms) groups[f.weight % static_cast<unsigned>(f.p - 1)].push_back(f);
  std::vector<ModularFormModP> out;
  for (auto& [cls, group] : groups) out.push_back(sum_forms(group));
  return out;
}

}  // namespace qmac
