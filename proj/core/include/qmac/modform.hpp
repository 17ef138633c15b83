// Modular forms modulo a prime p: q-expansions paired with a weight and the
// chain of operations that produced them.
#pragma once

#include "qmac/json.hpp"
#include "qmac/quasimodular.hpp"
#include "qmac/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qmac {

/// floor(k/12): a level-1 form of weight k vanishing mod p through q^{floor(k/12)} vanishes mod p.
std::size_t sturm_bound(unsigned k);

/// One node of the operation tree behind a ModularFormModP.
///   base:  a graded class sum, weight given explicitly
///   theta: input weight + p + 1
///   lift:  input weight + count (p - 1), multiplying by E_{p-1}^count
///   scale: input weight
///   sum:   all inputs share one weight
struct History {
  std::string op;
  Json params = Json::object();
  std::vector<History> inputs;

  Json to_json() const;
  static History from_json(const Json& j);
};

/// Recomputes the weight a history claims, throwing std::logic_error on an
/// inconsistent sum.
unsigned replay_weight(const History& h, std::uint64_t p);

struct ModularFormModP {
  std::uint64_t p;
  unsigned weight;
  ModSeries series;
  History history;
};

Json to_json(const ModularFormModP& f);

/// Summary of how the rational expansion was reduced.
struct GradingInfo {
  /// True when every monomial coefficient is p-integral, so substituting
  /// E_{p+1} for E_2 is exact mod p term by term.
  bool monomials_p_integral = true;
  /// Most negative p-adic valuation among the monomial coefficients (0 if integral).
  long min_coefficient_valuation = 0;
  /// The class sums with E_{p+1} and E_{p-1} substituted agree mod p with the
  /// E_2 class sums to the working precision.
  bool substitution_agrees = true;
};

/// Replaces E_2 by E_{p+1}, groups monomials by weight mod (p-1), lifts every
/// member of a class to the class's largest weight with powers of E_{p-1}
/// (which is 1 mod p) and reduces the class sum mod p. One form per class,
/// ordered by class. Requires p >= 5 prime; throws NonIntegralCoefficient if
/// a class sum is not p-integral.
std::vector<ModularFormModP> grade_mod_p(const QuasimodularExpansion& e, std::uint64_t p, std::size_t precision,
                                         GradingInfo* info = nullptr);

/// Weights grade_mod_p would assign, by class, without evaluating anything.
std::vector<std::pair<unsigned, unsigned>> graded_weights(const QuasimodularExpansion& e, std::uint64_t p);

ModularFormModP theta_modp(const ModularFormModP& f);

/// Multiplies the weight up by count (p - 1); the series is unchanged because E_{p-1} = 1 mod p.
ModularFormModP lift(const ModularFormModP& f, unsigned count);

/// Sum of forms; lifts every input to the largest weight. All weights must agree mod p - 1.
ModularFormModP sum_forms(const std::vector<ModularFormModP>& forms);

/// Coefficients c_k with 1 - (n - r)^{p-1} = sum_k c_k n^k mod p, i.e. the
/// indicator of n = r (mod p) as a combination of theta powers.
std::vector<std::uint64_t> projector_coefficients(std::uint64_t p, std::uint64_t r);

/// Pi_r(f) = sum_k c_k Theta^k(f). The terms fall into different weight classes
/// mod p - 1, so the result is one form per class, each lifted to its largest weight.
std::vector<ModularFormModP> projector(const ModularFormModP& f, std::uint64_t r);

/// Applies an arbitrary theta polynomial sum_k c_k Theta^k and regroups by class.
std::vector<ModularFormModP> theta_combination(const ModularFormModP& f, const std::vector<std::uint64_t>& coeffs);

/// Keeps the coefficients with exponent = r (mod p).
ModSeries project_series(const ModSeries& f, std::uint64_t r);

/// Regroups a list of forms by weight mod (p - 1) and sums each group. Ordered by class.
std::vector<ModularFormModP> regroup(const std::vector<ModularFormModP>& forms);

}  // namespace qmac
