// Bernoulli numbers, Eisenstein series and the constant tables behind the
// quasimodular expansions of the MacMahon series.
#pragma once

#include "qmac/quasimodular.hpp"
#include "qmac/report.hpp"
#include "qmac/series.hpp"

#include <array>
#include <map>
#include <vector>

namespace qmac {

/// B_n from sum_{j=0}^{n} C(n+1, j) B_j = 0 (so B_1 = -1/2). Cached behind a mutex.
Rational bernoulli(unsigned n);

/// E_{2k} = 1 - (4k / B_{2k}) sum sigma_{2k-1}(n) q^n, for k >= 1.
QSeries eisenstein(unsigned weight, std::size_t N);

/// Theta(E2) = (E2^2 - E4)/12, Theta(E4) = (E2 E4 - E6)/3, Theta(E6) = (E2 E6 - E4^2)/2.
Report ramanujan_check(std::size_t N);

using Exponents = std::array<unsigned, 3>;  // (alpha, beta, gamma)

/// c(alpha, beta, gamma) for alpha + 2 beta + 3 gamma <= t_max, seeded by
/// c(0,0,0) = 1 and filled in order of increasing t.
std::map<Exponents, Rational> c_table(unsigned t_max);

/// Exact constants for orders a <= a_max. Built once, then read-only.
class ConstantTables {
 public:
  explicit ConstantTables(unsigned a_max);

  unsigned a_max() const { return a_max_; }
  /// Zero off the cone alpha + 2 beta + 3 gamma <= a_max or for negative indices.
  Rational c(long alpha, long beta, long gamma) const;
  Rational w(unsigned t, unsigned a) const;
  Rational w_star(unsigned t, unsigned a) const;
  /// b(t, a) from its own recursion; equals (-4)^t (2t+1)! w(t, a).
  Rational b(long t, long a) const;

  const std::map<Exponents, Rational>& c_values() const { return c_; }

  Json to_json() const;
  static ConstantTables from_json(const Json& j);

 private:
  ConstantTables() = default;
  void check(unsigned t, unsigned a) const;

  unsigned a_max_ = 0;
  std::map<Exponents, Rational> c_;
  std::vector<std::vector<Rational>> w_, w_star_, b_;  // indexed [a][t]
};

/// w_t(a) = C(2a,a) / (16^a (2a+1)) * e_t(1/1^2, 1/3^2, ..., 1/(2a-1)^2).
Rational weight_constant(unsigned t, unsigned a);

/// Starred constants: w*_0 by its convolution recursion, and for t >= 1
/// w*_t(a) = (-1)^{a+t} 4^{t-1} (2t-1)! w_{t-1}(a-1).
Rational weight_constant_star(unsigned t, unsigned a);

/// (-8)^t (Theta + 1/8)^t (psi~) / psi~, i.e. (-8)^t Theta^t(eta^3) / eta^3.
QSeries script_E(unsigned t, std::size_t N);

/// Sum over (1^{m_1} ... t^{m_t}) |- t of prod (1/m_j!) (sign B_{2j} E_{2j} / ((2j)(2j)!))^{m_j},
/// with sign = +1 (unstarred) or -1 (starred).
QuasimodularExpansion bbE_expansion(unsigned t, bool starred);
QSeries bbE(unsigned t, std::size_t N);
QSeries bbE_star(unsigned t, std::size_t N);

/// Theta(bbE_{2t-2}) = t(2t+1) bbE_{2t} - 3 bbE_2 bbE_{2t-2}.
Report theta_bbE_check(unsigned t, std::size_t N);

/// sum_{alpha + 2 beta + 3 gamma = t} c(alpha, beta, gamma) E2^alpha E4^beta E6^gamma.
QuasimodularExpansion script_E_expansion(unsigned t, const ConstantTables& tables);

}  // namespace qmac
