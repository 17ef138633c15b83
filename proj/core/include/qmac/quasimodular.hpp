// Rational linear combinations of products of Eisenstein series.
#pragma once

#include "qmac/json.hpp"
#include "qmac/series.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qmac {

/// E_2^alpha E_4^beta E_6^gamma times higher E_{2j}^{m_j}. Keys are the even
/// Eisenstein indices 2j; zero multiplicities are never stored.
class EisensteinProduct {
 public:
  EisensteinProduct() = default;
  static EisensteinProduct e246(unsigned alpha, unsigned beta, unsigned gamma);

  unsigned power(unsigned index) const;
  unsigned alpha() const { return power(2); }
  unsigned beta() const { return power(4); }
  unsigned gamma() const { return power(6); }
  /// Factors E_{2j} with 2j >= 8, as (2j, multiplicity).
  std::map<unsigned, unsigned> general_factors() const;
  const std::map<unsigned, unsigned>& powers() const { return powers_; }

  unsigned weight() const;
  EisensteinProduct times(unsigned index, unsigned multiplicity = 1) const;
  EisensteinProduct operator*(const EisensteinProduct& other) const;

  std::string to_string() const;

  auto operator<=>(const EisensteinProduct&) const = default;

 private:
  std::map<unsigned, unsigned> powers_;
};

struct QuasimodularMonomial {
  Rational coeff;
  EisensteinProduct product;
};

/// Sum of monomials with distinct products and nonzero coefficients.
class QuasimodularExpansion {
 public:
  QuasimodularExpansion() = default;
  explicit QuasimodularExpansion(std::string provenance) : provenance_(std::move(provenance)) {}

  void add(const EisensteinProduct& product, const Rational& coeff);
  void add(const QuasimodularExpansion& other, const Rational& factor = Rational(1));

  /// Sorted by weight, then by product.
  std::vector<QuasimodularMonomial> terms() const;
  Rational coefficient(const EisensteinProduct& product) const;
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  unsigned max_weight() const;

  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  bool operator==(const QuasimodularExpansion& other) const { return terms_ == other.terms_; }

 private:
  std::map<EisensteinProduct, Rational> terms_;
  std::string provenance_;
};

QuasimodularExpansion operator*(const QuasimodularExpansion& f, const QuasimodularExpansion& g);

/// Substitutes the Eisenstein series to precision N and sums.
QSeries expansion_eval(const QuasimodularExpansion& e, std::size_t N);

/// Lists of {alpha, beta, gamma, factors, coeff}.
Json to_json(const QuasimodularExpansion& e);
QuasimodularExpansion expansion_from_json(const Json& j);

}  // namespace qmac
