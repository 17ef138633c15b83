// Congruences for MacMahon coefficients: Sturm-bound proofs, Hecke operators
// and empirical checks of the known families.
#pragma once

#include "qmac/macmahon.hpp"
#include "qmac/modform.hpp"
#include "qmac/report.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qmac {

enum class Verdict { Proven, Inconclusive, CounterexampleFound };
std::string to_string(Verdict v);

struct CertificatePiece {
  unsigned weight;
  std::size_t sturm_bound;
  std::size_t checked_coefficients;
  bool all_zero;
  /// First nonzero exponent among the checked coefficients.
  std::optional<std::size_t> first_nonzero;
  History history;
};

struct CongruenceCertificate {
  Family family;
  unsigned a;
  std::uint64_t p;
  std::uint64_t r;
  std::size_t precision;
  std::vector<std::pair<unsigned, unsigned>> graded;  // (class, weight)
  GradingInfo grading;
  std::vector<CertificatePiece> pieces;
  Verdict verdict = Verdict::Inconclusive;
  /// Set for CounterexampleFound: n and the exact value of the coefficient.
  std::optional<std::size_t> counterexample;
  std::optional<Integer> counterexample_value;
  std::size_t guard_n = 0;
  /// Whether every coefficient in the progression up to guard_n vanished mod p.
  bool guard_passed = true;

  std::vector<unsigned> final_weights() const;
  Json to_json() const;
};

/// Proves MO(a; pn + r) = 0 (mod p), or M(...) for family M, when every piece
/// of the projected expansion vanishes through its Sturm bound. Otherwise the
/// progression is scanned to guard_n and the verdict is CounterexampleFound or
/// Inconclusive. The working precision is derived from the largest final weight.
CongruenceCertificate prove_progression(Family family, unsigned a, std::uint64_t p, std::uint64_t r,
                                        std::size_t guard_n);

/// b(n) = a(pn) + p^{k-1} a(n/p), the second term only when p | n, reduced mod m.
/// Output precision is ceil(precision / p).
template <class Ring>
Series<Ring> hecke_tp(const Series<Ring>& f, unsigned k, std::uint64_t p) {
  const auto& R = f.ring();
  Series<Ring> up = u_operator(f, p);
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, k - 1);
  const auto factor = R.from_integer(pk);
  std::vector<typename Ring::value_type> c = up.coeffs();
  for (std::size_t n = 0; n < c.size(); n += p) R.fma(c[n], factor, f[n / p]);
  return Series<Ring>(R, std::move(c));
}

ModSeries hecke_tp(const QSeries& f, unsigned k, std::uint64_t p, std::uint64_t modulus);

/// Delta(q)^2 = q^2 prod (1 - q^n)^48.
QSeries delta_squared(std::size_t N);

/// For l in {3, 11, 17} and a = l - 1 (mod l): the single-sum terms vanish mod l
/// unless l | n(n+1)/2, U_a prod(1-q^n)^3 is supported on multiples of l mod l,
/// and the resulting progressions of MO(a; .) vanish mod l up to N.
Report gordon_collapse(unsigned l, unsigned a, std::size_t N);

/// c_3 congruences mod 3, 11 and 17, including Delta^2 | T_17 = 0 (mod 17).
Report c3_congruence_checks(std::size_t N);

/// N_a from the sigma expansions of U_2 ... U_5.
Integer corollary_denominator(unsigned a);

/// U_a = (1/N_a) sum_n [sum_k P_k(n) sigma_k(n)] q^n for a in 2..5, exact.
QSeries sigma_expansion(unsigned a, std::size_t N);

/// Checks the sigma expansion of U_a against the direct sum (exactly, up to
/// min(N, exact_terms)) and MO(a; pn) = 0 (mod l) for pn <= N, gcd(n, p) = 1.
/// Throws std::invalid_argument if (l, p) fails the corollary's hypothesis.
Report corollary_check(unsigned a, std::uint64_t l, std::uint64_t p, std::size_t N, std::size_t exact_terms = 100);

/// E_2 against the combination of E_k | V_{p^{i-1}} mod p^m, to N coefficients.
/// Also records whether the variant with V_{p^{m-1}} in every term holds.
Report lemma2_check(std::uint64_t p, unsigned m, std::size_t N);

struct ScanCandidate {
  std::uint64_t t;
  std::uint64_t r;
  std::size_t n_max_checked;
};

/// Every progression tn + r (t <= l^2, 0 <= r < t) whose in-range coefficients
/// up to N all vanish mod l. Unless include_nested, a progression contained in
/// an earlier candidate is dropped. Empirical only.
std::vector<ScanCandidate> scan(Family family, unsigned a, std::uint64_t l, std::size_t N, bool include_nested = false);

}  // namespace qmac
