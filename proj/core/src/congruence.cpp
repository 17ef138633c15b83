#include "qmac/congruence.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace qmac {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Proven: return "Proven";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::CounterexampleFound: return "CounterexampleFound";
  }
  return "unknown";
}

std::vector<unsigned> CongruenceCertificate::final_weights() const {
  std::vector<unsigned> w;
  for (const auto& piece : pieces) w.push_back(piece.weight);
  return w;
}

Json CongruenceCertificate::to_json() const {
  const std::string name = family == Family::MO ? "MO" : "M";
  Json graded_json = Json::array();
  for (auto [cls, w] : graded) graded_json.push_back({{"class", cls}, {"weight", w}});
  Json pieces_json = Json::array();
  for (const auto& piece : pieces) {
    Json j{{"weight", piece.weight},
           {"sturm_bound", piece.sturm_bound},
           {"checked_coefficients", piece.checked_coefficients},
           {"all_zero", piece.all_zero}};
    if (piece.first_nonzero) j["first_nonzero"] = *piece.first_nonzero;
    j["history"] = piece.history.to_json();
    pieces_json.push_back(std::move(j));
  }
  Json out{{"schema", "v1"},
           {"claim",
            {{"family", qmac::to_string(family)},
             {"a", a},
             {"modulus", p},
             {"r", r},
             {"statement", name + "(" + std::to_string(a) + "; " + std::to_string(p) + "n + " + std::to_string(r) +
                               ") = 0 (mod " + std::to_string(p) + ")"}}},
           {"precision", precision},
           {"graded", std::move(graded_json)},
           {"grading",
            {{"monomials_p_integral", grading.monomials_p_integral},
             {"min_coefficient_valuation", grading.min_coefficient_valuation},
             {"substitution_agrees", grading.substitution_agrees}}},
           {"pieces", std::move(pieces_json)},
           {"verdict", qmac::to_string(verdict)}};
  if (counterexample) {
    out["counterexample"] = {{"n", *counterexample}, {"value", exact_json(*counterexample_value)}};
  }
  out["guard"] = {{"n_max", guard_n}, {"passed", guard_passed}};
  return out;
}

namespace {

ModSeries direct_mod(Family family, unsigned a, std::size_t N, std::uint64_t modulus) {
  return family == Family::MO ? mo_direct_mod(a, N, modulus) : m_direct_mod(a, N, modulus);
}

}  // namespace

CongruenceCertificate prove_progression(Family family, unsigned a, std::uint64_t p, std::uint64_t r,
                                        std::size_t guard_n) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("prove_progression needs a prime modulus >= 5");
  if (r >= p) throw std::invalid_argument("progression residue must satisfy 0 <= r < p");
  if (a < 1) throw std::invalid_argument("order a must be >= 1");

  CongruenceCertificate cert;
  cert.family = family;
  cert.a = a;
  cert.p = p;
  cert.r = r;
  cert.guard_n = guard_n;

  const ConstantTables tables(a);
  const QuasimodularExpansion e = family == Family::MO ? mo_expansion(a, tables) : m_expansion(a, tables);
  cert.graded = graded_weights(e, p);
  unsigned max_graded = 0;
  for (auto [cls, w] : cert.graded) max_graded = std::max(max_graded, w);
  // Theta^k adds k(p+1) with k <= p-1, and regrouping lifts only up to the
  // largest weight already present, so this bounds every final weight.
  const unsigned weight_bound = max_graded + static_cast<unsigned>((p - 1) * (p + 1));
  cert.precision = sturm_bound(weight_bound) + 1;

  const auto graded = grade_mod_p(e, p, cert.precision, &cert.grading);
  std::vector<ModularFormModP> projected;
  for (const auto& piece : graded) {
    for (auto& f : projector(piece, r)) projected.push_back(std::move(f));
  }
  bool all_zero = true;
  for (const auto& f : regroup(projected)) {
    if (replay_weight(f.history, p) != f.weight) throw std::logic_error("weight bookkeeping mismatch");
    CertificatePiece piece{f.weight, sturm_bound(f.weight), sturm_bound(f.weight) + 1, true, std::nullopt, f.history};
    if (f.series.precision() < piece.checked_coefficients) throw std::logic_error("working precision below Sturm bound");
    for (std::size_t n = 0; n < piece.checked_coefficients; ++n) {
      if (f.series[n] != 0) {
        piece.all_zero = false;
        piece.first_nonzero = n;
        break;
      }
    }
    all_zero = all_zero && piece.all_zero;
    cert.pieces.push_back(std::move(piece));
  }

  std::optional<std::size_t> first_bad;
  if (guard_n > 0) {
    const ModSeries values = direct_mod(family, a, guard_n + 1, p);
    for (std::size_t n = r; n <= guard_n; n += p) {
      if (values[n] != 0) {
        first_bad = n;
        break;
      }
    }
  }
  cert.guard_passed = !first_bad.has_value();

  if (all_zero) {
    if (first_bad) throw std::logic_error("Sturm certificate contradicts the direct coefficients");
    cert.verdict = Verdict::Proven;
  } else if (first_bad) {
    const Integer value = coefficient(family, a, *first_bad);
    if (mpz_divisible_ui_p(value.get_mpz_t(), p)) throw std::logic_error("modular and exact coefficients disagree");
    cert.verdict = Verdict::CounterexampleFound;
    cert.counterexample = first_bad;
    cert.counterexample_value = value;
  } else {
    cert.verdict = Verdict::Inconclusive;
  }
  return cert;
}

ModSeries hecke_tp(const QSeries& f, unsigned k, std::uint64_t p, std::uint64_t modulus) {
  return hecke_tp(reduce_mod(f, modulus), k, p);
}

QSeries delta_squared(std::size_t N) { return shift_up(euler_product(RationalField{}, N, 48), 2); }

namespace {

// (2n+1)(n+a)! / ((2a+1)! (n-a)!), the magnitude of the single-sum coefficient.
Integer single_sum_term(unsigned a, std::size_t n) {
  if (n < a) return Integer(0);
  Integer num(static_cast<unsigned long>(2 * n + 1));
  for (std::size_t i = n - a + 1; i <= n + a; ++i) num *= static_cast<unsigned long>(i);
  Integer den = factorial(2 * a + 1);
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return num;
}

void check_progressions(Report& report, const ModSeries& values, std::uint64_t l, const std::vector<std::uint64_t>& residues,
                        const std::string& what) {
  for (auto r : residues) {
    std::optional<std::size_t> bad;
    std::size_t checked = 0;
    for (std::size_t n = r; n < values.precision(); n += l) {
      ++checked;
      if (values[n] != 0) {
        bad = n;
        break;
      }
    }
    Json detail{{"checked", checked}};
    if (bad) detail["first_failure"] = *bad;
    report.add(what + "(" + std::to_string(l) + "n+" + std::to_string(r) + ") = 0 mod " + std::to_string(l),
               !bad.has_value(), std::move(detail));
  }
}

}  // namespace

Report gordon_collapse(unsigned l, unsigned a, std::size_t N) {
  if (l != 3 && l != 11 && l != 17) throw std::invalid_argument("gordon_collapse needs l in {3, 11, 17}");
  if (a % l != l - 1) throw std::invalid_argument("gordon_collapse needs a = l - 1 (mod l)");
  Report report("gordon", Json{{"l", l}, {"a", a}, {"N", N}});

  std::optional<std::size_t> bad_term;
  for (std::size_t n = a; n <= N; ++n) {
    if ((n * (n + 1) / 2) % l == 0) continue;
    if (!mpz_divisible_ui_p(single_sum_term(a, n).get_mpz_t(), l)) {
      bad_term = n;
      break;
    }
  }
  report.add("single-sum terms vanish unless l | n(n+1)/2", !bad_term.has_value(),
             bad_term ? Json{{"first_failure", *bad_term}} : Json::object());

  const IntegersMod R(l);
  const ModSeries u = mo_direct_mod(a, N + 1, l);
  const ModSeries q = u * euler_product(R, N + 1, 3);
  std::optional<std::size_t> off_support;
  for (std::size_t n = 0; n < q.precision(); ++n) {
    if (n % l != 0 && q[n] != 0) {
      off_support = n;
      break;
    }
  }
  report.add("U_a prod(1-q^n)^3 supported on multiples of l", !off_support.has_value(),
             off_support ? Json{{"first_failure", *off_support}} : Json::object());

  std::vector<std::uint64_t> residues = l == 3 ? std::vector<std::uint64_t>{1, 2}
                                        : l == 11 ? std::vector<std::uint64_t>{7}
                                                  : std::vector<std::uint64_t>{15};
  check_progressions(report, u, l, residues, "MO(" + std::to_string(a) + ";");
  return report;
}

Report c3_congruence_checks(std::size_t N) {
  if (N < 34) throw std::invalid_argument("c3_congruence_checks needs N >= 34");
  Report report("c3", Json{{"N", N}});

  {
    const IntegersMod R(3);
    const ModSeries p3 = euler_product(R, N, -3);
    const ModSeries p_of_q3 = v_operator(euler_product(R, N, -1), 3);
    report.add("P3 = sum p(n) q^{3n} mod 3", agree(p3, p_of_q3));
    check_progressions(report, p3, 3, {1, 2}, "c3");
  }
  check_progressions(report, euler_product(IntegersMod(11), N, -3), 11, {7}, "c3");
  {
    const IntegersMod R(17);
    const ModSeries p3 = euler_product(R, N, -3);
    check_progressions(report, p3, 17, {15}, "c3");
    const ModSeries lhs = shift_up(p3 * euler_product(R, N, 3, 17), 2);
    const ModSeries delta2 = shift_up(euler_product(R, N, 48), 2);
    report.add("q^2 P3 prod(1-q^{17n})^3 = Delta^2 mod 17", agree(lhs, delta2));

    const std::size_t bound = sturm_bound(24);
    const ModSeries d2 = shift_up(euler_product(R, 17 * (bound + 1), 48), 2);
    const ModSeries t17 = hecke_tp(d2, 24, 17);
    bool zero = true;
    for (std::size_t n = 0; n <= bound; ++n) zero = zero && t17[n] == 0;
    report.add("Delta^2 | T_17 = 0 mod 17 through the Sturm bound", zero, Json{{"sturm_bound", bound}});
  }
  return report;
}

namespace {

struct SigmaPoly {
  unsigned k;
  std::vector<long> coeffs;  // polynomial in n, index = degree
};

const std::vector<SigmaPoly>& sigma_polys(unsigned a) {
  static const std::array<std::vector<SigmaPoly>, 4> table{{
      {{1, {1, -2}}, {3, {1}}},
      {{1, {37, -100, 40}}, {3, {50, -30}}, {5, {3}}},
      {{1, {3229, -9870, 5880, -840}}, {3, {4935, -4410, 756}}, {5, {441, -126}}, {7, {5}}},
      {{1, {96111, -314200, 223440, -50400, 3360}},
       {3, {157100, -167580, 45360, -3360}},
       {5, {16758, -7560, 720}},
       {7, {300, -50}},
       {9, {1}}},
  }};
  if (a < 2 || a > 5) throw std::invalid_argument("sigma expansions exist for a in 2..5");
  return table[a - 2];
}

}  // namespace

Integer corollary_denominator(unsigned a) {
  switch (a) {
    case 2: return Integer(8);
    case 3: return Integer(1920);
    case 4: return Integer(967680);
    case 5: return Integer(154828800);
    default: throw std::invalid_argument("N_a is defined for a in 2..5");
  }
}

QSeries sigma_expansion(unsigned a, std::size_t N) {
  const auto& polys = sigma_polys(a);
  std::vector<Rational> c(N, Rational(0));
  for (const auto& poly : polys) {
    const QSeries sigma = sigma_series(poly.k, N);
    for (std::size_t n = 1; n < N; ++n) {
      Integer value(0);
      for (std::size_t d = poly.coeffs.size(); d-- > 0;) value = value * static_cast<unsigned long>(n) + poly.coeffs[d];
      c[n] += Rational(value) * sigma[n];
    }
  }
  const Rational inv = Rational(1) / Rational(corollary_denominator(a));
  for (auto& x : c) x *= inv;
  return QSeries(RationalField{}, std::move(c));
}

Report corollary_check(unsigned a, std::uint64_t l, std::uint64_t p, std::size_t N, std::size_t exact_terms) {
  if (!is_prime(l) || !is_prime(p)) throw std::invalid_argument("corollary_check needs primes l and p");
  const Integer Na = corollary_denominator(a);
  Integer step(static_cast<unsigned long>(l));
  if (l <= 7) {
    long ord = valuation(Na, l);
    mpz_pow_ui(step.get_mpz_t(), step.get_mpz_t(), static_cast<unsigned long>(ord + 1));
  }
  if (!mpz_divisible_p(Integer(Integer(static_cast<unsigned long>(p)) + 1).get_mpz_t(), step.get_mpz_t())) {
    throw std::invalid_argument("corollary needs p = -1 (mod " + to_string(step) + ")");
  }
  Report report("corollary", Json{{"a", a}, {"l", l}, {"p", p}, {"N", N}});

  const std::size_t E = std::min(N + 1, exact_terms);
  auto diff = first_difference(sigma_expansion(a, E), mo_direct(a, E).series);
  report.add("sigma expansion of U_" + std::to_string(a) + " to q^" + std::to_string(E - 1), !diff.has_value(),
             diff ? Json{{"first_difference", *diff}} : Json::object());

  const ModSeries values = mo_direct_mod(a, N + 1, l);
  std::optional<std::size_t> bad;
  std::size_t checked = 0;
  for (std::size_t n = 1; n * p <= N; ++n) {
    if (n % p == 0) continue;
    ++checked;
    if (values[n * p] != 0) {
      bad = n * p;
      break;
    }
  }
  Json detail{{"checked", checked}};
  if (bad) detail["first_failure"] = *bad;
  report.add("MO(" + std::to_string(a) + "; " + std::to_string(p) + "n) = 0 mod " + std::to_string(l) + ", gcd(n,p)=1",
             !bad.has_value(), std::move(detail));
  return report;
}

Report lemma2_check(std::uint64_t p, unsigned m, std::size_t N) {
  if (!is_prime(p) || m < 1 || N < 1) throw std::invalid_argument("lemma2_check needs p prime, m >= 1, N >= 1");
  Report report("lemma2", Json{{"p", p}, {"m", m}, {"N", N}});
  Integer pm;
  mpz_ui_pow_ui(pm.get_mpz_t(), p, m);
  if (!pm.fits_ulong_p()) throw std::invalid_argument("p^m too large");
  const std::uint64_t M = pm.get_ui();

  unsigned k;
  Rational prefactor;
  Integer pm1;
  mpz_ui_pow_ui(pm1.get_mpz_t(), p, m - 1);
  if (p == 2) {
    k = 2 + 3 * (1U << (m + 1));
    prefactor = Rational(1) / Rational(pm - 1);
  } else if (p == 3) {
    k = 2 + 4 * static_cast<unsigned>(pm.get_ui());
    prefactor = Rational(2) / Rational(pm - 1);
  } else {
    k = 2 + static_cast<unsigned>(p - 1) * static_cast<unsigned>(pm1.get_ui());
    prefactor = Rational(static_cast<long>(p - 1)) / Rational(pm - 1);
  }

  const QSeries ek = eisenstein(k, N);
  const ModSeries e2 = reduce_mod(eisenstein(2, N), M);
  auto combination = [&](bool same_v) {
    QSeries total(RationalField{}, N);
    Integer pi(1);
    for (unsigned i = 1; i <= m; ++i) {
      const std::size_t d = same_v ? pm1.get_ui() : pi.get_ui();
      total = total + scale(v_operator(ek, d), Rational(pi));
      pi *= static_cast<unsigned long>(p);
    }
    return reduce_mod(scale(total, prefactor), M);
  };
  auto diff = first_difference(combination(false), e2);
  Json detail = Json::object();
  if (diff) detail["first_difference"] = *diff;
  if (p >= 5 && m >= 2) {
    // Recorded only: the variant with V_{p^{m-1}} in every term.
    detail["same_v_variant_holds"] = !first_difference(combination(true), e2).has_value();
  }
  report.add("E2 = combination of E_" + std::to_string(k) + " | V_{p^{i-1}} mod " + std::to_string(M), !diff.has_value(),
             std::move(detail));
  return report;
}

std::vector<ScanCandidate> scan(Family family, unsigned a, std::uint64_t l, std::size_t N, bool include_nested) {
  if (!is_prime(l)) throw std::invalid_argument("scan needs a prime modulus");
  const ModSeries values = direct_mod(family, a, N + 1, l);
  // Coefficients below the first nonzero one vanish for trivial reasons, so a
  // candidate needs at least three checked terms at or past it.
  const std::size_t start = values.valuation().value_or(N + 1);
  std::vector<ScanCandidate> out;
  for (std::uint64_t t = 1; t <= l * l; ++t) {
    for (std::uint64_t r = 0; r < t && r <= N; ++r) {
      std::size_t nontrivial = 0, last = r;
      bool ok = true;
      for (std::size_t n = r; n <= N; n += t) {
        if (values[n] != 0) {
          ok = false;
          break;
        }
        last = n;
        if (n >= start) ++nontrivial;
      }
      if (!ok || nontrivial < 3) continue;
      if (!include_nested) {
        bool nested = std::any_of(out.begin(), out.end(), [&](const ScanCandidate& c) {
          return t % c.t == 0 && r % c.t == c.r;
        });
        if (nested) continue;
      }
      out.push_back({t, r, last});
    }
  }
  return out;
}

}  // namespace qmac
