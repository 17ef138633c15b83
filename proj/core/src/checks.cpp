#include "qmac/checks.hpp"

#include "qmac/congruence.hpp"
#include "qmac/eisenstein.hpp"
#include "qmac/macmahon.hpp"
#include "qmac/partitions.hpp"

#include <stdexcept>

namespace qmac {

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"ramanujan", "convolution", "hook-limit", "no-identity",
                                              "bivariate", "gordon",      "c3",         "corollary",
                                              "lemma2",    "theta-bbE",   "limit-expansion"};
  return names;
}

namespace {

// Runs f for each value: the given one if present, else the defaults.
template <class T, class F>
void for_each_value(const std::optional<T>& given, std::vector<T> defaults, F f) {
  if (given) defaults = {*given};
  for (const auto& v : defaults) f(v);
}

std::vector<unsigned> range(unsigned lo, unsigned hi) {
  std::vector<unsigned> v;
  for (unsigned i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

Report run_check(const std::string& name, const CheckParams& params) {
  Json given = Json::object();
  if (params.a) given["a"] = *params.a;
  if (params.N) given["N"] = *params.N;
  if (params.z) given["z"] = exact_json(*params.z);
  if (params.l) given["l"] = *params.l;
  if (params.p) given["p"] = *params.p;
  if (params.m) given["m"] = *params.m;
  if (params.t) given["t"] = *params.t;
  Report report(name, std::move(given));
  if (name == "ramanujan") {
    report.merge(ramanujan_check(params.N.value_or(200)));
  } else if (name == "convolution") {
    for (unsigned a : params.a ? range(*params.a, *params.a) : range(1, 6)) {
      report.merge(convolution_check(a, params.N.value_or(80)));
    }
  } else if (name == "hook-limit") {
    report.merge(hook_limit_check(params.a.value_or(6)));
  } else if (name == "no-identity") {
    for_each_value<Rational>(params.z, {Rational(0), Rational(1), Rational(2), Rational(3), Rational(-1), frac(1, 2)},
                             [&](const Rational& z) { report.merge(nekrasov_okounkov_check(z, params.N.value_or(20))); });
  } else if (name == "bivariate") {
    report.merge(bivariate_identity_check(params.a.value_or(4), params.N.value_or(40)));
  } else if (name == "gordon") {
    if (params.l || params.a) {
      const unsigned l = static_cast<unsigned>(params.l.value_or(3));
      report.merge(gordon_collapse(l, params.a.value_or(l - 1), params.N.value_or(l == 17 ? 300 : 200)));
    } else {
      report.merge(gordon_collapse(3, 2, params.N.value_or(200)));
      report.merge(gordon_collapse(3, 5, params.N.value_or(200)));
      report.merge(gordon_collapse(11, 10, params.N.value_or(200)));
      report.merge(gordon_collapse(17, 16, params.N.value_or(300)));
    }
  } else if (name == "c3") {
    report.merge(c3_congruence_checks(params.N.value_or(200)));
  } else if (name == "corollary") {
    const std::size_t N = params.N.value_or(2000);
    if (params.a || params.l || params.p) {
      report.merge(corollary_check(params.a.value_or(2), params.l.value_or(5), params.p.value_or(19), N));
    } else {
      report.merge(corollary_check(2, 5, 19, N));
      for (unsigned a = 2; a <= 5; ++a) report.merge(corollary_check(a, 19, 37, N));
    }
  } else if (name == "lemma2") {
    const std::size_t N = params.N.value_or(40);
    if (params.p) {
      report.merge(lemma2_check(*params.p, params.m.value_or(1), N));
    } else {
      for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        for (unsigned m = 1; m <= 2; ++m) report.merge(lemma2_check(p, m, N));
      }
    }
  } else if (name == "theta-bbE") {
    for (unsigned t : params.t ? range(*params.t, *params.t) : range(1, 5)) {
      report.merge(theta_bbE_check(t, params.N.value_or(60)));
    }
  } else if (name == "limit-expansion") {
    for (unsigned a : params.a ? range(*params.a, *params.a) : range(1, 5)) {
      report.merge(limit_expansion_check(a, params.N.value_or(100)));
    }
  } else {
    throw std::invalid_argument("unknown check '" + name + "'");
  }
  return report;
}

}  // namespace qmac
