// Named identity and congruence checks, as exposed by `qmac check <name>`.
#pragma once

#include "qmac/rational.hpp"
#include "qmac/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qmac {

/// Optional overrides; each check falls back to its documented defaults.
struct CheckParams {
  std::optional<unsigned> a;
  std::optional<std::size_t> N;
  std::optional<Rational> z;
  std::optional<std::uint64_t> l;
  std::optional<std::uint64_t> p;
  std::optional<unsigned> m;
  std::optional<unsigned> t;
};

const std::vector<std::string>& check_names();

/// The report parameters list only the overrides given. Throws
/// std::invalid_argument for an unknown name.
Report run_check(const std::string& name, const CheckParams& params = {});

}  // namespace qmac
