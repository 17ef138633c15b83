#include "qmac_cli/cli.hpp"

#include "qmac/checks.hpp"
#include "qmac/congruence.hpp"
#include "qmac/macmahon.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qmac::cli {

namespace fs = std::filesystem;

namespace {

// Raised for bad arguments that CLI11 cannot see, such as a precision above the cap.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << text;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

void require_cap(std::size_t n, bool allow_large, const std::string& flag) {
  if (n > kPrecisionCap && !allow_large) {
    throw UsageError(flag + " " + std::to_string(n) + " exceeds the cap of " + std::to_string(kPrecisionCap) +
                     " coefficients; pass --allow-large to override");
  }
}

void require_precision(std::size_t n, bool allow_large) {
  if (n < 1) throw UsageError("--n must be at least 1");
  require_cap(n, allow_large, "--n");
}

// Tables for order a, read from $QMAC_CACHE_DIR when present and written
// there after a fresh build. A corrupt cache file is rebuilt, not trusted.
ConstantTables tables_for(unsigned a, std::ostream& err) {
  const char* dir = std::getenv(kCacheDirVariable);
  if (dir == nullptr || *dir == '\0') return ConstantTables(a);
  const fs::path path = fs::path(dir) / ("constants-v1-a" + std::to_string(a) + ".json");
  if (fs::exists(path)) {
    try {
      std::ifstream in(path);
      ConstantTables t = ConstantTables::from_json(Json::parse(in));
      if (t.a_max() == a) return t;
    } catch (const std::exception& e) {
      err << "warning: ignoring cache file " << path.string() << ": " << e.what() << "\n";
    }
  }
  ConstantTables t(a);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary);
    if (file) file << t.to_json().dump(1) << "\n";
  }
  fs::rename(tmp, path, ec);
  if (ec) err << "warning: could not write cache file " << path.string() << "\n";
  return t;
}

MacMahonSeries compute_with_cache(Family family, Method method, unsigned a, std::size_t n, std::ostream& err) {
  if (method != Method::Eisenstein) return compute(family, method, a, n);
  const ConstantTables tables = tables_for(a, err);
  return family == Family::MO ? mo_eisenstein(a, n, tables) : m_eisenstein(a, n, tables);
}

std::string format_csv(const QSeries& f) {
  std::ostringstream s;
  for (std::size_t i = 0; i < f.precision(); ++i) s << (i ? "," : "") << to_string(f[i]);
  s << "\n";
  return s.str();
}

std::string format_text(const QSeries& f) {
  std::ostringstream s;
  bool first = true;
  for (std::size_t i = 0; i < f.precision(); ++i) {
    if (sgn(f[i]) == 0) continue;
    const Rational mag = abs(f[i]);
    if (first) {
      if (sgn(f[i]) < 0) s << "-";
    } else {
      s << (sgn(f[i]) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && i > 0;
    if (!unit) s << to_string(mag);
    if (i > 0) s << (unit ? "" : "*") << "q" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  s << (first ? "" : " + ") << "O(q^" << f.precision() << ")\n";
  return s.str();
}

struct SeriesOptions {
  std::string family;
  unsigned a = 0;
  std::size_t n = 0;
  std::string method = "direct";
  std::string format = "csv";
  std::string output;
  bool allow_large = false;
};

int cmd_series(const SeriesOptions& o, std::ostream& out, std::ostream& err) {
  require_precision(o.n, o.allow_large);
  const Family family = parse_family(o.family);
  std::vector<Method> methods;
  if (o.method == "all") {
    methods = {Method::Direct, Method::SingleSum};
    if (family == Family::MO) methods.push_back(Method::Recursion);
    methods.push_back(Method::Eisenstein);
  } else {
    methods = {parse_method(o.method)};
  }

  const MacMahonSeries reference = compute_with_cache(family, methods.front(), o.a, o.n, err);
  std::optional<std::size_t> worst;
  std::string worst_method;
  for (std::size_t i = 1; i < methods.size(); ++i) {
    const MacMahonSeries other = compute_with_cache(family, methods[i], o.a, o.n, err);
    auto diff = first_difference(reference.series, other.series);
    if (diff && (!worst || *diff < *worst)) {
      worst = diff;
      worst_method = to_string(methods[i]);
    }
  }
  if (worst) {
    err << "methods disagree: direct and " << worst_method << " first differ at q^" << *worst << "\n";
    out << "disagreement at exponent " << *worst << "\n";
    return kFailure;
  }

  std::string text;
  if (o.format == "json") {
    Json j = to_json(reference);
    if (methods.size() > 1) {
      j["method"] = "all";
      Json agreed = Json::array();
      for (auto m : methods) agreed.push_back(to_string(m));
      j["agreeing_methods"] = std::move(agreed);
    }
    text = j.dump(2) + "\n";
  } else if (o.format == "text") {
    text = format_text(reference.series);
  } else {
    text = format_csv(reference.series);
  }
  emit(text, o.output, out);
  return kOk;
}

struct ProveOptions {
  std::string family = "mo";
  unsigned a = 0;
  std::uint64_t modulus = 0;
  std::uint64_t r = 0;
  std::size_t guard = 2000;
  std::string output;
  bool allow_large = false;
};

int cmd_prove(const ProveOptions& o, std::ostream& out, std::ostream& err) {
  require_cap(o.guard, o.allow_large, "--guard");
  const CongruenceCertificate cert = prove_progression(parse_family(o.family), o.a, o.modulus, o.r, o.guard);
  emit(cert.to_json().dump(2) + "\n", o.output, out);
  err << to_string(cert.verdict) << ": " << cert.to_json()["claim"]["statement"].get<std::string>() << "\n";
  switch (cert.verdict) {
    case Verdict::Proven:
      return kOk;
    case Verdict::Inconclusive:
      return kInconclusive;
    case Verdict::CounterexampleFound:
      return kCounterexample;
  }
  return kFailure;
}

struct CheckOptions {
  std::string name;
  std::optional<unsigned> a;
  std::optional<std::size_t> n;
  std::optional<std::string> z;
  std::optional<std::uint64_t> l;
  std::optional<std::uint64_t> p;
  std::optional<unsigned> m;
  std::optional<unsigned> t;
  std::string output;
  bool allow_large = false;
};

int cmd_check(const CheckOptions& o, std::ostream& out) {
  CheckParams params;
  params.a = o.a;
  if (o.n) {
    require_precision(*o.n, o.allow_large);
    params.N = o.n;
  }
  if (o.z) params.z = parse_rational(*o.z);
  params.l = o.l;
  params.p = o.p;
  params.m = o.m;
  params.t = o.t;
  const Report report = run_check(o.name, params);
  std::string text;
  for (const auto& line : report.to_json_lines()) text += line + "\n";
  emit(text, o.output, out);
  return report.passed() ? kOk : kFailure;
}

struct ScanOptions {
  std::string family = "mo";
  unsigned a = 0;
  std::uint64_t modulus = 0;
  std::size_t n = 0;
  bool include_nested = false;
  std::string output;
  bool allow_large = false;
};

int cmd_scan(const ScanOptions& o, std::ostream& out) {
  require_precision(o.n, o.allow_large);
  const Family family = parse_family(o.family);
  std::ostringstream s;
  s << "family,a,modulus,t,r,n_max_checked\n";
  for (const auto& c : scan(family, o.a, o.modulus, o.n, o.include_nested)) {
    s << o.family << "," << o.a << "," << o.modulus << "," << c.t << "," << c.r << "," << c.n_max_checked << "\n";
  }
  emit(s.str(), o.output, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact MacMahon series, identity checks and congruence certificates", "qmac"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qmac 1.0.0");
  const auto families = CLI::IsMember({"mo", "m"});

  SeriesOptions series;
  auto* series_cmd = app.add_subcommand("series", "Print the coefficients of U_a or U_a* up to q^(n-1)");
  series_cmd->add_option("--family", series.family, "mo (strict) or m (weak)")->required()->check(families);
  series_cmd->add_option("--a", series.a, "Order a >= 1")->required()->check(CLI::PositiveNumber);
  series_cmd->add_option("--n", series.n, "Number of coefficients")->required();
  series_cmd->add_option("--method", series.method)
      ->check(CLI::IsMember({"direct", "single-sum", "recursion", "eisenstein", "all"}))
      ->capture_default_str();
  series_cmd->add_option("--format", series.format)->check(CLI::IsMember({"csv", "json", "text"}))->capture_default_str();
  series_cmd->add_option("--output", series.output, "Write to a file instead of stdout");
  series_cmd->add_flag("--allow-large", series.allow_large, "Lift the precision cap");

  ProveOptions prove;
  auto* prove_cmd = app.add_subcommand("prove", "Certify MO(a; pn + r) = 0 (mod p) with Sturm bounds");
  prove_cmd->add_option("--family", prove.family)->check(families)->capture_default_str();
  prove_cmd->add_option("--a", prove.a)->required()->check(CLI::PositiveNumber);
  prove_cmd->add_option("--modulus,-p", prove.modulus, "Prime p >= 5")->required();
  prove_cmd->add_option("--r", prove.r, "Residue 0 <= r < p")->required();
  prove_cmd->add_option("--guard", prove.guard, "Scan the progression up to this exponent")->capture_default_str();
  prove_cmd->add_option("--output", prove.output);
  prove_cmd->add_flag("--allow-large", prove.allow_large);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Run a named identity or congruence check");
  check_cmd->add_option("name", check.name)->required()->check(CLI::IsMember(check_names()));
  check_cmd->add_option("--a", check.a);
  check_cmd->add_option("--n", check.n);
  check_cmd->add_option("--z", check.z, "Rational parameter, e.g. 1/2");
  check_cmd->add_option("--l", check.l);
  check_cmd->add_option("--p", check.p);
  check_cmd->add_option("--m", check.m);
  check_cmd->add_option("--t", check.t);
  check_cmd->add_option("--output", check.output);
  check_cmd->add_flag("--allow-large", check.allow_large);

  ScanOptions scan_opts;
  auto* scan_cmd = app.add_subcommand("scan", "List candidate progressions tn + r with vanishing coefficients mod l");
  scan_cmd->add_option("--family", scan_opts.family)->check(families)->capture_default_str();
  scan_cmd->add_option("--a", scan_opts.a)->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--modulus,-l", scan_opts.modulus, "Prime l")->required();
  scan_cmd->add_option("--n", scan_opts.n, "Largest exponent checked")->required();
  scan_cmd->add_flag("--include-nested", scan_opts.include_nested, "Keep progressions inside earlier candidates");
  scan_cmd->add_option("--output", scan_opts.output);
  scan_cmd->add_flag("--allow-large", scan_opts.allow_large);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*series_cmd) return cmd_series(series, out, err);
    if (*prove_cmd) return cmd_prove(prove, out, err);
    if (*check_cmd) return cmd_check(check, out);
    if (*scan_cmd) return cmd_scan(scan_opts, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace qmac::cli
