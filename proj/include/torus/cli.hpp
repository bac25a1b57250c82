#pragma once

// Command implementations behind the `torus-spectral` executable. Each
// command returns its complete stdout text, diagnostics and exit code, so
// the argument parser in tools/ stays thin and commands are testable
// in-process.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "torus/certifier.hpp"
#include "torus/io.hpp"
#include "torus/nodal_lab.hpp"
#include "torus/spectrum.hpp"

namespace torus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Malformed command input; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { Csv, Json, Table };

// --- eigenfunction spec strings --------------------------------------------

namespace detail {

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view text, const char* what) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last)
    throw UsageError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
  return value;
}

inline std::string_view expect_key(std::string_view item, std::string_view key) {
  if (item.substr(0, key.size() + 1) != std::string(key) + "=")
    throw UsageError("expected '" + std::string(key) + "=' in '" + std::string(item) + "'");
  return item.substr(key.size() + 1);
}

inline Term parse_term(std::string_view text) {
  const auto fields = split(text, ',');
  if (fields.size() != 4) throw UsageError("term must be m,n,c,d: '" + std::string(text) + "'");
  return Term{parse_number<std::int64_t>(fields[0], "m"), parse_number<std::int64_t>(fields[1], "n"),
              parse_number<double>(fields[2], "cos coefficient"), parse_number<double>(fields[3], "sin coefficient")};
}

} // namespace detail

/// Grammar: `mode:s=<s>;terms=m,n,c,d[;m,n,c,d...]` or `random:s=<s>;seed=<u64>`.
inline Eigenfunction parse_eigenfunction_spec(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) throw UsageError("eigenfunction spec needs a 'mode:' or 'random:' prefix");
  const std::string_view kind = spec.substr(0, colon);
  const auto items = detail::split(spec.substr(colon + 1), ';');
  if (items.size() < 2) throw UsageError("eigenfunction spec is incomplete: '" + std::string(spec) + "'");
  const auto s = detail::parse_number<std::int64_t>(detail::expect_key(items[0], "s"), "s");
  if (s < 0) throw UsageError("s must be non-negative");

  try {
    if (kind == "random") {
      if (items.size() != 2) throw UsageError("random spec takes exactly s and seed");
      const auto seed = detail::parse_number<std::uint64_t>(detail::expect_key(items[1], "seed"), "seed");
      return random_eigenfunction(s, seed);
    }
    if (kind == "mode") {
      std::vector<Term> terms{detail::parse_term(detail::expect_key(items[1], "terms"))};
      for (std::size_t i = 2; i < items.size(); ++i) terms.push_back(detail::parse_term(items[i]));
      return Eigenfunction::make(s, std::move(terms));
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown eigenfunction kind '" + std::string(kind) + "'");
}

// --- commands --------------------------------------------------------------

inline CommandResult cmd_spectrum(std::int64_t cutoff_s, Format format) {
  if (cutoff_s < 0) return {kExitUsage, "", "error: --cutoff-s must be non-negative\n"};
  try {
    const SpectrumTable table = build_spectrum_table(cutoff_s);
    if (format == Format::Csv) return {kExitOk, io::spectrum_csv(table), ""};
    return {kExitOk, io::dump(io::envelope("spectrum", {{"cutoff_s", cutoff_s}}, io::spectrum_json(table))), ""};
  } catch (const std::length_error& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }
}

/// N(lambda), n(lambda) and both lower bounds at lambda = 4 pi^2 * lambda_s.
inline CommandResult cmd_count(double lambda_s) {
  if (!(lambda_s >= 0) || lambda_s > static_cast<double>(kMaxCutoffS))
    return {kExitUsage, "", "error: --lambda-s must lie in [0, " + std::to_string(kMaxCutoffS) + "]\n"};
  const Lambda lam = Lambda::in_s_units(lambda_s);
  const std::int64_t n = lattice_count(lam);
  const std::int64_t count = counting_function_exact(lam);
  const double weyl = weyl_lower_bound(lam);
  const double area = lattice_area_bound(lam);
  const std::int64_t enumerated = build_spectrum_table(lam.floor_s()).total_count();
  const bool ok = count == enumerated && weyl <= static_cast<double>(count) && area <= static_cast<double>(n);
  io::Json results{{"lambda_s", lam.s_units()},
                   {"lambda", io::round_significant(lam.absolute())},
                   {"lattice_count", n},
                   {"lattice_area_bound", io::round_significant(area)},
                   {"counting_function", count},
                   {"counting_function_enumerated", enumerated},
                   {"weyl_lower_bound", io::round_significant(weyl)},
                   {"bounds_hold", ok}};
  return {ok ? kExitOk : kExitVerificationFailed,
          io::dump(io::envelope("count", {{"lambda_s", lambda_s}}, std::move(results))), ""};
}

inline bool is_expected_courant_set(const CertificationReport& r) {
  return r.courant_sharp_indices == std::vector<std::int64_t>{1, 2, 3, 4, 5};
}

inline CommandResult cmd_certify(Format format) {
  const CertificationReport report = certify_all();
  const int code = is_expected_courant_set(report) ? kExitOk : kExitVerificationFailed;
  if (format == Format::Table) return {code, io::report_table(report), ""};
  return {code, io::dump(io::envelope("certify", io::Json::object(), io::report_json(report))), ""};
}

struct NodalOptions {
  int grid_size = kDefaultGridSize;
  double zero_tol = kDefaultZeroTol;
  double geo_tol = kDefaultGeoTol;
  Format format = Format::Json;
  bool check_courant = false;
  bool check_fk = false;
  bool check_iso = false;
  std::optional<std::string> sign_grid_path;
};

inline CommandResult cmd_nodal(const std::string& spec, const NodalOptions& opt) {
  if (opt.grid_size < kMinGridSize) return {kExitUsage, "", "error: grid size must be at least 16\n"};
  if (!(opt.zero_tol > 0) || !(opt.geo_tol >= 0) || !(opt.geo_tol < 1))
    return {kExitUsage, "", "error: tolerances out of range\n"};
  std::optional<Eigenfunction> u;
  try {
    u = parse_eigenfunction_spec(spec);
  } catch (const UsageError& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }

  NodalDecomposition dec;
  try {
    dec = count_nodal_domains(*u, opt.grid_size, opt.zero_tol);
  } catch (const std::exception& e) {
    return {kExitVerificationFailed, "", std::string("error: ") + e.what() + "\n"};
  }

  if (opt.sign_grid_path) {
    std::ofstream f(*opt.sign_grid_path, std::ios::binary);
    if (!f) return {kExitUsage, "", "error: cannot write " + *opt.sign_grid_path + "\n"};
    f << io::sign_grid_csv(dec.signs);
  }

  bool ok = true;
  io::Json checks = io::Json::object();
  if (opt.check_courant) {
    const SpectrumTable table = build_spectrum_table(u->s());
    const CourantCheck c = check_courant(dec, u->s(), table);
    ok = ok && c.satisfied;
    checks["courant"] = io::courant_json(c);
  }
  if (opt.check_fk || opt.check_iso) {
    const GeometryScreen screen = screen_geometry(*u, dec, opt.zero_tol, opt.geo_tol);
    if (opt.check_fk) {
      ok = ok && !screen.faber_krahn_genuine_failure;
      checks["faber_krahn"] = io::Json{{"rows", io::faber_krahn_json(screen.faber_krahn)},
                                       {"refined", screen.refined},
                                       {"genuine_failure", screen.faber_krahn_genuine_failure}};
    }
    if (opt.check_iso) {
      ok = ok && !screen.isoperimetric_genuine_failure;
      checks["isoperimetric"] = io::Json{{"rows", io::isoperimetric_json(screen.isoperimetric)},
                                         {"refined", screen.refined},
                                         {"genuine_failure", screen.isoperimetric_genuine_failure}};
    }
  }

  const int code = ok ? kExitOk : kExitVerificationFailed;
  if (opt.format == Format::Csv) return {code, io::decomposition_csv(dec), ""};
  io::Json params{{"spec", spec},
                  {"grid_size", opt.grid_size},
                  {"zero_tol", opt.zero_tol},
                  {"geo_tol", opt.geo_tol}};
  io::Json results{{"s", u->s()}, {"decomposition", io::decomposition_json(dec)}, {"checks", std::move(checks)}};
  return {code, io::dump(io::envelope("nodal", std::move(params), std::move(results))), ""};
}

inline bool sweep_passed(const SweepResult& r) {
  return r.errors == 0 && r.courant_violations == 0 && r.sharp_hits_nu_ge_4 == 0 &&
         r.faber_krahn_genuine_failures == 0 && r.isoperimetric_genuine_failures == 0;
}

inline io::Json sweep_parameters(const SweepConfig& cfg) {
  return io::Json{{"s_values", cfg.s_values},   {"seeds", cfg.seeds},         {"first_seed", cfg.first_seed},
                  {"grid_size", cfg.grid_size}, {"zero_tol", cfg.zero_tol},   {"geo_tol", cfg.geo_tol},
                  {"max_grid_size", cfg.max_grid_size}};
}

inline CommandResult cmd_sweep(const SweepConfig& cfg) {
  if (cfg.grid_size < kMinGridSize || cfg.max_grid_size < 2 * cfg.grid_size)
    return {kExitUsage, "", "error: need grid >= 16 and max grid >= 2 * grid\n"};
  for (std::int64_t s : cfg.s_values)
    if (!is_sum_of_two_squares(s))
      return {kExitUsage, "", "error: " + std::to_string(s) + " is not a sum of two squares\n"};
  std::int64_t s_max = 0;
  for (std::int64_t s : cfg.s_values) s_max = std::max(s_max, s);
  const SweepResult r = run_sweep(cfg, build_spectrum_table(s_max));
  return {sweep_passed(r) ? kExitOk : kExitVerificationFailed,
          io::dump(io::envelope("sweep", sweep_parameters(cfg), io::sweep_json(cfg, r))), ""};
}

struct ReportOptions {
  Format format = Format::Json;
  bool sweep = false;
  SweepConfig sweep_config;
};

/// Spectrum up to s = 17, certification, and the nodal checks on the two
/// witness eigenfunctions; optionally the randomized sweep.
inline CommandResult cmd_report(const ReportOptions& opt) {
  const SpectrumTable table = build_spectrum_table(17);
  const CertificationReport report = certify_all();
  bool ok = is_expected_courant_set(report);

  io::Json witnesses = io::Json::array();
  std::string witness_text;
  for (const EigenvalueClass& cls : table.classes()) {
    if (nu_of(cls) >= kMinPleijelCount) break;
    const Eigenfunction u = witness_eigenfunction(cls);
    const NodalDecomposition dec = count_nodal_domains(u);
    const CourantCheck c = check_courant(dec, u.s(), table);
    const GeometryScreen screen = screen_geometry(u, dec, kDefaultZeroTol);
    ok = ok && c.satisfied && c.courant_sharp && !screen.faber_krahn_genuine_failure &&
         !screen.isoperimetric_genuine_failure;
    witnesses.push_back(io::Json{{"s", cls.s},
                                 {"eigenfunction", describe_witness(cls)},
                                 {"courant", io::courant_json(c)},
                                 {"faber_krahn", io::faber_krahn_json(screen.faber_krahn)},
                                 {"isoperimetric", io::isoperimetric_json(screen.isoperimetric)}});
    witness_text += "  " + describe_witness(cls) + ": mu = " + std::to_string(c.mu) +
                    ", nu = " + std::to_string(c.nu) + (c.courant_sharp ? " (Courant-sharp)\n" : "\n");
  }

  std::optional<SweepResult> sweep;
  if (opt.sweep) {
    sweep = run_sweep(opt.sweep_config, build_spectrum_table(17));
    ok = ok && sweep_passed(*sweep);
  }

  const int code = ok ? kExitOk : kExitVerificationFailed;
  if (opt.format == Format::Table) {
    std::string text = "Spectrum (s <= 17)\n" + io::spectrum_csv(table) + "\n" + io::report_table(report) +
                       "\nWitness eigenfunctions\n" + witness_text;
    if (sweep)
      text += "\nRandom sweep: " + std::to_string(sweep->samples.size()) + " samples, " +
              std::to_string(sweep->courant_violations) + " Courant violations, " +
              std::to_string(sweep->sharp_hits_nu_ge_4) + " Courant-sharp hits with nu >= 4\n";
    return {code, text, ""};
  }
  io::Json results{{"spectrum", io::spectrum_json(table)},
                   {"certification", io::report_json(report)},
                   {"witnesses", std::move(witnesses)}};
  if (sweep) results["sweep"] = io::sweep_json(opt.sweep_config, *sweep);
  io::Json params{{"sweep", opt.sweep}};
  if (opt.sweep) params["sweep_config"] = sweep_parameters(opt.sweep_config);
  return {code, io::dump(io::envelope("report", std::move(params), std::move(results))), ""};
}

} // namespace torus::cli
