#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "torus/cli.hpp"

namespace {

int emit(const torus::cli::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

void add_sweep_flags(CLI::App* cmd, torus::SweepConfig& cfg) {
  cmd->add_option("--seeds", cfg.seeds, "Random seeds per eigenvalue class")->capture_default_str();
  cmd->add_option("--first-seed", cfg.first_seed, "First seed")->capture_default_str();
  cmd->add_option("--s-list", cfg.s_values, "Eigenvalue norms s to sample")->delimiter(',')->capture_default_str();
  cmd->add_option("-N,--grid", cfg.grid_size, "Grid size")->capture_default_str();
  cmd->add_option("--max-grid", cfg.max_grid_size, "Largest grid tried when counts disagree")->capture_default_str();
  cmd->add_option("--zero-tol", cfg.zero_tol, "Relative zero-cell tolerance")->capture_default_str();
  cmd->add_option("--geo-tol", cfg.geo_tol, "Tolerance for the geometry screens")->capture_default_str();
  cmd->add_option("--threads", cfg.threads, "Worker threads (0 = hardware)")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
  using namespace torus::cli;
  CLI::App app{"Spectrum, counting bounds, Courant-sharp certification and nodal domains on the flat torus"};
  app.require_subcommand(1);

  long long cutoff_s = 17;
  Format spectrum_format = Format::Csv;
  auto* spectrum = app.add_subcommand("spectrum", "Distinct eigenvalues 4 pi^2 s for s <= cutoff");
  spectrum->add_option("--cutoff-s", cutoff_s, "Largest norm s")->capture_default_str();
  spectrum->add_option("--format", spectrum_format, "csv or json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::Csv}, {"json", Format::Json}}))
      ->option_text("CSV|JSON");

  double lambda_s = 17;
  auto* count = app.add_subcommand("count", "Counting function and its lower bounds at lambda = 4 pi^2 s");
  count->add_option("--lambda-s", lambda_s, "lambda in units of 4 pi^2")->capture_default_str();

  Format certify_format = Format::Json;
  auto* certify = app.add_subcommand("certify", "Courant-sharp certification");
  certify->add_option("--format", certify_format, "json or table")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"table", Format::Table}}))
      ->option_text("JSON|TABLE");

  std::string spec;
  NodalOptions nodal_opt;
  std::string sign_grid_path;
  auto* nodal = app.add_subcommand("nodal", "Nodal domains of an eigenfunction");
  nodal->add_option("spec", spec, "mode:s=<s>;terms=m,n,c,d[;...] or random:s=<s>;seed=<u64>")->required();
  nodal->add_option("-N,--grid", nodal_opt.grid_size, "Grid size")->capture_default_str();
  nodal->add_option("--zero-tol", nodal_opt.zero_tol, "Relative zero-cell tolerance")->capture_default_str();
  nodal->add_option("--geo-tol", nodal_opt.geo_tol, "Tolerance for the geometry screens")->capture_default_str();
  nodal->add_option("--format", nodal_opt.format, "json or csv")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"csv", Format::Csv}}))
      ->option_text("JSON|CSV");
  nodal->add_flag("--check-courant", nodal_opt.check_courant, "Compare mu with the eigenvalue indices");
  nodal->add_flag("--check-fk", nodal_opt.check_fk, "Faber-Krahn screen on small domains");
  nodal->add_flag("--check-iso", nodal_opt.check_iso, "Isoperimetric screen on small domains");
  nodal->add_option("--sign-grid", sign_grid_path, "Write the sign grid as CSV to this file");

  torus::SweepConfig sweep_cfg;
  auto* sweep = app.add_subcommand("sweep", "Randomized Courant and geometry sweep");
  add_sweep_flags(sweep, sweep_cfg);

  ReportOptions report_opt;
  auto* report = app.add_subcommand("report", "Spectrum, certification and witness nodal checks");
  report->add_option("--format", report_opt.format, "json or table")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"table", Format::Table}}))
      ->option_text("JSON|TABLE");
  report->add_flag("--sweep", report_opt.sweep, "Also run the randomized sweep");
  add_sweep_flags(report, report_opt.sweep_config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*spectrum) return emit(cmd_spectrum(cutoff_s, spectrum_format));
    if (*count) return emit(cmd_count(lambda_s));
    if (*certify) return emit(cmd_certify(certify_format));
    if (*nodal) {
      if (!sign_grid_path.empty()) nodal_opt.sign_grid_path = sign_grid_path;
      return emit(cmd_nodal(spec, nodal_opt));
    }
    if (*sweep) return emit(cmd_sweep(sweep_cfg));
    if (*report) return emit(cmd_report(report_opt));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}
