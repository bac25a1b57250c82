#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "torus/cli.hpp"

namespace {

using namespace torus;
using namespace torus::cli;

struct CliRun {
  int exit_code;
  std::string out;
};

// Runs the installed executable; stderr is discarded.
CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(TORUS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(ParseSpec, ModeAndRandom) {
  const Eigenfunction u = parse_eigenfunction_spec("mode:s=1;terms=1,0,0,1");
  EXPECT_EQ(u.s(), 1);
  ASSERT_EQ(u.terms().size(), 1u);
  EXPECT_EQ(u.terms()[0].sin_coeff, 1.0);

  const Eigenfunction two = parse_eigenfunction_spec("mode:s=5;terms=2,1,1,0;1,-2,0,-0.5");
  ASSERT_EQ(two.terms().size(), 2u);
  EXPECT_EQ(two.terms()[1].n, -2);
  EXPECT_EQ(two.terms()[1].sin_coeff, -0.5);

  const Eigenfunction r = parse_eigenfunction_spec("random:s=5;seed=7");
  EXPECT_EQ(r.terms().size(), random_eigenfunction(5, 7).terms().size());
  EXPECT_EQ(r.terms()[0].cos_coeff, random_eigenfunction(5, 7).terms()[0].cos_coeff);
}

TEST(ParseSpec, Malformed) {
  for (const char* bad : {"", "mode", "mode:s=1", "mode:s=1;terms=1,0", "mode:s=1;terms=1,0,0,x",
                          "mode:s=2;terms=1,0,1,0", "random:s=3;seed=1", "random:s=5;seed=-1",
                          "random:s=5", "blob:s=1;seed=2", "mode:t=1;terms=1,0,0,1", "mode:s=1;terms=1,0,0,0"}) {
    EXPECT_THROW(parse_eigenfunction_spec(bad), UsageError) << bad;
  }
}

TEST(CmdSpectrum, CsvGolden) {
  const CommandResult r = cmd_spectrum(17, Format::Csv);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.out,
            "s,representatives,multiplicity,cumulative\n"
            "0,\"0,0\",1,1\n"
            "1,\"1,0;0,1\",4,5\n"
            "2,\"1,1\",4,9\n"
            "4,\"2,0;0,2\",4,13\n"
            "5,\"2,1;1,2\",8,21\n"
            "8,\"2,2\",4,25\n"
            "9,\"3,0;0,3\",4,29\n"
            "10,\"3,1;1,3\",8,37\n"
            "13,\"3,2;2,3\",8,45\n"
            "16,\"4,0;0,4\",4,49\n"
            "17,\"4,1;1,4\",8,57\n");
  EXPECT_EQ(cmd_spectrum(0, Format::Csv).out, "s,representatives,multiplicity,cumulative\n0,\"0,0\",1,1\n");
  EXPECT_EQ(cmd_spectrum(-1, Format::Csv).exit_code, kExitUsage);
  EXPECT_EQ(cmd_spectrum(kMaxCutoffS + 1, Format::Csv).exit_code, kExitUsage);
}

TEST(CmdSpectrum, JsonEnvelope) {
  const auto j = io::Json::parse(cmd_spectrum(2, Format::Json).out);
  EXPECT_EQ(j["command"], "spectrum");
  EXPECT_EQ(j["parameters"]["cutoff_s"], 2);
  EXPECT_EQ(j["results"]["classes"].size(), 3u);
  EXPECT_EQ(j["results"]["classes"][1]["cumulative"], 5);
  EXPECT_EQ(j["constants"]["j01"], 2.404825558);
  EXPECT_EQ(j["constants"]["ratio_bound"], 0.4602113164);
  // key order is part of the format
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "parameters", "results", "constants"}));
}

TEST(CmdCount, AtSeventeen) {
  const CommandResult r = cmd_count(17);
  EXPECT_EQ(r.exit_code, kExitOk);
  const auto j = io::Json::parse(r.out)["results"];
  EXPECT_EQ(j["counting_function"], 57);
  EXPECT_EQ(j["lattice_count"], 19);
  EXPECT_EQ(j["bounds_hold"], true);
  EXPECT_EQ(cmd_count(-1).exit_code, kExitUsage);
}

TEST(CmdCertify, JsonAndTable) {
  const CommandResult js = cmd_certify(Format::Json);
  EXPECT_EQ(js.exit_code, kExitOk);
  const auto j = io::Json::parse(js.out);
  EXPECT_EQ(j["results"]["courant_sharp_indices"], (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(j["results"]["ratio_table"][1]["ratio"], "0.4000");
  EXPECT_EQ(cmd_certify(Format::Json).out, js.out);

  const CommandResult table = cmd_certify(Format::Table);
  EXPECT_NE(table.out.find("| 0.3333 | 0.4000 | 0.3571 | 0.3636 | 0.3462 | 0.3333 | 0.3421 | 0.3478 |"),
            std::string::npos)
      << table.out;
}

TEST(CmdNodal, SineWitness) {
  NodalOptions opt;
  opt.check_courant = true;
  opt.check_fk = true;
  opt.check_iso = true;
  const CommandResult r = cmd_nodal("mode:s=1;terms=1,0,0,1", opt);
  EXPECT_EQ(r.exit_code, kExitOk);
  const auto j = io::Json::parse(r.out)["results"];
  EXPECT_EQ(j["decomposition"]["mu"], 2);
  EXPECT_EQ(j["checks"]["courant"]["courant_sharp"], true);
  EXPECT_EQ(j["checks"]["faber_krahn"]["rows"][0]["status"], "out_of_hypothesis");
}

TEST(CmdNodal, RandomAndErrors) {
  NodalOptions opt;
  opt.check_courant = true;
  const CommandResult r = cmd_nodal("random:s=5;seed=7", opt);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(io::Json::parse(r.out)["results"]["checks"]["courant"]["satisfied"], true);
  EXPECT_EQ(cmd_nodal("random:s=5;seed=7", opt).out, r.out);

  EXPECT_EQ(cmd_nodal("mode:s=1;terms=1,0", opt).exit_code, kExitUsage);
  opt.grid_size = 8;
  EXPECT_EQ(cmd_nodal("random:s=5;seed=7", opt).exit_code, kExitUsage);
  opt.grid_size = 16;
  EXPECT_EQ(cmd_nodal("mode:s=144;terms=12,0,1,0", opt).exit_code, kExitVerificationFailed);
}

TEST(CmdNodal, CsvAndSignGrid) {
  const auto path = std::filesystem::temp_directory_path() / "torus_sign_grid_test.csv";
  NodalOptions opt;
  opt.grid_size = 16;
  opt.format = Format::Csv;
  opt.sign_grid_path = path.string();
  const CommandResult r = cmd_nodal("mode:s=1;terms=1,0,0,1", opt);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.out, "id,sign,cell_count,area,boundary_edge_count,perimeter_estimate\n"
                   "0,1,128,0.5,32,2\n"
                   "1,-1,128,0.5,32,2\n");
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "1,1,1,1,1,1,1,1,-1,-1,-1,-1,-1,-1,-1,-1");
  std::filesystem::remove(path);
}

TEST(Executable, ExitCodesAndDeterminism) {
  const CliRun spectrum = run_cli("spectrum --cutoff-s 17 --format csv");
  EXPECT_EQ(spectrum.exit_code, 0);
  EXPECT_EQ(spectrum.out, cmd_spectrum(17, Format::Csv).out);
  EXPECT_EQ(run_cli("spectrum --cutoff-s -1").exit_code, 2);
  EXPECT_EQ(run_cli("spectrum --format xml").exit_code, 2);
  EXPECT_EQ(run_cli("").exit_code, 2);

  const CliRun a = run_cli("certify --format json");
  const CliRun b = run_cli("certify --format json");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);

  EXPECT_EQ(run_cli("nodal \"mode:s=1;terms=1,0\"").exit_code, 2);
  EXPECT_EQ(run_cli("nodal \"mode:s=1;terms=1,0,0,1\" --check-courant").exit_code, 0);
  EXPECT_EQ(run_cli("count --lambda-s 4").exit_code, 0);
}

TEST(Executable, ReportTable) {
  const CliRun r = run_cli("report --format table");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("Courant-sharp indices: 1 2 3 4 5"), std::string::npos);
  EXPECT_NE(r.out.find("u(x,y) = sin(2 pi (x)): mu = 2, nu = 2 (Courant-sharp)"), std::string::npos);
}

TEST(Executable, SmallSweep) {
  const CliRun r = run_cli("sweep --seeds 3 --s-list 1,2,5 -N 64 --threads 1");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = io::Json::parse(r.out)["results"];
  EXPECT_EQ(j["samples"], 9);
  EXPECT_EQ(j["courant_violations"], 0);
  EXPECT_EQ(run_cli("sweep --s-list 3").exit_code, 2);
}

} // namespace
