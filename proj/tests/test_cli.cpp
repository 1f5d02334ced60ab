#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ideq/csv.hpp"
#include "ideq/presets.hpp"

using namespace ideq;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_root() {
  static fs::path root = [] {
    fs::path p = fs::temp_directory_path() /
                 ("ideq_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return root;
}

fs::path scratch_file(const std::string& name) { return scratch_root() / name; }

CliResult run_cli(const std::string& args, const std::string& env = "") {
  static int call = 0;
  fs::path out = scratch_file("stdout_" + std::to_string(call));
  fs::path err = scratch_file("stderr_" + std::to_string(call));
  ++call;
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" IDEQ_CLI_PATH "\" " +
                    args + " > \"" + out.string() + "\" 2> \"" + err.string() +
                    "\"";
  int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_text_file(out);
  r.err = read_text_file(err);
  return r;
}

fs::path write_example1_config() {
  fs::path cfg = scratch_file("example1.cfg");
  example1_params(0.05).write_config_file(cfg);
  return cfg;
}

struct CsvRow {
  double pe = 0.0;
  double rate = 0.0;
  std::string rest;
};

std::vector<CsvRow> parse_frontier_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  REQUIRE(std::getline(in, line));
  REQUIRE(line == "pe,rate,n,p1,p2");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CsvRow row;
    size_t c1 = line.find(',');
    size_t c2 = line.find(',', c1 + 1);
    REQUIRE(c1 != std::string::npos);
    REQUIRE(c2 != std::string::npos);
    row.pe = std::stod(line.substr(0, c1));
    row.rate = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    row.rest = line.substr(c2 + 1);
    rows.push_back(row);
  }
  return rows;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("version flag prints the library version") {
  CliResult r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("a missing subcommand is a usage error") {
  CliResult r = run_cli("");
  CHECK(r.exit_code == 1);
}

TEST_CASE("region writes the unentangled frontier") {
  fs::path cfg = write_example1_config();
  fs::path out = scratch_file("region_plain.csv");
  CliResult r = run_cli("region \"" + cfg.string() + "\" --out \"" +
                        out.string() + "\"");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("wrote") != std::string::npos);

  std::vector<CsvRow> rows = parse_frontier_csv(read_text_file(out));
  REQUIRE(rows.size() >= 2);
  CHECK(close(rows.front().pe, 0.03125, 1e-12));
  CHECK(close(rows.front().rate, 0.0, 1e-12));
  CHECK(close(rows.back().pe, 0.5, 1e-12));
  CHECK(close(rows.back().rate, 0.0224, 1e-3));
  for (size_t i = 0; i + 1 < rows.size(); ++i) {
    CHECK(rows[i].pe < rows[i + 1].pe);
    CHECK(rows[i].rate <= rows[i + 1].rate);
  }

  CHECK(fs::exists(out.string() + ".manifest.json"));
}

TEST_CASE("region with the entangled flag uses the squared alphabet") {
  fs::path cfg = write_example1_config();
  fs::path out = scratch_file("region_ent.csv");
  CliResult r = run_cli("region \"" + cfg.string() + "\" --entangled --out \"" +
                        out.string() + "\"");
  REQUIRE(r.exit_code == 0);
  std::vector<CsvRow> rows = parse_frontier_csv(read_text_file(out));
  CHECK(close(rows.front().pe, 1.0 / 512.0, 1e-12));
  CHECK(close(rows.back().rate, 0.1327, 1e-3));
}

TEST_CASE("region rejects an undersized grid") {
  fs::path cfg = write_example1_config();
  CliResult r = run_cli("region \"" + cfg.string() + "\" --grid 1");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("grid") != std::string::npos);
}

TEST_CASE("an inconsistent config is rejected with the constraint named") {
  fs::path cfg = scratch_file("bad.cfg");
  write_text_file(cfg,
                  "d = 4\nalpha1 = 0.5\nbeta1 = 0.2\ngamma1 = 0.2\n"
                  "alpha2 = 0.1\nbeta2 = 0.8\ngamma2 = 0.1\n"
                  "theta1 = 0.5\npi1 = 0.5\n");
  CliResult r = run_cli("region \"" + cfg.string() + "\"");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("unit-sum") != std::string::npos);
}

TEST_CASE("a missing config file is an io error") {
  CliResult r = run_cli("region \"" + scratch_file("nope.cfg").string() + "\"");
  CHECK(r.exit_code == 3);
}

TEST_CASE("the output directory env var supplies the default location") {
  fs::path cfg = write_example1_config();
  fs::path dir = scratch_file("envdir");
  CliResult r = run_cli("region \"" + cfg.string() + "\"",
                        "IDEQ_OUT_DIR=\"" + dir.string() + "\"");
  REQUIRE(r.exit_code == 0);
  CHECK(fs::exists(dir / "region.csv"));
  CHECK(fs::exists(dir / "region.csv.manifest.json"));
}

TEST_CASE("example bundles contain the advertised files") {
  struct Expect {
    int id;
    size_t files;
  };
  for (Expect e : {Expect{1, 7}, Expect{2, 9}, Expect{3, 11}}) {
    fs::path dir = scratch_file("bundle" + std::to_string(e.id));
    CliResult r = run_cli("example " + std::to_string(e.id) + " --out \"" +
                          dir.string() + "\"");
    REQUIRE(r.exit_code == 0);
    size_t count = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
      (void)entry;
      ++count;
    }
    CHECK(count == e.files);
    CHECK(fs::exists(dir / "manifest.json"));
  }
}

TEST_CASE("example bundles are byte-stable across reruns") {
  fs::path a = scratch_file("bundle1a");
  fs::path b = scratch_file("bundle1b");
  REQUIRE(run_cli("example 1 --out \"" + a.string() + "\"").exit_code == 0);
  REQUIRE(run_cli("example 1 --out \"" + b.string() + "\"").exit_code == 0);
  size_t compared = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    fs::path name = entry.path().filename();
    CHECK(read_text_file(entry.path()) == read_text_file(b / name));
    ++compared;
  }
  CHECK(compared == 7);
}

TEST_CASE("an unknown example id is rejected") {
  CliResult r = run_cli("example 9");
  CHECK(r.exit_code == 2);
}

TEST_CASE("simulate is deterministic in the seed and reports both estimates") {
  fs::path cfg = write_example1_config();
  fs::path out1 = scratch_file("sim1.csv");
  fs::path out2 = scratch_file("sim2.csv");
  std::string base = "simulate \"" + cfg.string() +
                     "\" --dist e1 --trials 20000 --seed 7 --out \"";
  CliResult r1 = run_cli(base + out1.string() + "\"");
  CliResult r2 = run_cli(base + out2.string() + "\"");
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r2.exit_code == 0);
  CHECK(read_text_file(out1) == read_text_file(out2));
  CHECK(r1.out == r2.out);
  CHECK(r1.out.find("mi_estimate=") != std::string::npos);
  CHECK(r1.out.find("rate_bound=") != std::string::npos);
  CHECK(r1.out.find("analytic_pd") != std::string::npos);
  CHECK(fs::exists(out1.string() + ".manifest.json"));
}

TEST_CASE("simulate accepts a two-value input distribution") {
  fs::path cfg = write_example1_config();
  CliResult r = run_cli("simulate \"" + cfg.string() +
                        "\" --dist twovalue:1:0.8 --trials 2000 --seed 3");
  CHECK(r.exit_code == 0);
  CliResult bad = run_cli("simulate \"" + cfg.string() + "\" --dist bogus");
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("distribution") != std::string::npos);
}

TEST_CASE("converse reproduces the closed-form ceiling on the basis ensemble") {
  fs::path cfg = write_example1_config();
  CliResult r = run_cli("converse \"" + cfg.string() + "\"");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string header, data;
  REQUIRE(std::getline(in, header));
  CHECK(header == "rate_upper,pe_lower");
  REQUIRE(std::getline(in, data));
  size_t comma = data.find(',');
  double rate_upper = std::stod(data.substr(0, comma));
  double pe_lower = std::stod(data.substr(comma + 1));
  CHECK(close(rate_upper, 0.0224, 1e-3));
  CHECK(close(pe_lower, 0.5, 1e-12));
}

TEST_CASE("converse on identical inputs carries no information") {
  fs::path cfg = write_example1_config();
  CliResult r = run_cli("converse \"" + cfg.string() +
                        "\" --ensemble repeated-maximally-mixed");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string header, data;
  REQUIRE(std::getline(in, header));
  REQUIRE(std::getline(in, data));
  double rate_upper = std::stod(data.substr(0, data.find(',')));
  CHECK(close(rate_upper, 0.0, 1e-9));
}

TEST_CASE("an ensemble file matches the equivalent built-in ensemble") {
  IdeParams p;
  p.d = 2;
  p.alpha = {1.0, 0.0};
  p.beta = {0.0, 1.0};
  p.gamma = {0.0, 0.0};
  p.theta = {0.3, 0.7};
  p.pi = {0.5, 0.5};
  fs::path cfg = scratch_file("d2.cfg");
  p.write_config_file(cfg);

  fs::path ens = scratch_file("basis_d2.ens");
  write_text_file(ens,
                  "2 2\n"
                  "1 0  0 0\n0 0  0 0\n"
                  "0 0  0 0\n0 0  1 0\n");
  CliResult from_file =
      run_cli("converse \"" + cfg.string() + "\" --ensemble \"" +
              ens.string() + "\"");
  CliResult builtin = run_cli("converse \"" + cfg.string() + "\"");
  REQUIRE(from_file.exit_code == 0);
  REQUIRE(builtin.exit_code == 0);
  CHECK(from_file.out == builtin.out);
}

TEST_CASE("ensemble files with the wrong dimension or size are rejected") {
  fs::path cfg = write_example1_config();  // d = 16
  fs::path ens = scratch_file("d2_mismatch.ens");
  write_text_file(ens,
                  "1 2\n"
                  "1 0  0 0\n0 0  0 0\n");
  CliResult r = run_cli("converse \"" + cfg.string() + "\" --ensemble \"" +
                        ens.string() + "\"");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("dimension") != std::string::npos);

  fs::path trunc = scratch_file("trunc.ens");
  write_text_file(trunc, "2 2\n1 0 0 0\n");
  CliResult t = run_cli("converse \"" + cfg.string() + "\" --ensemble \"" +
                        trunc.string() + "\"");
  CHECK(t.exit_code == 2);
  CHECK(t.err.find("truncated") != std::string::npos);

  CliResult missing = run_cli("converse \"" + cfg.string() +
                              "\" --ensemble \"" +
                              scratch_file("missing.ens").string() + "\"");
  CHECK(missing.exit_code == 3);
}

TEST_CASE("a manifest reconstructs the run that produced it") {
  fs::path cfg = write_example1_config();
  fs::path out = scratch_file("manifest_src.csv");
  REQUIRE(run_cli("region \"" + cfg.string() + "\" --grid 64 --out \"" +
                  out.string() + "\"")
              .exit_code == 0);

  nlohmann::json man = nlohmann::json::parse(
      read_text_file(out.string() + ".manifest.json"));
  CHECK(man.at("command") == "region");
  CHECK(man.at("outputs").at(0) == "manifest_src.csv");

  IdeParams rebuilt;
  const auto& jp = man.at("params");
  rebuilt.d = jp.at("d").get<int>();
  rebuilt.alpha = {jp.at("alpha1").get<double>(), jp.at("alpha2").get<double>()};
  rebuilt.beta = {jp.at("beta1").get<double>(), jp.at("beta2").get<double>()};
  rebuilt.gamma = {jp.at("gamma1").get<double>(), jp.at("gamma2").get<double>()};
  double th1 = jp.at("theta1").get<double>();
  double pi1 = jp.at("pi1").get<double>();
  rebuilt.theta = {th1, 1.0 - th1};
  rebuilt.pi = {pi1, 1.0 - pi1};
  fs::path cfg2 = scratch_file("manifest_rebuilt.cfg");
  rebuilt.write_config_file(cfg2);

  std::string grid;
  for (const auto& [k, v] : man.at("settings").items()) {
    if (k == "grid") grid = v.get<std::string>();
  }
  REQUIRE(grid == "64");

  fs::path out2 = scratch_file("manifest_repro.csv");
  REQUIRE(run_cli("region \"" + cfg2.string() + "\" --grid " + grid +
                  " --out \"" + out2.string() + "\"")
              .exit_code == 0);
  CHECK(read_text_file(out) == read_text_file(out2));
}
