// End-to-end checks of the installed command-line surface: every test runs
// the real binary and inspects its files and exit codes.

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#ifndef CATPHASE_CLI_PATH
#error "CATPHASE_CLI_PATH must point at the catphase binary"
#endif

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string log;
};

RunResult run_cli(const std::string& args, const fs::path& log_name) {
  const std::string cmd = std::string(CATPHASE_CLI_PATH) + " " + args +
                          " > " + log_name.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(log_name);
  std::stringstream ss;
  ss << in.rdbuf();
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, ss.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// minimal CSV reader: skips '#' lines and the column header
std::vector<std::vector<double>> read_csv(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::vector<double>> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;  // column names
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (...) {
        row.push_back(std::numeric_limits<double>::quiet_NaN());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("vacuum photon statistics end to end") {
  const fs::path dir = fresh_dir("catphase_cli_vacuum");
  const auto res = run_cli(
      "photon-stats --alpha 0 --r 0 --eta1 1 --eta2 1 --delta0 0 "
      "--engine combinatorial --out " +
          dir.string(),
      dir / "run.log");
  CHECK(res.exit_code == 0);
  const auto rows = read_csv(dir / "photon_stats_combinatorial.csv");
  REQUIRE(!rows.empty());
  CHECK(rows[0][0] == 0.0);
  CHECK(rows[0][1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[1][1] == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("engine=all emits aligned distributions and small deltas") {
  const fs::path dir = fresh_dir("catphase_cli_all");
  const auto res = run_cli(
      "photon-stats --alpha 1.5 --r 0.5 --eta2 0.85 --delta0 1 "
      "--engine all --n-max 18 --dim 160 --format json --out " +
          dir.string(),
      dir / "run.log");
  CHECK(res.exit_code == 0);
  const std::string body = slurp(dir / "photon_stats.json");
  CHECK(body.find("\"closed\"") != std::string::npos);
  CHECK(body.find("\"quadrature\"") != std::string::npos);
  CHECK(body.find("\"combinatorial\"") != std::string::npos);
  CHECK(body.find("\"delta\"") != std::string::npos);
  CHECK(body.find("\"tail_bound\"") != std::string::npos);
}

TEST_CASE("closed engine falls back beyond the stability cutoff") {
  const fs::path dir = fresh_dir("catphase_cli_fallback");
  const auto res = run_cli(
      "photon-stats --alpha 1 --engine closed --n-max 40 --out " +
          dir.string(),
      dir / "run.log");
  CHECK(res.exit_code == 0);
  CHECK(res.log.find("combinatorial") != std::string::npos);
  CHECK(fs::exists(dir / "photon_stats_combinatorial.csv"));
}

TEST_CASE("detect: no displacement means certain failure, exit code 0") {
  const fs::path dir = fresh_dir("catphase_cli_detect0");
  const auto res =
      run_cli("detect --alpha 2 --r 0.56 --eta2 0.975 --delta0 0 --out " +
                  dir.string(),
              dir / "run.log");
  CHECK(res.exit_code == 0);
  const std::string body = slurp(dir / "error_report.json");
  CHECK(body.find("\"p_tot\": 1.0") != std::string::npos);
}

TEST_CASE("detect at the reported operating point") {
  const fs::path dir = fresh_dir("catphase_cli_detect");
  const auto res = run_cli(
      "detect --alpha 2 --r 0.56 --eta2 0.975 --delta0 0.68 --out " +
          dir.string(),
      dir / "run.log");
  CHECK(res.exit_code == 0);
  const std::string body = slurp(dir / "error_report.json");
  const auto value_of = [&body](const std::string& key) {
    const auto pos = body.find("\"" + key + "\"");
    REQUIRE(pos != std::string::npos);
    return std::stod(body.substr(body.find(':', pos) + 1));
  };
  CHECK(value_of("p_tot") == doctest::Approx(0.1143).epsilon(3e-3));
  CHECK(value_of("p_sq") == doctest::Approx(0.2517).epsilon(1e-3));
  CHECK(value_of("p_tot") ==
        doctest::Approx(value_of("p_fp") + value_of("p_fn")).epsilon(1e-12));
  const auto regions = read_csv(dir / "decision_regions.csv");
  REQUIRE(regions.size() >= 4);
}

TEST_CASE("flags override config-file values") {
  const fs::path dir = fresh_dir("catphase_cli_precedence");
  {
    std::ofstream cfg(dir / "probe.cfg");
    cfg << "alpha = 1.0\nr = 0.3\neta2 = 0.9\ndelta0 = 0.5\n";
  }
  const auto res = run_cli(
      "detect --config " + (dir / "probe.cfg").string() +
          " --alpha 2 --out " + dir.string(),
      dir / "run.log");
  CHECK(res.exit_code == 0);
  const std::string body = slurp(dir / "error_report.json");
  CHECK(body.find("\"alpha\": \"2\"") != std::string::npos);
  CHECK(body.find("\"r\": \"0.29999999999999999\"") != std::string::npos);
}

TEST_CASE("shipped example config runs as-is") {
  const fs::path dir = fresh_dir("catphase_cli_example_cfg");
  const auto res = run_cli(
      "detect --config " CATPHASE_SOURCE_DIR "/configs/operating_point.cfg"
      " --out " + dir.string(),
      dir / "run.log");
  CHECK(res.exit_code == 0);
  const std::string body = slurp(dir / "error_report.json");
  CHECK(body.find("\"p_tot\"") != std::string::npos);
}

TEST_CASE("unknown config keys fail with a nonzero exit code") {
  const fs::path dir = fresh_dir("catphase_cli_badcfg");
  {
    std::ofstream cfg(dir / "bad.cfg");
    cfg << "alpha = 2\nwarp_drive = on\n";
  }
  const auto res = run_cli(
      "detect --config " + (dir / "bad.cfg").string() + " --out " +
          dir.string(),
      dir / "run.log");
  CHECK(res.exit_code != 0);
  CHECK(res.log.find("unknown key") != std::string::npos);
}

TEST_CASE("wigner grid: vacuum peak and re-integrated normalization") {
  const fs::path dir = fresh_dir("catphase_cli_wigner");
  const auto res = run_cli(
      "wigner --alpha 0 --r 0 --eta1 1 --eta2 1 --delta0 0 "
      "--x-count 161 --p-count 161 --out " +
          dir.string(),
      dir / "run.log");
  CHECK(res.exit_code == 0);
  const auto rows = read_csv(dir / "wigner.csv");
  REQUIRE(!rows.empty());
  double peak = 0.0;
  for (const auto& row : rows) peak = std::max(peak, row[2]);
  CHECK(peak == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-3));

  // trapezoid re-integration of the emitted grid
  std::vector<double> xs, ps;
  for (const auto& row : rows) {
    if (xs.empty() || row[0] != xs.back()) xs.push_back(row[0]);
  }
  const std::size_t np = rows.size() / xs.size();
  double integral = 0.0;
  const double hx = xs[1] - xs[0];
  const double hp = rows[1][1] - rows[0][1];
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < np; ++j) {
      double w = 1.0;
      if (i == 0 || i + 1 == xs.size()) w *= 0.5;
      if (j == 0 || j + 1 == np) w *= 0.5;
      integral += w * rows[i * np + j][2];
    }
  }
  integral *= hx * hp;
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("negativity curve: bright-cat lossless level") {
  const fs::path dir = fresh_dir("catphase_cli_neg");
  const auto res = run_cli(
      "negativity --alpha 10 --eta1 1 --eta2 1 --r-min 0.1 --r-max 0.9 "
      "--r-count 3 --with-numeric false --out " +
          dir.string(),
      dir / "run.log");
  CHECK(res.exit_code == 0);
  const auto rows = read_csv(dir / "negativity.csv");
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CHECK(row[2] == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-9));
    CHECK(row[1] == doctest::Approx(10.0 * std::log10(std::exp(2 * row[0])))
                        .epsilon(1e-12));
  }
}

TEST_CASE("sweep reruns are byte-identical across thread counts") {
  const fs::path dir = fresh_dir("catphase_cli_sweep");
  const std::string common =
      "sweep --alpha-min 2 --alpha-max 2 --alpha-count 1 "
      "--eta-min 0.975 --eta-max 1 --eta-count 2 "
      "--coarse-delta0 7 --coarse-r 5 --refine-starts 1 --out ";
  const auto first = run_cli(common + (dir / "a").string() + " --threads 1",
                             dir / "a.log");
  const auto second = run_cli(common + (dir / "b").string() + " --threads 3",
                              dir / "b.log");
  CHECK(first.exit_code == 0);
  CHECK(second.exit_code == 0);
  CHECK(slurp(dir / "a" / "sweep.csv") == slurp(dir / "b" / "sweep.csv"));
  // the manifest differs only in the threads key
  const std::string ma = slurp(dir / "a" / "sweep_manifest.json");
  CHECK(ma.find("\"command\": \"sweep\"") != std::string::npos);

  const auto rows = read_csv(dir / "a" / "sweep.csv");
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row[6] > 0.0);  // ratio
    CHECK(row[6] <= 1.0);
    CHECK(row[7] == 1.0);  // valid
  }
}

TEST_CASE("landscape emits matrix, minima and manifest") {
  const fs::path dir = fresh_dir("catphase_cli_landscape");
  const auto res = run_cli(
      "landscape --alpha 2 --eta2 0.975 --delta0-min 0 --delta0-max 1.2 "
      "--delta0-count 9 --r-min 0 --r-max 1.2 --r-count 7 --out " +
          dir.string(),
      dir / "run.log");
  CHECK(res.exit_code == 0);
  const auto rows = read_csv(dir / "landscape.csv");
  CHECK(rows.size() == 9 * 7);
  // delta0 = 0 column pinned at p_tot = 1
  for (const auto& row : rows)
    if (row[0] == 0.0) CHECK(row[2] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(fs::exists(dir / "landscape_minima.csv"));
  CHECK(fs::exists(dir / "landscape_manifest.json"));
}

TEST_CASE("validate subcommand passes its cross-method suites") {
  const fs::path dir = fresh_dir("catphase_cli_validate");
  const auto res = run_cli("validate", dir / "run.log");
  CHECK(res.exit_code == 0);
  CHECK(res.log.find("FAIL") == std::string::npos);
  CHECK(res.log.find("PASS closed-vs-combinatorial band") !=
        std::string::npos);
}
