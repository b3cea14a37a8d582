#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "edgescatter/sweep.hpp"

using namespace edgescatter;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           fs::path("edgescatter_test_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static inline int counter = 0;
};

} // namespace

TEST_SUITE("sweep") {

TEST_CASE("config validation") {
  SweepConfig cfg;
  CHECK_NOTHROW(cfg.validate());

  SweepConfig bad = cfg;
  bad.k_min = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.k_max = 3.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.k_steps = 1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.initial = "uux";
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.m = -1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("free sweep writes an identity table") {
  TempDir tmp;
  SweepConfig cfg;
  cfg.u_prime = 0.0;
  cfg.k_steps = 17;
  cfg.output = (tmp.path / "free.csv").string();
  SweepSummary s = run_sweep(cfg);
  CHECK(s.peak_T == doctest::Approx(1.0));
  CHECK(s.nan_points == 0);

  std::string text = slurp(cfg.output);
  std::istringstream lines(text);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "k0,E,R,T,neg_R,neg_T,neg_total");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::istringstream cells(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(cells, cell, ',')) vals.push_back(std::stod(cell));
    REQUIRE(vals.size() == 7);
    CHECK(vals[2] == doctest::Approx(0.0)); // R
    CHECK(vals[3] == doctest::Approx(1.0)); // T
    CHECK(vals[4] == 0.0);
    CHECK(vals[5] == 0.0);
    CHECK(vals[6] == 0.0);
  }
  CHECK(rows == 17);
  CHECK(text.find("\r") == std::string::npos);
}

TEST_CASE("numbers round-trip at full precision") {
  TempDir tmp;
  SweepConfig cfg;
  cfg.model = Model::zpnr;
  cfg.m = 2;
  cfg.u_prime = 10.0;
  cfg.k_steps = 5;
  cfg.output = (tmp.path / "prec.csv").string();
  run_sweep(cfg);
  std::vector<SweepRow> rows = sweep_rows(cfg);

  std::istringstream lines(slurp(cfg.output));
  std::string line;
  std::getline(lines, line); // header
  for (const SweepRow& r : rows) {
    REQUIRE(std::getline(lines, line));
    std::istringstream cells(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(cells, cell, ',')) vals.push_back(std::stod(cell));
    CHECK(vals[0] == r.k0); // exact after a %.17g round trip
    CHECK(vals[1] == r.E);
    CHECK(vals[2] == r.R);
    CHECK(vals[3] == r.T);
    CHECK(vals[6] == r.neg_total);
  }
}

TEST_CASE("runs are deterministic across thread counts") {
  TempDir tmp;
  SweepConfig cfg;
  cfg.m = 5;
  cfg.u_prime = 10.0;
  cfg.k_steps = 101;
  cfg.threads = 1;
  cfg.output = (tmp.path / "a.csv").string();
  run_sweep(cfg);
  cfg.threads = 4;
  cfg.output = (tmp.path / "b.csv").string();
  run_sweep(cfg);
  CHECK(slurp(tmp.path / "a.csv") == slurp(tmp.path / "b.csv"));
}

TEST_CASE("points at the band edge become nan rows") {
  TempDir tmp;
  SweepConfig cfg;
  cfg.k_min = 1e-10; // inside the validated range, outside the kernel domain
  cfg.k_max = 0.5;
  cfg.k_steps = 4;
  cfg.u_prime = 10.0;
  cfg.output = (tmp.path / "edge.csv").string();
  SweepSummary s = run_sweep(cfg);
  CHECK(s.nan_points == 1);
  std::string text = slurp(cfg.output);
  CHECK(text.find(",nan") != std::string::npos);
  std::string line = summary_line(cfg, s);
  CHECK(line.find("nan points=1") != std::string::npos);
  CHECK(line.find("peak T=") != std::string::npos);
}

TEST_CASE("figure presets write the documented files") {
  TempDir tmp;
  auto ran = figure_preset("fig8", tmp.path.string(), 0);
  CHECK(ran.size() == 2);
  CHECK(fs::exists(tmp.path / "fig8_zpnr_m2_udd_up10.csv"));
  CHECK(fs::exists(tmp.path / "fig8_zpnr_m2_udd_up100.csv"));

  auto ran6 = figure_preset("fig6", tmp.path.string(), 0);
  CHECK(ran6.size() == 2);
  CHECK(fs::exists(tmp.path / "fig6_chain_m0_udd.csv"));
  CHECK(fs::exists(tmp.path / "fig6_zpnr_m0_udd.csv"));

  CHECK_THROWS_AS(figure_preset("fig9", tmp.path.string(), 0), std::invalid_argument);
}

TEST_CASE("verification checks pass on the built code") {
  // the fast chain-side subset; the full battery runs in the acceptance suite
  for (const VerifyCheck& c : verify_scope("chain")) {
    INFO(c.name, " deviation ", c.deviation, " tolerance ", c.tolerance);
    CHECK(c.pass);
  }
  CHECK_THROWS_AS(verify_scope("bogus"), std::invalid_argument);
}

} // TEST_SUITE
