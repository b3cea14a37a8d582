#pragma once
// Sweep driver shared by the CLI and the test suite: k0 grids, CSV output,
// figure presets, verification checks.

#include <iosfwd>
#include <string>
#include <vector>

#include "edgescatter/entanglement.hpp"
#include "edgescatter/scattering_engine.hpp"

namespace edgescatter {

struct SweepConfig {
  Model model = Model::chain;
  int m = 2;
  double u_prime = 10.0;
  std::string initial = "udd";
  double k_min = 0.01;
  double k_max = 3.131592653589793; // pi - 0.01
  int k_steps = 1000;
  CombineMode combine = CombineMode::weighted;
  std::string output = "sweep.csv";
  int threads = 0; // 0 = hardware concurrency

  void validate() const; // throws std::invalid_argument
  ScatterProblem problem(double k0) const;
};

struct SweepRow {
  double k0, E, R, T, neg_R, neg_T, neg_total;
  bool nan = false; // band-edge / singular point: numeric fields are NaN
};

struct SweepSummary {
  double peak_T = 0.0, peak_T_k0 = 0.0;
  double peak_neg = 0.0, peak_neg_k0 = 0.0;
  long nan_points = 0;
};

// Evaluate the grid (parallel, deterministic ordering).
std::vector<SweepRow> sweep_rows(const SweepConfig& cfg);

// Peak T / peak neg_total and their locations over the non-NaN rows.
SweepSummary summarize(const std::vector<SweepRow>& rows);

// Rows -> CSV at cfg.output (header k0,E,R,T,neg_R,neg_T,neg_total, 17
// significant digits, '\n' newlines); returns the summary.
SweepSummary run_sweep(const SweepConfig& cfg);

std::string summary_line(const SweepConfig& cfg, const SweepSummary& s);

// Figure presets: one sweep per curve, deterministic file names rooted at
// out_dir. Returns the configs it ran (output fields filled in).
std::vector<SweepConfig> figure_preset(const std::string& name,
                                       const std::string& out_dir,
                                       int threads);

struct VerifyCheck {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Oracle suites per scope: "chain" (wave matching, polarized reduction,
// unitarity), "zpnr" (unitarity, polarized reduction), "greens" (quadrature
// vs closed forms), "all".
std::vector<VerifyCheck> verify_scope(const std::string& scope);

} // namespace edgescatter
