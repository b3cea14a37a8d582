// Acceptance battery: every release-gating property of the pipeline, one
// pass/fail line per criterion. Invoked as: acceptance <path-to-cli-binary>.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "edgescatter/oracles.hpp"
#include "edgescatter/sweep.hpp"

using namespace edgescatter;
namespace fs = std::filesystem;

namespace {

const double pi = std::numbers::pi;
int n_pass = 0, n_total = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  ++n_total;
  if (pass) ++n_pass;
  std::printf("criterion %2d %-24s %s  %s\n", id, name.c_str(),
              pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

std::vector<double> grid(int n, double lo = 0.01, double hi = pi - 0.01) {
  std::vector<double> ks(n);
  for (int i = 0; i < n; ++i) ks[i] = lo + i * (hi - lo) / (n - 1);
  return ks;
}

ScatterProblem make_problem(Model model, int m, double up, int init, double k0) {
  ScatterProblem prob;
  prob.model = model;
  prob.chain.u_prime = up;
  prob.zpnr.u_prime = up;
  prob.separation = m;
  prob.k0 = k0;
  prob.initial = basis_state(init);
  return prob;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* pattern, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

// strict interior local maxima above a threshold
int count_peaks(const std::vector<double>& y, double thr) {
  int n = 0;
  for (size_t i = 1; i + 1 < y.size(); ++i)
    if (y[i] > y[i - 1] && y[i] > y[i + 1] && y[i] > thr) ++n;
  return n;
}

std::vector<double> transmission_curve(Model model, int m, double up, int init,
                                       const std::vector<double>& ks) {
  std::vector<double> ts(ks.size());
  for (size_t i = 0; i < ks.size(); ++i)
    ts[i] = scatter(make_problem(model, m, up, init, ks[i])).T;
  return ts;
}

std::vector<double> negativity_curve(Model model, int m, double up, int init,
                                     CombineMode mode, const std::vector<double>& ks) {
  std::vector<double> ns(ks.size());
  for (size_t i = 0; i < ks.size(); ++i) {
    ScatterOutcome out = scatter(make_problem(model, m, up, init, ks[i]));
    ns[i] = analyze(out.S_R, out.S_T, mode).neg_total;
  }
  return ns;
}

// peak value plus full width at half maximum by linear interpolation
struct PeakShape {
  double height = 0.0, k0 = 0.0, fwhm = 0.0;
};

PeakShape peak_shape(const std::vector<double>& ks, const std::vector<double>& ys) {
  PeakShape p;
  size_t ip = 0;
  for (size_t i = 0; i < ys.size(); ++i)
    if (ys[i] > p.height) p.height = ys[i], p.k0 = ks[i], ip = i;
  double half = p.height / 2;
  double left = ks.front(), right = ks.back();
  for (size_t i = ip; i > 0; --i)
    if (ys[i - 1] < half) {
      double w = (half - ys[i - 1]) / (ys[i] - ys[i - 1]);
      left = ks[i - 1] + w * (ks[i] - ks[i - 1]);
      break;
    }
  for (size_t i = ip; i + 1 < ys.size(); ++i)
    if (ys[i + 1] < half) {
      double w = (half - ys[i + 1]) / (ys[i] - ys[i + 1]);
      right = ks[i + 1] - w * (ks[i + 1] - ks[i]);
      break;
    }
  p.fwhm = right - left;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  if (!f) return "<unreadable:" + p.string() + ">";
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void criterion_unitarity() {
  auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  auto ks = grid(512);
  for (Model model : {Model::chain, Model::zpnr})
    for (int m : {0, 1, 2, 5})
      for (double up : {1.0, 10.0, 100.0})
        for (int init = 0; init < 8; ++init)
          for (double k0 : ks) {
            ScatterOutcome out = scatter(make_problem(model, m, up, init, k0));
            worst = std::max(worst, std::abs(out.R + out.T - 1.0));
          }
  double dt = seconds_since(t0);
  report(1, "unitarity", worst < 1e-10 && dt < 30.0,
         fmt("max |R+T-1| = %.2e (tol 1e-10), %.1f s (limit 30 s)", worst, dt));
}

void criterion_wave_matching() {
  auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  auto ks = grid(32);
  for (int m : {1, 2, 5})
    for (double up : {1.0, 10.0})
      for (const char* init : {"udd", "uuu", "udu"})
        for (double k0 : ks) {
          ScatterProblem prob = make_problem(Model::chain, m, up, spin_index(init), k0);
          ScatterOutcome eng = scatter(prob);
          WaveMatchOutcome ref = wave_matching(prob.chain, m, prob.initial, k0);
          worst = std::max(worst, std::abs(eng.R - ref.R));
          worst = std::max(worst, std::abs(eng.T - ref.T));
        }
  double dt = seconds_since(t0);
  report(2, "lattice-solve agreement", worst < 1e-10 && dt < 10.0,
         fmt("max |RT dev| = %.2e (tol 1e-10), %.1f s (limit 10 s)", worst, dt));
}

void criterion_polarized_reduction() {
  double worst = 0.0;
  auto ks = grid(512);
  for (int m : {0, 1, 2, 5})
    for (double up : {1.0, 10.0, 100.0})
      for (double k0 : ks) {
        double eng = scatter(make_problem(Model::chain, m, up, 0, k0)).T;
        worst = std::max(worst, std::abs(eng - spinless_transfer(up / 4, m, k0)));
      }
  report(3, "polarized reduction", worst < 1e-10,
         fmt("max |T dev| = %.2e (tol 1e-10)", worst));
}

void criterion_peak_structure() {
  auto ks = grid(4096);
  int c2 = count_peaks(transmission_curve(Model::chain, 2, 10, 0, ks), 0.999);
  int c5 = count_peaks(transmission_curve(Model::chain, 5, 10, 0, ks), 0.999);
  int z2 = count_peaks(transmission_curve(Model::zpnr, 2, 10, 0, ks), 0.99);
  int z5 = count_peaks(transmission_curve(Model::zpnr, 5, 10, 0, ks), 0.99);
  bool pass = c2 == 1 && c5 == 4 && z2 == 1 && z5 == 4;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "chain m=2/m=5: %d/%d peaks (want 1/4), zpnr: %d/%d (want 1/4)", c2,
                c5, z2, z5);
  report(4, "resonance comb", pass, buf);
}

void criterion_peak_suppression() {
  auto ks = grid(4096);
  bool pass = true;
  std::string detail;
  for (Model model : {Model::chain, Model::zpnr}) {
    auto up_t = transmission_curve(model, 2, 10, 0, ks);
    auto dn_t = transmission_curve(model, 2, 10, spin_index("udd"), ks);
    double up_max = *std::max_element(up_t.begin(), up_t.end());
    double dn_max = *std::max_element(dn_t.begin(), dn_t.end());
    pass = pass && dn_max < up_max;
    detail += fmt(model == Model::chain ? "chain %.3f < %.3f  " : "zpnr %.3f < %.3f",
                  dn_max, up_max);
  }
  report(5, "flipped-spin suppression", pass, detail);
}

void criterion_greens_quadrature() {
  auto t0 = std::chrono::steady_clock::now();
  ZpnrParams p;
  double worst = 0.0, worst_ratio = 0.0;
  for (double k0 : {0.5, 1.0, pi / 2, 2.0, 2.5})
    for (long m : {0L, 1L, 2L, 5L}) {
      cplx closed = m == 0 ? zpnr_green_diag(p, k0) : zpnr_green_offdiag(p, m, k0);
      QuadratureResult full = quadrature_green(p, m, k0);
      worst = std::max(worst, std::abs(full.value - closed));

      QuadratureSpec halved; // raw value only; skip the deep refinement
      halved.eta = 0.5e-3;
      halved.levels = 2;
      halved.tolerance = 10.0;
      QuadratureResult h = quadrature_green(p, m, k0, halved);
      worst_ratio = std::max(worst_ratio, std::abs(h.raw - closed) /
                                              std::abs(full.raw - closed));
    }
  double dt = seconds_since(t0);
  report(6, "resolvent quadrature", worst < 1e-3 && worst_ratio < 1.0 && dt < 60.0,
         fmt("max dev = %.2e (tol 1e-3), eta/2 ratio = %.2f (<1), %.0f s (limit 60 s)",
             worst, worst_ratio, dt));
}

void criterion_negativity_scale() {
  auto ks = grid(1000);
  bool pass = true;
  std::string detail;
  for (Model model : {Model::chain, Model::zpnr}) {
    auto wgt = negativity_curve(model, 2, 10, spin_index("udd"), CombineMode::weighted, ks);
    auto sum = negativity_curve(model, 2, 10, spin_index("udd"), CombineMode::plain_sum, ks);
    double pw = *std::max_element(wgt.begin(), wgt.end());
    double ps = *std::max_element(sum.begin(), sum.end());
    bool ok = (pw >= 0.2 && pw <= 0.4) || (ps >= 0.2 && ps <= 0.4);
    pass = pass && ok;
    detail += fmt(model == Model::chain ? "chain w=%.3f s=%.3f  " : "zpnr w=%.3f s=%.3f",
                  pw, ps);
  }
  report(7, "negativity scale", pass, detail + " (>=1 mode in [0.2,0.4])");
}

void criterion_sharpening() {
  auto ks = grid(4096);
  int udd = spin_index("udd");
  auto n10 = negativity_curve(Model::zpnr, 2, 10, udd, CombineMode::weighted, ks);
  auto n100 = negativity_curve(Model::zpnr, 2, 100, udd, CombineMode::weighted, ks);
  PeakShape p10 = peak_shape(ks, n10);
  PeakShape p100 = peak_shape(ks, n100);
  bool pass = p100.height < p10.height && p100.fwhm < p10.fwhm;
  report(8, "strong-coupling peaks", pass,
         fmt("height %.4f -> %.4f, fwhm %.4f -> %.4f", p10.height, p100.height,
             p10.fwhm, p100.fwhm));
}

void criterion_zero_coupling() {
  double worst_rt = 0.0, worst_neg = 0.0;
  auto ks = grid(512);
  for (Model model : {Model::chain, Model::zpnr})
    for (int m : {0, 2})
      for (int init : {0, 3})
        for (double k0 : ks) {
          ScatterOutcome out = scatter(make_problem(model, m, 0.0, init, k0));
          worst_rt = std::max({worst_rt, std::abs(out.T - 1.0), out.R});
          for (auto mode : {CombineMode::weighted, CombineMode::plain_sum}) {
            EntanglementReport rep = analyze(out.S_R, out.S_T, mode);
            worst_neg = std::max({worst_neg, rep.neg_R, rep.neg_T, rep.neg_total});
          }
        }
  report(9, "zero-coupling identity", worst_rt < 1e-12 && worst_neg < 1e-12,
         fmt("max |T-1|,R = %.2e, max neg = %.2e (tol 1e-12)", worst_rt, worst_neg));
}

void criterion_polarized_no_entanglement() {
  double worst = 0.0;
  auto ks = grid(512);
  for (Model model : {Model::chain, Model::zpnr})
    for (int m : {0, 2, 5})
      for (double k0 : ks) {
        ScatterOutcome out = scatter(make_problem(model, m, 10.0, 0, k0));
        for (auto mode : {CombineMode::weighted, CombineMode::plain_sum}) {
          EntanglementReport rep = analyze(out.S_R, out.S_T, mode);
          worst = std::max({worst, rep.neg_R, rep.neg_T, rep.neg_total});
        }
      }
  report(10, "polarized: no entanglement", worst < 1e-12,
         fmt("max negativity = %.2e (tol 1e-12)", worst));
}

void criterion_determinism(const std::string& cli) {
  fs::path base = fs::temp_directory_path() / "edgescatter_acceptance";
  fs::remove_all(base);
  fs::path a = base / "a", b = base / "b";
  std::string cmd_a = "\"" + cli + "\" figure fig7 --output \"" + a.string() + "\" >/dev/null";
  std::string cmd_b = "\"" + cli + "\" figure fig7 --output \"" + b.string() + "\" >/dev/null";
  int rc_a = std::system(cmd_a.c_str());
  int rc_b = std::system(cmd_b.c_str());

  bool pass = rc_a == 0 && rc_b == 0;
  int files = 0;
  if (pass) {
    for (const char* name : {"fig7_chain_m2_udd.csv", "fig7_chain_m5_udd.csv",
                             "fig7_zpnr_m2_udd.csv", "fig7_zpnr_m5_udd.csv"}) {
      std::string ca = slurp(a / name), cb = slurp(b / name);
      pass = pass && !ca.empty() && ca == cb;
      ++files;
    }
  }
  fs::remove_all(base);
  char buf[96];
  std::snprintf(buf, sizeof buf, "exit %d/%d, %d file pairs byte-compared", rc_a,
                rc_b, files);
  report(11, "repeatable figure output", pass, buf);
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli-binary>\n");
    return 2;
  }
  criterion_unitarity();
  criterion_wave_matching();
  criterion_polarized_reduction();
  criterion_peak_structure();
  criterion_peak_suppression();
  criterion_greens_quadrature();
  criterion_negativity_scale();
  criterion_sharpening();
  criterion_zero_coupling();
  criterion_polarized_no_entanglement();
  criterion_determinism(argv[1]);
  std::printf("acceptance: %d/%d criteria passed\n", n_pass, n_total);
  return n_pass == n_total ? 0 : 1;
}
