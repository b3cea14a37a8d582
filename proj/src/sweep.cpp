#include "edgescatter/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "edgescatter/oracles.hpp"

namespace edgescatter {

namespace {

const double kPi = std::numbers::pi;

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

} // namespace

void SweepConfig::validate() const {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  if (!(k_min > 0.0 && k_min < k_max && k_max < kPi))
    throw std::invalid_argument("need 0 < k-min < k-max < pi");
  if (k_steps < 2) throw std::invalid_argument("k-steps must be >= 2");
  if (threads < 0) throw std::invalid_argument("threads must be >= 0");
  spin_index(initial); // throws on a bad label
  if (output.empty()) throw std::invalid_argument("output path must not be empty");
}

ScatterProblem SweepConfig::problem(double k0) const {
  ScatterProblem prob;
  prob.model = model;
  prob.chain.u_prime = u_prime;
  prob.zpnr.u_prime = u_prime;
  prob.separation = m;
  prob.k0 = k0;
  prob.initial = basis_state(spin_index(initial));
  return prob;
}

std::vector<SweepRow> sweep_rows(const SweepConfig& cfg) {
  cfg.validate();
  const int n = cfg.k_steps;
  const double step = (cfg.k_max - cfg.k_min) / (n - 1);
  std::vector<SweepRow> rows(n);

  auto eval_point = [&](int i) {
    double k0 = cfg.k_min + i * step;
    SweepRow row{};
    row.k0 = k0;
    row.E = cfg.model == Model::chain ? chain_dispersion(ChainParams{}, k0)
                                      : zpnr_dispersion(ZpnrParams{}, k0);
    try {
      ScatterOutcome sc = scatter(cfg.problem(k0));
      EntanglementReport rep = analyze(sc.S_R, sc.S_T, cfg.combine);
      row.R = sc.R;
      row.T = sc.T;
      row.neg_R = rep.neg_R;
      row.neg_T = rep.neg_T;
      row.neg_total = rep.neg_total;
    } catch (const std::domain_error&) {
      row.nan = true;
    } catch (const resonance_singularity&) {
      row.nan = true;
    }
    if (row.nan) {
      double q = std::nan("");
      row.R = row.T = row.neg_R = row.neg_T = row.neg_total = q;
    }
    rows[i] = row;
  };

  unsigned nw = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                : std::max(1u, std::thread::hardware_concurrency());
  nw = std::min<unsigned>(nw, static_cast<unsigned>(n));
  if (nw <= 1) {
    for (int i = 0; i < n; ++i) eval_point(i);
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) eval_point(i);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nw; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
  SweepSummary s;
  bool first = true;
  for (const auto& row : rows) {
    if (row.nan) {
      ++s.nan_points;
      continue;
    }
    if (first || row.T > s.peak_T) {
      s.peak_T = row.T;
      s.peak_T_k0 = row.k0;
    }
    if (first || row.neg_total > s.peak_neg) {
      s.peak_neg = row.neg_total;
      s.peak_neg_k0 = row.k0;
    }
    first = false;
  }
  return s;
}

SweepSummary run_sweep(const SweepConfig& cfg) {
  std::vector<SweepRow> rows = sweep_rows(cfg);

  std::filesystem::path out(cfg.output);
  if (out.has_parent_path()) std::filesystem::create_directories(out.parent_path());
  std::ofstream f(out, std::ios::binary); // keep '\n' endings everywhere
  if (!f) throw std::invalid_argument("cannot open output file: " + cfg.output);
  f << "k0,E,R,T,neg_R,neg_T,neg_total\n";
  for (const auto& r : rows)
    f << fmt(r.k0) << ',' << fmt(r.E) << ',' << fmt(r.R) << ',' << fmt(r.T) << ','
      << fmt(r.neg_R) << ',' << fmt(r.neg_T) << ',' << fmt(r.neg_total) << '\n';
  f.close();
  if (!f) throw std::runtime_error("write failed: " + cfg.output);
  return summarize(rows);
}

std::string summary_line(const SweepConfig& cfg, const SweepSummary& s) {
  std::string model = cfg.model == Model::chain ? "chain" : "zpnr";
  std::string line = "sweep " + model + " m=" + std::to_string(cfg.m) +
                     " u_prime=" + fmt_short(cfg.u_prime) + " initial=" + cfg.initial +
                     ": peak T=" + fmt_short(s.peak_T) + " at k0=" + fmt_short(s.peak_T_k0) +
                     ", peak neg_total=" + fmt_short(s.peak_neg) + " at k0=" +
                     fmt_short(s.peak_neg_k0) + ", nan points=" + std::to_string(s.nan_points) +
                     " -> " + cfg.output;
  return line;
}

std::vector<SweepConfig> figure_preset(const std::string& name,
                                       const std::string& out_dir, int threads) {
  struct Curve {
    Model model;
    int m;
    double u_prime;
    const char* initial;
    const char* suffix; // appended when one curve shares m/initial with another
  };
  std::vector<Curve> curves;
  if (name == "fig4") {
    curves = {{Model::chain, 2, 10, "udd", ""},
              {Model::chain, 2, 10, "uuu", ""},
              {Model::chain, 5, 10, "udd", ""},
              {Model::chain, 5, 10, "uuu", ""}};
  } else if (name == "fig5") {
    curves = {{Model::zpnr, 2, 10, "udd", ""},
              {Model::zpnr, 2, 10, "uuu", ""},
              {Model::zpnr, 5, 10, "udd", ""},
              {Model::zpnr, 5, 10, "uuu", ""}};
  } else if (name == "fig6") {
    curves = {{Model::chain, 0, 10, "udd", ""}, {Model::zpnr, 0, 10, "udd", ""}};
  } else if (name == "fig7") {
    curves = {{Model::chain, 2, 10, "udd", ""},
              {Model::chain, 5, 10, "udd", ""},
              {Model::zpnr, 2, 10, "udd", ""},
              {Model::zpnr, 5, 10, "udd", ""}};
  } else if (name == "fig8") {
    curves = {{Model::zpnr, 2, 10, "udd", "_up10"}, {Model::zpnr, 2, 100, "udd", "_up100"}};
  } else {
    throw std::invalid_argument("unknown figure preset: " + name +
                                " (expected fig4..fig8)");
  }

  std::filesystem::create_directories(out_dir.empty() ? "." : out_dir);
  std::vector<SweepConfig> ran;
  for (const Curve& c : curves) {
    SweepConfig cfg;
    cfg.model = c.model;
    cfg.m = c.m;
    cfg.u_prime = c.u_prime;
    cfg.initial = c.initial;
    cfg.threads = threads;
    std::string model = c.model == Model::chain ? "chain" : "zpnr";
    std::filesystem::path file = std::filesystem::path(out_dir.empty() ? "." : out_dir) /
                                 (name + "_" + model + "_m" + std::to_string(c.m) + "_" +
                                  c.initial + c.suffix + ".csv");
    cfg.output = file.string();
    run_sweep(cfg);
    ran.push_back(cfg);
  }
  return ran;
}

namespace {

std::vector<double> k_grid(int n) {
  std::vector<double> ks(n);
  double lo = 0.01, hi = kPi - 0.01;
  for (int i = 0; i < n; ++i) ks[i] = lo + i * (hi - lo) / (n - 1);
  return ks;
}

VerifyCheck check_unitarity(Model model) {
  VerifyCheck c{model == Model::chain ? "chain.unitarity" : "zpnr.unitarity", 0, 1e-10,
                false};
  auto ks = k_grid(512);
  for (int m : {0, 1, 2, 5})
    for (double up : {1.0, 10.0, 100.0})
      for (int init = 0; init < 8; ++init) {
        SweepConfig cfg;
        cfg.model = model;
        cfg.m = m;
        cfg.u_prime = up;
        cfg.initial = spin_label(init);
        for (double k0 : ks) {
          ScatterOutcome sc = scatter(cfg.problem(k0));
          c.deviation = std::max(c.deviation, std::abs(sc.R + sc.T - 1.0));
        }
      }
  c.pass = c.deviation < c.tolerance;
  return c;
}

VerifyCheck check_wave_matching() {
  VerifyCheck c{"chain.wave_matching", 0, 1e-10, false};
  auto ks = k_grid(32);
  for (int m : {1, 2, 5})
    for (double up : {1.0, 10.0})
      for (const char* init : {"udd", "uuu", "udu"}) {
        SweepConfig cfg;
        cfg.m = m;
        cfg.u_prime = up;
        cfg.initial = init;
        for (double k0 : ks) {
          ScatterProblem prob = cfg.problem(k0);
          ScatterOutcome sc = scatter(prob);
          WaveMatchOutcome wm = wave_matching(prob.chain, m, prob.initial, k0);
          double dev = std::max(std::abs(sc.R - wm.R), std::abs(sc.T - wm.T));
          dev = std::max(dev, (sc.S_R - wm.reflected).cwiseAbs().maxCoeff());
          dev = std::max(dev, (sc.S_T - wm.transmitted).cwiseAbs().maxCoeff());
          c.deviation = std::max(c.deviation, dev);
        }
      }
  c.pass = c.deviation < c.tolerance;
  return c;
}

VerifyCheck check_polarized_reduction() {
  VerifyCheck c{"chain.polarized_reduction", 0, 1e-10, false};
  auto ks = k_grid(512);
  for (int m : {0, 1, 2, 5})
    for (double up : {1.0, 10.0, 100.0}) {
      SweepConfig cfg;
      cfg.m = m;
      cfg.u_prime = up;
      cfg.initial = "uuu";
      for (double k0 : ks) {
        ScatterOutcome sc = scatter(cfg.problem(k0));
        double ref = spinless_transfer(up / 4.0, m, k0);
        c.deviation = std::max(c.deviation, std::abs(sc.T - ref));
      }
    }
  c.pass = c.deviation < c.tolerance;
  return c;
}

VerifyCheck check_incidence_symmetry(Model model) {
  VerifyCheck c{model == Model::chain ? "chain.incidence_symmetry"
                                      : "zpnr.incidence_symmetry",
                0, 1e-12, false};
  auto ks = k_grid(64);
  for (int m : {1, 2, 5})
    for (int init = 0; init < 8; ++init) {
      // mirror geometry: come in from the far side with impurity roles swapped
      int swapped = (init & 4) | ((init & 1) << 1) | ((init & 2) >> 1);
      SweepConfig cfg;
      cfg.model = model;
      cfg.m = m;
      cfg.u_prime = 10.0;
      cfg.initial = spin_label(init);
      for (double k0 : ks) {
        ScatterProblem fwd = cfg.problem(k0);
        ScatterProblem rev = fwd;
        rev.incidence = Incidence::right;
        rev.initial = basis_state(swapped);
        c.deviation = std::max(c.deviation,
                               std::abs(scatter(fwd).T - scatter(rev).T));
      }
    }
  c.pass = c.deviation < c.tolerance;
  return c;
}

std::vector<VerifyCheck> check_greens() {
  ZpnrParams p;
  VerifyCheck agree{"greens.quadrature_agreement", 0, 1e-3, false};
  VerifyCheck shrink{"greens.eta_halving_ratio", 0, 1.0, false};
  for (double k0 : {0.5, 1.0, kPi / 2, 2.0, 2.5})
    for (long m : {0L, 1L, 2L, 5L}) {
      cplx closed = m == 0 ? zpnr_green_diag(p, k0) : zpnr_green_offdiag(p, m, k0);
      QuadratureResult full = quadrature_green(p, m, k0);
      agree.deviation = std::max(agree.deviation, std::abs(full.value - closed));
      QuadratureSpec half;
      half.eta = 0.5e-3;
      QuadratureResult halved = quadrature_green(p, m, k0, half);
      double d0 = std::abs(full.raw - closed);
      double d1 = std::abs(halved.raw - closed);
      shrink.deviation = std::max(shrink.deviation, d1 / d0);
    }
  agree.pass = agree.deviation < agree.tolerance;
  shrink.pass = shrink.deviation < shrink.tolerance;
  return {agree, shrink};
}

} // namespace

std::vector<VerifyCheck> verify_scope(const std::string& scope) {
  bool chain = scope == "all" || scope == "chain";
  bool zpnr = scope == "all" || scope == "zpnr";
  bool greens = scope == "all" || scope == "greens";
  if (!chain && !zpnr && !greens)
    throw std::invalid_argument("unknown verify scope: " + scope +
                                " (expected all|chain|zpnr|greens)");
  std::vector<VerifyCheck> checks;
  if (chain) {
    checks.push_back(check_wave_matching());
    checks.push_back(check_polarized_reduction());
    checks.push_back(check_unitarity(Model::chain));
    checks.push_back(check_incidence_symmetry(Model::chain));
  }
  if (zpnr) {
    checks.push_back(check_unitarity(Model::zpnr));
    checks.push_back(check_incidence_symmetry(Model::zpnr));
  }
  if (greens) {
    auto g = check_greens();
    checks.insert(checks.end(), g.begin(), g.end());
  }
  return checks;
}

} // namespace edgescatter
