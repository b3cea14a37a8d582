// Command-line front end: parameter sweeps, figure presets, oracle checks.
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "edgescatter/sweep.hpp"

using namespace edgescatter;

namespace {

// plain key=value file ('#' comments); keys are the long flag names without
// the leading dashes; command-line flags win over file values
void apply_config_file(const std::string& path,
                       const std::map<std::string, std::function<void(const std::string&)>>& setters) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read config file: " + path);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
  };
  while (std::getline(f, line)) {
    ++lineno;
    std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    size_t eq = body.find('=');
    std::string where = path + ":" + std::to_string(lineno);
    if (eq == std::string::npos)
      throw std::invalid_argument("expected key=value at " + where);
    std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    for (char& ch : key)
      if (ch == '_') ch = '-';
    auto it = setters.find(key);
    if (it == setters.end())
      throw std::invalid_argument("unknown config key '" + key + "' at " + where);
    try {
      it->second(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad value for '" + key + "' at " + where);
    }
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scattering of a conduction electron off two magnetic impurities:\n"
               "transmission/reflection and impurity entanglement sweeps for a 1D\n"
               "tight-binding chain and a phosphorene-nanoribbon edge band."};
  app.require_subcommand(1);

  SweepConfig cfg;
  std::string model_str = "chain";
  std::string combine_str = "weighted";

  auto* sweep_cmd = app.add_subcommand("sweep", "run one k0 sweep and write a CSV");
  sweep_cmd->add_option("--model", model_str, "lattice model: chain|zpnr")
      ->check(CLI::IsMember({"chain", "zpnr"}))
      ->capture_default_str();
  sweep_cmd->add_option("--m", cfg.m, "impurity separation in sites (>= 0)")
      ->capture_default_str();
  sweep_cmd->add_option("--u-prime", cfg.u_prime, "exchange strength over the hopping scale")
      ->capture_default_str();
  sweep_cmd->add_option("--initial", cfg.initial,
                        "initial spins (electron, left, right) as 3 chars over {u,d}")
      ->capture_default_str();
  sweep_cmd->add_option("--k-min", cfg.k_min, "grid start (0, pi)")->capture_default_str();
  sweep_cmd->add_option("--k-max", cfg.k_max, "grid end (0, pi)")->capture_default_str();
  sweep_cmd->add_option("--k-steps", cfg.k_steps, "grid points")->capture_default_str();
  sweep_cmd
      ->add_option("--combine-mode", combine_str, "rho_total combination: weighted|plain_sum")
      ->check([](const std::string& s) {
        return s == "weighted" || s == "plain_sum" || s == "paper_sum"
                   ? std::string{}
                   : std::string("must be weighted or plain_sum");
      })
      ->capture_default_str();
  sweep_cmd->add_option("--output", cfg.output, "CSV path")->capture_default_str();
  sweep_cmd->add_option("--threads", cfg.threads, "worker threads (0 = auto)")
      ->capture_default_str();
  std::string config_path;
  sweep_cmd->add_option("--config", config_path,
                        "plain key=value file with the flags above; flags win over the file");

  std::string preset, fig_dir = ".";
  int fig_threads = 0;
  auto* figure_cmd =
      app.add_subcommand("figure", "write the CSV curves for one figure preset");
  figure_cmd->add_option("preset", preset, "fig4|fig5|fig6|fig7|fig8")->required();
  figure_cmd->add_option("--output", fig_dir, "output directory")->capture_default_str();
  figure_cmd->add_option("--threads", fig_threads, "worker threads (0 = auto)")
      ->capture_default_str();

  std::string scope = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run the oracle cross-checks");
  verify_cmd->add_option("scope", scope, "all|chain|zpnr|greens")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2; // 2: invalid configuration
  }

  try {
    if (*sweep_cmd) {
      if (!config_path.empty()) {
        auto as_int = [](const std::string& v) {
          size_t used = 0;
          int n = std::stoi(v, &used);
          if (used != v.size()) throw std::invalid_argument(v);
          return n;
        };
        auto as_double = [](const std::string& v) {
          size_t used = 0;
          double x = std::stod(v, &used);
          if (used != v.size()) throw std::invalid_argument(v);
          return x;
        };
        auto given = [&](const char* flag) { return sweep_cmd->count(flag) != 0; };
        apply_config_file(
            config_path,
            {{"model",
              [&](const std::string& v) {
                if (v != "chain" && v != "zpnr") throw std::invalid_argument(v);
                if (!given("--model")) model_str = v;
              }},
             {"m", [&](const std::string& v) { if (!given("--m")) cfg.m = as_int(v); }},
             {"u-prime",
              [&](const std::string& v) { if (!given("--u-prime")) cfg.u_prime = as_double(v); }},
             {"initial",
              [&](const std::string& v) { if (!given("--initial")) cfg.initial = v; }},
             {"k-min",
              [&](const std::string& v) { if (!given("--k-min")) cfg.k_min = as_double(v); }},
             {"k-max",
              [&](const std::string& v) { if (!given("--k-max")) cfg.k_max = as_double(v); }},
             {"k-steps",
              [&](const std::string& v) { if (!given("--k-steps")) cfg.k_steps = as_int(v); }},
             {"combine-mode",
              [&](const std::string& v) {
                if (v != "weighted" && v != "plain_sum" && v != "paper_sum")
                  throw std::invalid_argument(v);
                if (!given("--combine-mode")) combine_str = v;
              }},
             {"output",
              [&](const std::string& v) { if (!given("--output")) cfg.output = v; }},
             {"threads",
              [&](const std::string& v) { if (!given("--threads")) cfg.threads = as_int(v); }}});
      }
      cfg.model = model_str == "zpnr" ? Model::zpnr : Model::chain;
      cfg.combine = combine_str == "weighted" ? CombineMode::weighted
                                              : CombineMode::plain_sum;
      cfg.validate();
      SweepSummary s = run_sweep(cfg);
      std::printf("%s\n", summary_line(cfg, s).c_str());
    } else if (*figure_cmd) {
      for (const SweepConfig& c : figure_preset(preset, fig_dir, fig_threads))
        std::printf("wrote %s\n", c.output.c_str());
    } else if (*verify_cmd) {
      bool all_pass = true;
      for (const VerifyCheck& c : verify_scope(scope)) {
        std::printf("%-28s deviation %.3e  tolerance %.1e  %s\n", c.name.c_str(),
                    c.deviation, c.tolerance, c.pass ? "pass" : "FAIL");
        all_pass = all_pass && c.pass;
      }
      if (!all_pass) {
        std::fprintf(stderr, "verification failed\n");
        return 1;
      }
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
