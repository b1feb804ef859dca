#include "cohcast/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

cohcast::CloneMode parse_mode(const std::string& s) {
  return s == "nonlocal" ? cohcast::CloneMode::nonlocal : cohcast::CloneMode::local;
}

void add_state_options(CLI::App* cmd, cohcast::RunConfig& cfg) {
  cmd->add_option("--family", cfg.family, "state family: mcs-mis or bds")
      ->check(CLI::IsMember({"mcs-mis", "bds"}));
  cmd->add_option("--p", cfg.p, "mixing weight for --family mcs-mis")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--beta", cfg.beta, "beta coordinates b1,b2,b3 for --family bds")
      ->delimiter(',')
      ->expected(3);
  cmd->add_option("--state", cfg.state_file,
                  "state file (JSON: x/y/T, beta, or a density matrix)");
  cmd->add_option("--density", cfg.density_file, "density-matrix file (JSON)");
}

void add_machine_options(CLI::App* cmd, cohcast::RunConfig& cfg, std::string& mode_str,
                         bool* si_flag) {
  cmd->add_option("--mode", mode_str, "cloning mode: local or nonlocal")
      ->check(CLI::IsMember({"local", "nonlocal"}));
  auto* lam = cmd->add_option("--lambda", cfg.lambda, "machine parameter")
                  ->check(CLI::Range(0.0, 0.5));
  if (si_flag) {
    auto* si = cmd->add_flag("--si", *si_flag, "state-independent machine (default)");
    si->excludes(lam);
  }
}

void add_output_options(CLI::App* cmd, cohcast::RunConfig& cfg,
                        const std::string& default_emit,
                        const std::vector<std::string>& emits) {
  cfg.emit = default_emit;
  cmd->add_option("--emit", cfg.emit, "output format")->check(CLI::IsMember(emits));
  cmd->add_option("--out", cfg.out, "write the payload to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence broadcasting via approximate two-qubit cloning"};
  app.require_subcommand(1);

  cohcast::RunConfig cfg;
  std::string mode_str;
  bool si_flag = false;

  auto* coherence =
      app.add_subcommand("coherence", "l1 coherence of a two-qubit state");
  add_state_options(coherence, cfg);
  coherence->add_option("--basis", cfg.basis,
                        "computational, bell, or a JSON unitary file");
  add_output_options(coherence, cfg, "text", {"text", "json"});

  auto* clone = app.add_subcommand("clone", "apply a cloning map and report outputs");
  add_state_options(clone, cfg);
  add_machine_options(clone, cfg, mode_str, &si_flag);
  add_output_options(clone, cfg, "json", {"json"});

  auto* tables =
      app.add_subcommand("tables", "regenerate the broadcasting-range tables");
  tables->add_option("--mode", mode_str, "restrict to one cloning mode")
      ->check(CLI::IsMember({"local", "nonlocal", "both"}));
  add_output_options(tables, cfg, "text", {"text", "json"});

  auto* verify = app.add_subcommand("verify", "run the verification batteries");
  verify->add_option("--samples", cfg.samples, "random samples per battery")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "random seed");
  std::string verify_mode;
  verify->add_option("--mode", verify_mode, "restrict to one cloning mode")
      ->check(CLI::IsMember({"local", "nonlocal"}));
  auto* verify_lambda = verify->add_option("--lambda", cfg.lambda, "machine parameter")
                            ->check(CLI::Range(0.0, 0.5));
  verify_lambda->needs(verify->get_option("--mode"));
  add_output_options(verify, cfg, "text", {"text", "json"});

  auto* region = app.add_subcommand("region", "sweep the Bell-diagonal tetrahedron");
  region->add_option("--mode", mode_str, "cloning mode")
      ->check(CLI::IsMember({"local", "nonlocal"}));
  region->add_option("--res", cfg.resolution, "grid step in beta coordinates")
      ->check(CLI::Range(1e-6, 0.1));
  add_output_options(region, cfg, "csv", {"csv", "json"});

  auto* crosscheck = app.add_subcommand(
      "crosscheck", "tabulated vs matrix-derived Bell-diagonal coherences");
  crosscheck->add_option("--mode", mode_str, "cloning mode (default both)")
      ->check(CLI::IsMember({"local", "nonlocal", "both"}));
  crosscheck->add_option("--beta", cfg.beta, "probe point b1,b2,b3")
      ->delimiter(',')
      ->expected(3);
  crosscheck->add_option("--lambda", cfg.lambda, "machine parameter")
      ->check(CLI::Range(0.0, 0.5));
  add_output_options(crosscheck, cfg, "text", {"text", "json"});

  CLI11_PARSE(app, argc, argv);

  if (!mode_str.empty() && mode_str != "both") {
    cfg.mode = parse_mode(mode_str);
    cfg.mode_set = true;
    cfg.both_modes = false;
  }
  if (!verify_mode.empty()) {
    cfg.mode = parse_mode(verify_mode);
    cfg.mode_set = true;
    cfg.both_modes = false;
  }

  if (coherence->parsed()) return cohcast::run_coherence(cfg, std::cout, std::cerr);
  if (clone->parsed()) return cohcast::run_clone(cfg, std::cout, std::cerr);
  if (tables->parsed()) return cohcast::run_tables(cfg, std::cout, std::cerr);
  if (verify->parsed()) return cohcast::run_verify(cfg, std::cout, std::cerr);
  if (region->parsed()) return cohcast::run_region(cfg, std::cout, std::cerr);
  if (crosscheck->parsed()) return cohcast::run_crosscheck(cfg, std::cout, std::cerr);
  return 0;
}
