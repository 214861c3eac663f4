#include <CLI11.hpp>
#include <string>

#include "gmc/runner.hpp"
#include "gmc/version.hpp"

namespace {

void add_common(CLI::App* cmd, gmc::RunConfig& cfg) {
  cmd->add_option("--seed", cfg.seed, "random seed");
  cmd->add_option("--workers", cfg.workers,
                  "worker threads (0 = GMC_WORKERS env or hardware)");
  cmd->add_option("--output", cfg.output, "CSV output path (JSON summary beside it)");
  cmd->add_flag("--no-timestamp", cfg.no_timestamp,
                "omit timestamp and wall time from outputs");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo toolkit for energy-constrained random pure Gaussian "
               "states: typical entanglement, teleportation fidelity curves and "
               "the heterodyne classical benchmark"};
  app.set_version_flag("--version", gmc::kVersion);
  app.require_subcommand(1);
  app.allow_extras(false);

  gmc::RunConfig cfg;

  CLI::App* validate = app.add_subcommand("validate", "run the validation suite");
  add_common(validate, cfg);

  CLI::App* entropy =
      app.add_subcommand("entropy", "entropy statistics of m-mode reductions");
  entropy->add_option("--modes", cfg.modes, "mode count n");
  entropy->add_option("--energy", cfg.energy, "energy budget E");
  entropy->add_option("--reduction", cfg.reduction, "reduction size m");
  entropy->add_option("--samples", cfg.samples, "Monte Carlo samples");
  entropy->add_flag("--fixed-total", cfg.fixed_total,
                    "fixed-total-energy ensemble variant");
  entropy->add_flag("--random-mode", cfg.random_mode,
                    "reduce a random mode (symmetry cross-check)");
  entropy->add_option("--histogram-output", cfg.histogram_output,
                      "write the entropy histogram to this CSV");
  add_common(entropy, cfg);

  CLI::App* figure1 = app.add_subcommand(
      "figure1", "teleportation curves vs the classical threshold on an E grid");
  figure1->add_option("--emin", cfg.emin, "grid start");
  figure1->add_option("--emax", cfg.emax, "grid end");
  figure1->add_option("--grid-points", cfg.grid_points, "grid size");
  figure1->add_option("--squeezing", cfg.squeezings,
                      "resource squeezing values (repeatable)");
  figure1->add_option("--quad-nodes", cfg.quad_nodes, "Gauss-Legendre nodes per leg");
  figure1->add_option("--policy-nodes", cfg.policy_nodes, "radial policy nodes");
  add_common(figure1, cfg);

  CLI::App* curve =
      app.add_subcommand("teleport-curve", "closed-form and Monte Carlo fidelity curve");
  curve->add_option("--squeezing", cfg.squeezing, "resource squeezing r");
  curve->add_option("--emin", cfg.emin, "grid start");
  curve->add_option("--emax", cfg.emax, "grid end");
  curve->add_option("--grid-points", cfg.grid_points, "grid size");
  curve->add_option("--samples", cfg.samples, "Monte Carlo samples per point");
  add_common(curve, cfg);

  CLI::App* classical = app.add_subcommand(
      "classical-threshold", "optimized heterodyne benchmark at one energy");
  classical->add_option("--energy", cfg.energy, "energy budget E");
  classical->add_option("--quad-nodes", cfg.quad_nodes, "Gauss-Legendre nodes per leg");
  classical->add_option("--policy-nodes", cfg.policy_nodes, "radial policy nodes");
  classical->add_option("--mc-samples", cfg.mc_samples,
                        "Monte Carlo cross-check samples (0 disables)");
  classical->add_option("--policy-output", cfg.policy_output,
                        "write the optimized policy table to this CSV");
  classical->add_flag("--relax-energy-bound", cfg.relax_energy_bound,
                      "allow replies outside the input alphabet (exploratory)");
  add_common(classical, cfg);

  CLI::App* crossover =
      app.add_subcommand("crossover", "energy where teleportation passes the benchmark");
  crossover->add_option("--squeezing", cfg.squeezing, "resource squeezing r");
  crossover->add_option("--tol", cfg.tol, "bisection tolerance");
  crossover->add_option("--quad-nodes", cfg.quad_nodes, "Gauss-Legendre nodes per leg");
  crossover->add_option("--policy-nodes", cfg.policy_nodes, "radial policy nodes");
  add_common(crossover, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : gmc::kExitConfigError;
  }

  for (CLI::App* sub : {validate, entropy, figure1, curve, classical, crossover})
    if (sub->parsed()) cfg.command = sub->get_name();

  return gmc::run_command(cfg);
}
