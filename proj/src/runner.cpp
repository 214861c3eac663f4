#include "gmc/runner.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "gmc/classical.hpp"
#include "gmc/entanglement.hpp"
#include "gmc/haar.hpp"
#include "gmc/microcanonical.hpp"
#include "gmc/quadrature.hpp"
#include "gmc/symplectic.hpp"
#include "gmc/teleportation.hpp"
#include "gmc/version.hpp"

using nlohmann::json;

namespace gmc {

namespace {

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string num(double x) { return fmt::format("{:.12g}", x); }

double zsq_of_energy(double e) {
  return (e + std::sqrt(std::max(e * e - 4.0, 0.0))) / 2.0;
}

EnsembleVariant variant_of(const RunConfig& cfg) {
  return cfg.fixed_total ? EnsembleVariant::FixedTotal : EnsembleVariant::SolidSimplex;
}

/// Commented metadata header shared by every emitted file.
std::string metadata_header(const RunConfig& cfg) {
  std::ostringstream os;
  os << "# gmc " << cfg.command << "\n";
  os << "# version: " << kVersion << "\n";
  if (!cfg.no_timestamp) os << "# timestamp: " << iso_timestamp() << "\n";
  os << "# seed: " << cfg.seed << "\n";
  if (cfg.command == "entropy") {
    os << "# modes: " << cfg.modes << "\n# energy: " << num(cfg.energy)
       << "\n# reduction: " << cfg.reduction << "\n# samples: " << cfg.samples
       << "\n# ensemble: " << (cfg.fixed_total ? "fixed-total" : "solid-simplex")
       << "\n# random-mode: " << (cfg.random_mode ? 1 : 0) << "\n";
  } else if (cfg.command == "figure1") {
    os << "# emin: " << num(cfg.emin) << "\n# emax: " << num(cfg.emax)
       << "\n# grid-points: " << cfg.grid_points << "\n# quad-nodes: " << cfg.quad_nodes
       << "\n# policy-nodes: " << cfg.policy_nodes << "\n";
  } else if (cfg.command == "teleport-curve") {
    os << "# squeezing: " << num(cfg.squeezing) << "\n# emin: " << num(cfg.emin)
       << "\n# emax: " << num(cfg.emax) << "\n# grid-points: " << cfg.grid_points
       << "\n# samples: " << cfg.samples << "\n";
  } else if (cfg.command == "classical-threshold") {
    os << "# energy: " << num(cfg.energy) << "\n# quad-nodes: " << cfg.quad_nodes
       << "\n# policy-nodes: " << cfg.policy_nodes << "\n# mc-samples: " << cfg.mc_samples
       << "\n# relax-energy-bound: " << (cfg.relax_energy_bound ? 1 : 0) << "\n";
  } else if (cfg.command == "crossover") {
    os << "# squeezing: " << num(cfg.squeezing) << "\n# tol: " << num(cfg.tol)
       << "\n# quad-nodes: " << cfg.quad_nodes << "\n# policy-nodes: " << cfg.policy_nodes
       << "\n";
  }
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot open output file '{}'", path));
  out << content;
}

json config_json(const RunConfig& cfg) {
  return json{{"command", cfg.command},
              {"seed", cfg.seed},
              {"modes", cfg.modes},
              {"energy", cfg.energy},
              {"reduction", cfg.reduction},
              {"samples", cfg.samples},
              {"squeezing", cfg.squeezing},
              {"squeezings", cfg.squeezings},
              {"quad_nodes", cfg.quad_nodes},
              {"policy_nodes", cfg.policy_nodes},
              {"grid_points", cfg.grid_points},
              {"emin", cfg.emin},
              {"emax", cfg.emax},
              {"tol", cfg.tol},
              {"mc_samples", cfg.mc_samples},

              {"fixed_total", cfg.fixed_total},
              {"random_mode", cfg.random_mode},
              {"relax_energy_bound", cfg.relax_energy_bound}};
}

void write_summary(const RunConfig& cfg, const json& results, double wall_seconds) {
  if (cfg.output.empty()) return;
  json summary{{"command", cfg.command},
               {"version", kVersion},
               {"config", config_json(cfg)},
               {"results", results}};
  if (!cfg.no_timestamp) {
    summary["timestamp"] = iso_timestamp();
    summary["wall_time_s"] = wall_seconds;
  }
  write_file(cfg.output + ".json", summary.dump(2) + "\n");
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

// ---------------------------------------------------------------------------

int run_entropy(const RunConfig& cfg) {
  Stopwatch watch;
  EntropySamplingOptions opts;
  opts.variant = variant_of(cfg);
  opts.random_mode = cfg.random_mode;
  opts.seed = cfg.seed;
  opts.workers = cfg.workers;
  EntropyStats stats = entropy_samples(cfg.reduction, cfg.modes, cfg.energy, cfg.samples, opts);

  double gap = std::numeric_limits<double>::quiet_NaN();
  if (cfg.reduction == 1) gap = sigma_gap(stats, cfg.modes, cfg.energy);

  std::ostringstream os;
  os << metadata_header(cfg);
  os << "n,E,m,samples,seed,mean,std,max_observed,smax,sigma_gap\n";
  os << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", cfg.modes, num(cfg.energy),
                    cfg.reduction, cfg.samples, cfg.seed, num(stats.entropy.mean()),
                    num(stats.entropy.stddev()), num(stats.entropy.max()), num(stats.smax),
                    num(gap));
  std::string table = os.str();
  if (!cfg.output.empty()) write_file(cfg.output, table);
  std::cout << table;

  if (!cfg.histogram_output.empty()) {
    std::ostringstream hs;
    hs << metadata_header(cfg);
    hs << fmt::format("# bins: {}\n# range: [0,{}]\n", stats.histogram.bins(),
                      num(stats.histogram.hi()));
    hs << "bin_center,mass\n";
    auto mass = stats.histogram.mass();
    for (int b = 0; b < stats.histogram.bins(); ++b)
      hs << fmt::format("{},{}\n", num(stats.histogram.bin_center(b)), num(mass[static_cast<std::size_t>(b)]));
    write_file(cfg.histogram_output, hs.str());
  }

  write_summary(cfg,
                json{{"mean", stats.entropy.mean()},
                     {"std", stats.entropy.stddev()},
                     {"max_observed", stats.entropy.max()},
                     {"smax", stats.smax},
                     {"sigma_gap", gap}},
                watch.seconds());
  return kExitOk;
}

int run_figure1(const RunConfig& cfg) {
  Stopwatch watch;
  std::ostringstream os;
  os << metadata_header(cfg);
  os << "E";
  for (double r : cfg.squeezings) os << fmt::format(",fbar_r{:g}", r);
  os << ",fcl\n";

  PolicyOptions popts;
  popts.nodes = cfg.policy_nodes;
  popts.quad.energy_nodes = cfg.quad_nodes;
  popts.quad.angle_nodes = cfg.quad_nodes;
  popts.workers = cfg.workers;
  popts.relax_energy_bound = cfg.relax_energy_bound;

  for (int i = 0; i < cfg.grid_points; ++i) {
    double e = cfg.emin + (cfg.emax - cfg.emin) * i / std::max(cfg.grid_points - 1, 1);
    os << num(e);
    for (double r : cfg.squeezings) os << "," << num(average_fidelity(e, r));
    BobPolicy policy = optimize_bob_policy(e, popts);
    ThresholdEvalOptions eopts;
    eopts.quad = popts.quad;
    eopts.mc_samples = 0;
    eopts.workers = cfg.workers;
    ThresholdResult th = classical_average_fidelity(e, policy, eopts);
    os << "," << num(th.value) << "\n";
  }
  std::string table = os.str();
  if (!cfg.output.empty()) write_file(cfg.output, table);
  std::cout << table;
  write_summary(cfg, json{{"grid_points", cfg.grid_points}}, watch.seconds());
  return kExitOk;
}

int run_teleport_curve(const RunConfig& cfg) {
  Stopwatch watch;
  std::ostringstream os;
  os << metadata_header(cfg);
  os << "E,r,fbar,fbar_mc,mc_stderr\n";
  for (int i = 0; i < cfg.grid_points; ++i) {
    double e = cfg.emin + (cfg.emax - cfg.emin) * i / std::max(cfg.grid_points - 1, 1);
    SampleStats mc = mc_average_fidelity(e, cfg.squeezing, cfg.samples, cfg.seed, cfg.workers);
    os << fmt::format("{},{},{},{},{}\n", num(e), num(cfg.squeezing),
                      num(average_fidelity(e, cfg.squeezing)), num(mc.mean()),
                      num(mc.std_error()));
  }
  std::string table = os.str();
  if (!cfg.output.empty()) write_file(cfg.output, table);
  std::cout << table;
  write_summary(cfg, json{{"grid_points", cfg.grid_points}}, watch.seconds());
  return kExitOk;
}

int run_classical_threshold(const RunConfig& cfg) {
  Stopwatch watch;
  PolicyOptions popts;
  popts.nodes = cfg.policy_nodes;
  popts.quad.energy_nodes = cfg.quad_nodes;
  popts.quad.angle_nodes = cfg.quad_nodes;
  popts.workers = cfg.workers;
  popts.relax_energy_bound = cfg.relax_energy_bound;
  BobPolicy policy = optimize_bob_policy(cfg.energy, popts);

  ThresholdEvalOptions eopts;
  eopts.quad = popts.quad;
  eopts.mc_samples = cfg.mc_samples;
  eopts.seed = cfg.seed;
  eopts.workers = cfg.workers;
  ThresholdResult th = classical_average_fidelity(cfg.energy, policy, eopts);

  double fit = classical_fit_value(cfg.energy);
  std::ostringstream os;
  os << metadata_header(cfg);
  os << "E,fcl,fit_value,abs_dev,quad_nodes,policy_nodes\n";
  os << fmt::format("{},{},{},{},{},{}\n", num(cfg.energy), num(th.value), num(fit),
                    num(std::abs(th.value - fit)), cfg.quad_nodes, cfg.policy_nodes);
  std::string table = os.str();
  if (!cfg.output.empty()) write_file(cfg.output, table);
  std::cout << table;

  if (!cfg.policy_output.empty()) {
    std::ostringstream ps;
    ps << metadata_header(cfg);
    ps << fmt::format("# E: {}\n# rho_max: {}\n# nodes: {}\n", num(policy.budget),
                      num(policy.rho_max), policy.nodes.size());
    ps << "rho,zeta,chi\n";
    for (const auto& node : policy.nodes)
      ps << fmt::format("{},{},{}\n", num(node.rho), num(node.zeta), num(node.chi));
    write_file(cfg.policy_output, ps.str());
  }

  write_summary(cfg,
                json{{"fcl", th.value},
                     {"fit_value", fit},
                     {"abs_dev", std::abs(th.value - fit)},
                     {"quad_error", th.quad_error},
                     {"mc_mean", th.mc_mean},
                     {"mc_std_error", th.mc_std_error},
                     {"mc_consistent", th.mc_consistent},
                     {"flagged_nodes", th.flagged_nodes}},
                watch.seconds());
  if (th.mc_checked && !th.mc_consistent) {
    std::cerr << "classical-threshold: quadrature and Monte Carlo evaluations disagree "
                 "beyond 4 combined standard errors\n";
    return kExitValidationFailure;
  }
  return kExitOk;
}

int run_crossover(const RunConfig& cfg) {
  Stopwatch watch;
  CrossoverOptions opts;
  opts.policy.nodes = cfg.policy_nodes;
  opts.policy.quad.energy_nodes = cfg.quad_nodes;
  opts.policy.quad.angle_nodes = cfg.quad_nodes;
  opts.policy.workers = cfg.workers;
  CrossoverResult res = crossover_energy(cfg.squeezing, cfg.tol, opts);

  std::ostringstream os;
  os << metadata_header(cfg);
  os << "r,found,crossover,at_lower_edge,bracket_lo,bracket_hi,tol,evaluations\n";
  os << fmt::format("{},{},{},{},{},{},{},{}\n", num(cfg.squeezing), res.found ? 1 : 0,
                    res.found ? num(res.energy) : "nan", res.at_lower_edge ? 1 : 0,
                    num(opts.lo), num(opts.hi), num(cfg.tol), res.evaluations);
  std::string table = os.str();
  if (!cfg.output.empty()) write_file(cfg.output, table);
  std::cout << table;
  write_summary(cfg,
                json{{"found", res.found},
                     {"crossover", res.found ? res.energy : std::nan("")},
                     {"at_lower_edge", res.at_lower_edge},
                     {"evaluations", res.evaluations}},
                watch.seconds());
  return kExitOk;
}

// ---------------------------------------------------------------------------

int run_validate(const RunConfig& cfg) {
  Stopwatch watch;
  auto checks = run_validation_checks(cfg);
  bool all_pass = true;
  std::ostringstream os;
  os << metadata_header(cfg);
  os << "check,tolerance,measured,pass\n";
  for (const auto& c : checks) {
    all_pass = all_pass && c.passed;
    os << fmt::format("{},{},{},{}\n", c.name, num(c.tolerance), num(c.measured),
                      c.passed ? 1 : 0);
    std::cout << fmt::format("[{}] {:<44} tol {:<12.6g} measured {:<14.6g}\n",
                             c.passed ? "PASS" : "FAIL", c.name, c.tolerance, c.measured);
  }
  if (!cfg.output.empty()) write_file(cfg.output, os.str());
  json results{{"checks", json::array()}, {"all_pass", all_pass}};
  for (const auto& c : checks)
    results["checks"].push_back(json{{"name", c.name},
                                     {"tolerance", c.tolerance},
                                     {"measured", c.measured},
                                     {"pass", c.passed}});
  write_summary(cfg, results, watch.seconds());
  std::cout << (all_pass ? "validation: all checks passed\n"
                         : "validation: FAILURES present\n");
  return all_pass ? kExitOk : kExitValidationFailure;
}

}  // namespace

std::vector<ValidationCheck> run_validation_checks(const RunConfig& cfg) {
  std::vector<ValidationCheck> checks;
  auto push = [&](const std::string& name, double tol, double measured, bool leq = true) {
    checks.push_back({name, tol, measured, leq ? measured <= tol : measured >= tol});
  };
  std::uint64_t seed = cfg.seed;

  // structural identities
  {
    double worst = 0.0;
    for (int n : {1, 2, 5}) {
      Eigen::MatrixXd omega = symplectic_form(n);
      worst = std::max(worst, (omega * omega + Eigen::MatrixXd::Identity(2 * n, 2 * n))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    push("symplectic_form_square_is_minus_identity", 1e-12, worst);
  }
  {
    double worst_orth = 0.0, worst_symp = 0.0;
    for (int n : {1, 2, 5}) {
      Eigen::MatrixXd omega = symplectic_form(n);
      for (int i = 0; i < 200; ++i) {
        RngStream rng(seed, 1000 + static_cast<std::uint64_t>(1000 * n + i));
        Eigen::MatrixXd o = sample_compact_symplectic(n, rng).matrix();
        worst_orth = std::max(worst_orth,
                              (o.transpose() * o - Eigen::MatrixXd::Identity(2 * n, 2 * n))
                                  .cwiseAbs()
                                  .maxCoeff());
        worst_symp =
            std::max(worst_symp, (o.transpose() * omega * o - omega).cwiseAbs().maxCoeff());
      }
    }
    push("compact_symplectic_orthogonality", 1e-10, worst_orth);
    push("compact_symplectic_symplecticity", 1e-10, worst_symp);
  }
  {
    double worst_purity = 0.0, worst_energy = 0.0;
    bool support_ok = true;
    for (int n : {2, 5}) {
      double budget = 10.0 * n;
      for (int i = 0; i < 400; ++i) {
        RngStream rng(seed, 2000 + static_cast<std::uint64_t>(1000 * n + i));
        EnergyVector ev = sample_energy_vector(n, budget, rng);
        support_ok = support_ok && ev.values().minCoeff() >= 2.0 && ev.total() <= budget;
        CompactSymplectic o = sample_compact_symplectic(n, rng);
        CovarianceMatrix sigma = pure_cm(ev, o);
        Eigen::MatrixXd omega = symplectic_form(n);
        worst_purity = std::max(
            worst_purity, (sigma.entries().transpose() * omega * sigma.entries() - omega)
                              .cwiseAbs()
                              .maxCoeff());
        worst_energy = std::max(worst_energy, std::abs(sigma.energy() - ev.total()));
      }
    }
    push("sampled_cm_purity", 1e-8, worst_purity);
    push("sampled_cm_energy_identity", 1e-9, worst_energy);
    push("energy_vector_support_exact", 0.5, support_ok ? 0.0 : 1.0);
  }
  {
    // empirical marginal vs closed form, n=2 E=8
    int n = 2;
    double budget = 8.0;
    std::vector<double> e1;
    e1.reserve(20000);
    for (int i = 0; i < 20000; ++i) {
      RngStream rng(seed, 3000 + static_cast<std::uint64_t>(i));
      e1.push_back(sample_energy_vector(n, budget, rng).values()(0));
    }
    double d = ks_statistic(e1, [&](double x) { return marginal_cdf(x, n, budget); });
    push("marginal_ks_n2_E8", ks_critical(0.01, e1.size()), d);
  }
  {
    // Haar average of CM entries at fixed energies (n=3, E=(4,6,8))
    EnergyVector ev((Eigen::VectorXd(3) << 4.0, 6.0, 8.0).finished(), 18.0);
    HaarAverageReport rep = haar_average_cm_check(ev, 50000, seed + 7, cfg.workers);
    push("haar_mean_offdiag_within_4se", 4.0, rep.max_offdiag_dev_se);
    push("haar_mean_diag_within_4se", 4.0, rep.max_diag_dev_se);
  }
  {
    // teleportation quadrature identity on a small grid
    double worst = 0.0;
    for (double e : {2.5, 4.0, 10.0, 50.0}) {
      for (double r : {0.0, 0.5, 1.0, 2.0}) {
        GaussLegendre gl(64, 2.0, e);
        double integral = gl.integrate([&](double u) { return per_state_fidelity(u, r); });
        worst = std::max(worst, std::abs((e - 2.0) * average_fidelity(e, r) - integral));
      }
    }
    push("teleport_quadrature_identity", 1e-10, worst);
  }
  {
    // channel form matches the closed-form integrand
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      RngStream rng(seed, 4000 + static_cast<std::uint64_t>(i));
      double e1 = rng.uniform(2.0, 40.0);
      double theta = rng.uniform(0.0, M_PI);
      double r = rng.uniform(0.0, 2.5);
      CovarianceMatrix sin_cm(squeezed_cm_2d(zsq_of_energy(e1), theta));
      double f = fidelity_pure_single_mode(sin_cm, output_cm(sin_cm, r));
      worst = std::max(worst, std::abs(f - per_state_fidelity(e1, r)));
    }
    push("teleport_channel_consistency", 1e-12, worst);
  }
  {
    // closed-form marginal vs Boltzmann limit at n=100, T=8
    int n = 100;
    double t = 8.0;
    double budget = 2.0 * n + t * n;
    double sup = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      double x = 2.0 + (5.0 * t) * i / 2000.0;
      sup = std::max(sup, std::abs(marginal_density(x, n, budget) -
                                   boltzmann_limit_density(x, t)));
    }
    push("marginal_boltzmann_supnorm_n100_T8", 0.02 / t, sup);
  }
  {
    // posterior objective: rotational covariance + vacuum-reply lower bound
    double budget = 4.0;
    QuadratureSpec spec{24, 24};
    PosteriorGrid grid(budget, spec);
    RngStream rng(seed, 5000);
    double worst = 0.0;
    std::vector<double> w;
    for (int i = 0; i < 20; ++i) {
      Eigen::Vector2d m(rng.normal() * 2.0, rng.normal() * 2.0);
      double zeta_sq = std::exp(rng.uniform(0.0, std::log(zsq_of_energy(budget))));
      double chi = rng.uniform(0.0, M_PI);
      double phi = rng.uniform(0.0, 2.0 * M_PI);
      grid.weights_at(m, w);
      double g1 = grid.objective_with(w, zeta_sq, chi);
      Eigen::Matrix2d rot = rotation2(phi);
      grid.weights_at(rot * m, w);
      double g2 = grid.objective(w, rot * squeezed_cm_2d(zeta_sq, chi) * rot.transpose());
      worst = std::max(worst, std::abs(g1 - g2));
    }
    push("posterior_rotational_covariance", 1e-9, worst);

    PolicyOptions popts;
    popts.nodes = 40;
    popts.quad = spec;
    popts.workers = cfg.workers;
    BobPolicy policy = optimize_bob_policy(budget, popts);
    ThresholdEvalOptions eopts;
    eopts.quad = spec;
    eopts.mc_samples = 0;
    double optimized = classical_average_fidelity(budget, policy, eopts).value;
    BobPolicy vacuum = policy;
    for (auto& node : vacuum.nodes) {
      node.zeta = 1.0;
      node.chi = 0.0;
    }
    double blind = classical_average_fidelity(budget, vacuum, eopts).value;
    push("policy_beats_vacuum_reply", blind - 1e-9, optimized, /*leq=*/false);
  }
  return checks;
}


std::string validate_config(const RunConfig& cfg) {
  if (cfg.command.empty()) return "command missing";
  if (cfg.workers < 0) return "workers must be >= 0";
  auto need_samples = [&]() -> std::string {
    if (cfg.samples < 1) return "samples must be >= 1";
    return "";
  };
  if (cfg.command == "entropy") {
    if (cfg.modes < 2) return "modes must be >= 2";
    if (cfg.reduction < 1) return "m must be >= 1";
    if (cfg.reduction >= cfg.modes) return "m must be < n";
    if (cfg.energy < 2.0 * cfg.modes) return "energy must be >= 2n";
    return need_samples();
  }
  if (cfg.command == "figure1") {
    if (cfg.emin <= 2.0) return "emin must be > 2";
    if (cfg.emax <= cfg.emin) return "emax must be > emin";
    if (cfg.grid_points < 1) return "grid-points must be >= 1";
    if (cfg.quad_nodes < 8) return "quad-nodes must be >= 8";
    if (cfg.policy_nodes < 2) return "policy-nodes must be >= 2";
    if (cfg.squeezings.empty()) return "squeezing list must not be empty";
    for (double r : cfg.squeezings)
      if (r < 0.0) return "squeezing must be >= 0";
    return "";
  }
  if (cfg.command == "teleport-curve") {
    if (cfg.squeezing < 0.0) return "squeezing must be >= 0";
    if (cfg.emin < 2.0) return "emin must be >= 2";
    if (cfg.emax <= cfg.emin) return "emax must be > emin";
    if (cfg.grid_points < 1) return "grid-points must be >= 1";
    return need_samples();
  }
  if (cfg.command == "classical-threshold") {
    if (cfg.energy <= 2.0) return "energy must be > 2";
    if (cfg.quad_nodes < 8) return "quad-nodes must be >= 8";
    if (cfg.policy_nodes < 2) return "policy-nodes must be >= 2";
    if (cfg.mc_samples < 0) return "mc-samples must be >= 0";
    return "";
  }
  if (cfg.command == "crossover") {
    if (cfg.squeezing <= 0.0) return "squeezing must be > 0";
    if (cfg.tol <= 0.0) return "tol must be > 0";
    if (cfg.quad_nodes < 8) return "quad-nodes must be >= 8";
    if (cfg.policy_nodes < 2) return "policy-nodes must be >= 2";
    return "";
  }
  if (cfg.command == "validate") return "";
  return fmt::format("unknown command '{}'", cfg.command);
}

int run_command(const RunConfig& cfg) {
  std::string err = validate_config(cfg);
  if (!err.empty()) {
    std::cerr << "config error: " << err << "\n";
    return kExitConfigError;
  }
  try {
    if (cfg.command == "entropy") return run_entropy(cfg);
    if (cfg.command == "figure1") return run_figure1(cfg);
    if (cfg.command == "teleport-curve") return run_teleport_curve(cfg);
    if (cfg.command == "classical-threshold") return run_classical_threshold(cfg);
    if (cfg.command == "crossover") return run_crossover(cfg);
    if (cfg.command == "validate") return run_validate(cfg);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitConfigError;
  }
  std::cerr << "config error: unknown command '" << cfg.command << "'\n";
  return kExitConfigError;
}

}  // namespace gmc
