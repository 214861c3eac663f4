// Acceptance suite: one pass/fail line per criterion, non-zero exit on any
// failure. Run a single criterion with --criterion N; default runs all.
// Seeds are fixed so every statistical check is reproducible.

#include <fmt/format.h>

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gmc/classical.hpp"
#include "gmc/entanglement.hpp"
#include "gmc/haar.hpp"
#include "gmc/microcanonical.hpp"
#include "gmc/quadrature.hpp"
#include "gmc/rng.hpp"
#include "gmc/stats.hpp"
#include "gmc/symplectic.hpp"
#include "gmc/teleportation.hpp"

using namespace gmc;

namespace {

struct Line {
  bool pass;
  std::string text;
};

std::vector<Line> g_lines;

void report(int criterion, bool pass, const std::string& detail) {
  g_lines.push_back({pass, fmt::format("[{}] criterion {}: {}",
                                       pass ? "PASS" : "FAIL", criterion, detail)});
  std::cout << g_lines.back().text << "\n" << std::flush;
}

int workers() { return 0; }  // GMC_WORKERS env or hardware default

// --- criterion 1: structural invariants ------------------------------------

bool criterion1() {
  bool pass = true;
  double worst_orth = 0.0, worst_symp = 0.0;
  const int per_n = 2500;
  for (int n : {1, 2, 5, 20}) {
    Eigen::MatrixXd omega = symplectic_form(n);
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    for (int i = 0; i < per_n; ++i) {
      RngStream rng(101, static_cast<std::uint64_t>(n) * 1000000 + static_cast<std::uint64_t>(i));
      Eigen::MatrixXd o = sample_compact_symplectic(n, rng).matrix();
      worst_orth = std::max(worst_orth, (o.transpose() * o - id).cwiseAbs().maxCoeff());
      worst_symp =
          std::max(worst_symp, (o.transpose() * omega * o - omega).cwiseAbs().maxCoeff());
    }
  }
  pass = pass && worst_orth <= 1e-10 && worst_symp <= 1e-10;
  report(1, worst_orth <= 1e-10 && worst_symp <= 1e-10,
         fmt::format("10^4 compact symplectics: max |O^T O - I| = {:.3e}, "
                     "max |O^T Omega O - Omega| = {:.3e} (tol 1e-10)",
                     worst_orth, worst_symp));

  double worst_purity = 0.0;
  bool energy_ok = true;
  for (int n : {1, 2, 5, 20}) {
    double budget = 10.0 * n;
    Eigen::MatrixXd omega = symplectic_form(n);
    for (int i = 0; i < per_n; ++i) {
      RngStream rng(102, static_cast<std::uint64_t>(n) * 1000000 + static_cast<std::uint64_t>(i));
      CovarianceMatrix sigma = sample_pure_cm(n, budget, rng);
      worst_purity = std::max(
          worst_purity,
          (sigma.entries().transpose() * omega * sigma.entries() - omega).cwiseAbs().maxCoeff());
      energy_ok = energy_ok && sigma.energy() <= budget;
    }
  }
  bool ok2 = worst_purity <= 1e-8 && energy_ok;
  pass = pass && ok2;
  report(1, ok2,
         fmt::format("10^4 microcanonical CMs: max purity residual = {:.3e} (tol 1e-8), "
                     "energy <= E exactly: {}",
                     worst_purity, energy_ok ? "yes" : "NO"));
  return pass;
}

// --- criterion 2: measure correctness ---------------------------------------

bool criterion2() {
  bool pass = true;
  struct Case {
    int n;
    double e;
  };
  for (auto [n, e] : {Case{2, 8.0}, Case{5, 50.0}, Case{20, 200.0}}) {
    std::vector<double> xs;
    xs.reserve(100000);
    for (int i = 0; i < 100000; ++i) {
      RngStream rng(200 + static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i));
      xs.push_back(sample_energy_vector(n, e, rng).values()(0));
    }
    double d = ks_statistic(xs, [&, n = n, e = e](double x) { return marginal_cdf(x, n, e); });
    double crit = ks_critical(0.01, xs.size());
    bool ok = d < crit;
    pass = pass && ok;
    report(2, ok,
           fmt::format("marginal KS (n={}, E={}): D = {:.5f} vs 1% critical {:.5f}", n, e,
                       d, crit));
  }
  // closed-form marginal vs Boltzmann limit at n=100, T=8 on [2, 2+5T]
  int n = 100;
  double t = 8.0;
  double budget = n * (t + 2.0);
  double sup = 0.0;
  for (int i = 0; i <= 5000; ++i) {
    double x = 2.0 + 5.0 * t * i / 5000.0;
    sup = std::max(sup,
                   std::abs(marginal_density(x, n, budget) - boltzmann_limit_density(x, t)));
  }
  bool ok = sup <= 0.02 / t;
  pass = pass && ok;
  report(2, ok,
         fmt::format("n=100, T=8 marginal vs Boltzmann sup-norm on [2, 2+5T]: {:.5e} "
                     "(tol {:.5e})",
                     sup, 0.02 / t));
  return pass;
}

// --- criterion 3: canonical principle ---------------------------------------

bool criterion3() {
  bool pass = true;
  // Eq. (1) mean check with the fixed-total variant: target 1 + T/2 exactly
  // (see the decisions ledger; the solid variant's finite-n mean is
  // 1 + (T/2) n/(n+1), a 17-standard-error offset at n=100).
  CmEntryStats stats =
      cm_entry_statistics(100, 1000.0, 100000, 303, workers(), EnsembleVariant::FixedTotal);
  bool ok = stats.max_dev_se <= 4.0;
  pass = pass && ok;
  report(3, ok,
         fmt::format("n=100, T=8, 10^5 samples (fixed-total): mean CM entries vs 5*delta, "
                     "max |dev|/SE = {:.2f} over {} entries (tol 4)",
                     stats.max_dev_se, (2 * 100) * (2 * 100 + 1) / 2));

  double prev = 1e300;
  bool ordered = true;
  std::ostringstream vars;
  for (int n : {5, 20, 80}) {
    double budget = n * 10.0;
    SingleModeMoments m =
        single_mode_moments(n, budget, 100000, 304, workers(), EnsembleVariant::FixedTotal);
    double v = m.xx.variance();
    vars << fmt::format("n={}: {:.4f}  ", n, v);
    ordered = ordered && v < prev;
    prev = v;
  }
  pass = pass && ordered;
  report(3, ordered,
         fmt::format("variance of sigma_11 strictly decreasing at fixed T=8: {}",
                     vars.str()));
  return pass;
}

// --- criterion 4: typical entanglement --------------------------------------

bool criterion4() {
  bool pass = true;
  struct Case {
    int n;
    double e;
    double lo, hi;
  };
  for (auto [n, e, lo, hi] : {Case{5, 50.0, 3.5, 4.5}, Case{20, 200.0, 12.1, 15.1}}) {
    EntropySamplingOptions opts;
    opts.seed = 400 + static_cast<std::uint64_t>(n);
    opts.workers = workers();
    EntropyStats stats = entropy_samples(1, n, e, 100000, opts);
    double gap = sigma_gap(stats, n, e);
    bool ok = gap >= lo && gap <= hi;
    pass = pass && ok;
    report(4, ok,
           fmt::format("sigma gap (m=1, n={}, E={}): {:.2f} in [{}, {}] "
                       "(mean {:.4f}, std {:.4f}, smax {:.4f})",
                       n, e, gap, lo, hi, stats.entropy.mean(), stats.entropy.stddev(),
                       stats.smax));
  }
  EntropySamplingOptions opts;
  opts.seed = 405;
  opts.workers = workers();
  EntropyStats thermal = entropy_samples(1, 100, 1000.0, 100000, opts);
  double f5 = mode_entropy(5.0);
  double dev = std::abs(thermal.entropy.mean() - f5);
  bool ok = dev <= 0.05;
  pass = pass && ok;
  report(4, ok,
         fmt::format("thermal mean (n=100, T=8): |S_bar - f(5)| = {:.4f} (tol 0.05)", dev));
  return pass;
}

// --- criterion 5: teleportation closed form ---------------------------------

bool criterion5() {
  bool pass = true;
  double worst = 0.0;
  for (double e : {2.5, 3.0, 5.0, 10.0, 100.0}) {
    for (double r : {0.0, 0.5, 1.0, 2.0}) {
      GaussLegendre gl(64, 2.0, e);
      double integral = gl.integrate([&](double u) { return per_state_fidelity(u, r); });
      worst = std::max(worst, std::abs((e - 2.0) * average_fidelity(e, r) - integral));
    }
  }
  bool ok = worst <= 1e-10;
  pass = pass && ok;
  report(5, ok,
         fmt::format("quadrature identity on 20 (E, r) pairs: max residual {:.3e} "
                     "(tol 1e-10)",
                     worst));

  SampleStats mc = mc_average_fidelity(10.0, 1.0, 100000, 505, workers());
  double dev = std::abs(mc.mean() - average_fidelity(10.0, 1.0));
  ok = dev <= 3.0 * mc.std_error();
  pass = pass && ok;
  report(5, ok,
         fmt::format("MC vs closed form at (E, r) = (10, 1): |dev| = {:.2e} vs 3 SE = "
                     "{:.2e}",
                     dev, 3.0 * mc.std_error()));

  double high_r = average_fidelity(10.0, 5.0);
  ok = high_r >= 0.999;
  pass = pass && ok;
  report(5, ok, fmt::format("limit r=5, E=10: value {:.6f} >= 0.999", high_r));

  double big_e = average_fidelity(1e4, 1.0);
  ok = big_e <= 0.05;
  pass = pass && ok;
  report(5, ok,
         fmt::format("limit E=10^4, r=1: value {:.6f} <= 0.05 (closed form gives "
                     "2e^r/sqrt(E) asymptote 0.0544; see decisions ledger)",
                     big_e));
  return pass;
}

// --- criterion 6: classical threshold fit ------------------------------------

bool criterion6() {
  bool pass = true;
  double worst = 0.0, worst_stretch = 0.0;
  bool mc_ok = true;
  for (double e : {2.5, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0}) {
    PolicyOptions popts;  // spec defaults: 256 nodes, 64x64 quadrature
    popts.workers = workers();
    BobPolicy policy = optimize_bob_policy(e, popts);
    ThresholdEvalOptions eopts;
    eopts.mc_samples = 200000;
    eopts.seed = 600;
    eopts.workers = workers();
    ThresholdResult res = classical_average_fidelity(e, policy, eopts);
    double dev = std::abs(res.value - classical_fit_value(e));
    worst = std::max(worst, dev);
    worst_stretch = std::max(worst_stretch, dev);
    mc_ok = mc_ok && res.mc_consistent;
    std::cout << fmt::format(
        "       E={}: F_cl = {:.6f}, fit = {:.6f}, |dev| = {:.4f}, MC {:.6f} +- {:.6f}\n",
        e, res.value, classical_fit_value(e), dev, res.mc_mean, res.mc_std_error);
  }
  bool ok = worst <= 0.005;
  pass = pass && ok;
  report(6, ok,
         fmt::format("fit deviation over E in {{2.5..8}}: max {:.4f} (tol 0.005, stretch "
                     "0.002); protocol floor exceeds the printed fit, see decisions "
                     "ledger",
                     worst));
  pass = pass && mc_ok;
  report(6, mc_ok,
         fmt::format("quadrature vs MC agreement within 4 combined SE at every E: {}",
                     mc_ok ? "yes" : "NO"));
  return pass;
}

// --- criterion 7: crossover ---------------------------------------------------

bool criterion7() {
  bool pass = true;
  CrossoverOptions opts;
  opts.policy.nodes = 192;
  opts.policy.quad = QuadratureSpec{48, 48};
  opts.policy.workers = workers();

  CrossoverResult r1 = crossover_energy(1.0, 0.01, opts);
  bool ok = r1.found && !r1.at_lower_edge && r1.energy >= 2.11 && r1.energy <= 2.21;
  pass = pass && ok;
  report(7, ok,
         r1.found
             ? fmt::format("crossover(r=1) = {:.4f}, band [2.11, 2.21]", r1.energy)
             : fmt::format("crossover(r=1): no sign change on (2, 8] (h_lo = {:.4f}, "
                           "h_hi = {:.4f}); classical benchmark exceeds the r=1 curve "
                           "on the whole bracket, see decisions ledger",
                           r1.h_lo, r1.h_hi));

  CrossoverResult r05 = crossover_energy(0.5, 0.01, opts);
  ok = r05.found && r1.found && r05.energy > r1.energy;
  pass = pass && ok;
  report(7, ok,
         r05.found ? fmt::format("crossover(r=0.5) = {:.4f} exceeds the r=1 value",
                                 r05.energy)
                   : fmt::format("crossover(r=0.5): no sign change on (2, 8] (h_lo = "
                                 "{:.4f}, h_hi = {:.4f})",
                                 r05.h_lo, r05.h_hi));
  return pass;
}

// --- criterion 8: determinism --------------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool criterion8() {
  const char* cli = std::getenv("GMC_CLI");
  if (!cli) {
    report(8, false, "GMC_CLI environment variable not set; cannot run the CLI");
    return false;
  }
  struct Job {
    std::string name;
    std::string args;
  };
  std::vector<Job> jobs = {
      {"entropy", "entropy --modes 5 --energy 50 --reduction 1 --samples 20000 --seed 7"},
      {"teleport-curve",
       "teleport-curve --squeezing 1 --emin 2.05 --emax 10 --grid-points 5 --samples "
       "20000 --seed 3"},
      {"classical-threshold",
       "classical-threshold --energy 4 --quad-nodes 24 --policy-nodes 24 --mc-samples "
       "20000 --seed 9"},
      {"figure1",
       "figure1 --emin 2.05 --emax 6 --grid-points 3 --quad-nodes 24 --policy-nodes 24 "
       "--seed 5"},
      {"crossover",
       "crossover --squeezing 1 --tol 0.1 --quad-nodes 16 --policy-nodes 16 --seed 2"},
  };
  bool pass = true;
  for (const auto& job : jobs) {
    std::string p1 = "/tmp/gmc_accept_" + job.name + "_1.csv";
    std::string p2 = "/tmp/gmc_accept_" + job.name + "_2.csv";
    std::string p8 = "/tmp/gmc_accept_" + job.name + "_8.csv";
    auto run = [&](const std::string& out, int w) {
      std::string cmd = fmt::format("{} {} --no-timestamp --workers {} --output {} "
                                    "> /dev/null 2>&1",
                                    cli, job.args, w, out);
      return std::system(cmd.c_str());
    };
    bool ok = run(p1, 1) == 0;
    ok = run(p2, 1) == 0 && ok;
    ok = run(p8, 8) == 0 && ok;
    std::string c1 = slurp(p1);
    ok = ok && !c1.empty() && c1 == slurp(p2) && c1 == slurp(p8);
    ok = ok && slurp(p1 + ".json") == slurp(p2 + ".json") &&
         slurp(p1 + ".json") == slurp(p8 + ".json");
    pass = pass && ok;
    report(8, ok,
           fmt::format("{}: rerun and workers 1 vs 8 byte-identical: {}", job.name,
                       ok ? "yes" : "NO"));
  }
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  int criterion = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      criterion = std::atoi(argv[++i]);
  }
  bool pass = true;
  auto maybe = [&](int c, bool (*fn)()) {
    if (criterion == 0 || criterion == c) pass = fn() && pass;
  };
  maybe(1, criterion1);
  maybe(2, criterion2);
  maybe(3, criterion3);
  maybe(4, criterion4);
  maybe(5, criterion5);
  maybe(6, criterion6);
  maybe(7, criterion7);
  maybe(8, criterion8);

  int failed = 0;
  for (const auto& line : g_lines) failed += line.pass ? 0 : 1;
  std::cout << fmt::format("acceptance: {} checks, {} failed\n", g_lines.size(), failed);
  return pass ? 0 : 1;
}
