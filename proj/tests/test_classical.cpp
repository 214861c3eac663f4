#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "gmc/classical.hpp"
#include "gmc/quadrature.hpp"
#include "gmc/rng.hpp"
#include "gmc/symplectic.hpp"
#include "gmc/teleportation.hpp"

using namespace gmc;

namespace {

double zsq_of(double e) { return (e + std::sqrt(std::max(e * e - 4.0, 0.0))) / 2.0; }

QuadratureSpec small_quad() { return QuadratureSpec{32, 32}; }

PolicyOptions small_policy(int nodes = 48) {
  PolicyOptions opts;
  opts.nodes = nodes;
  opts.quad = small_quad();
  opts.workers = 2;
  return opts;
}

// closed form for the blind vacuum reply: mean of 2/sqrt(E1+2) over U[2, E]
double vacuum_blind_closed(double e) { return 4.0 * (std::sqrt(e + 2.0) - 2.0) / (e - 2.0); }

}  // namespace

TEST_CASE("heterodyne density: point values, normalization, outcome covariance") {
  CovarianceMatrix vac = CovarianceMatrix::vacuum(1);
  CHECK(heterodyne_density(Eigen::Vector2d::Zero(), vac) ==
        doctest::Approx(1.0 / (4.0 * M_PI)).epsilon(1e-14));

  // normalization over the plane for a squeezed input
  CovarianceMatrix sq(squeezed_cm_2d(4.0, 0.0));
  GaussLegendre gx(80, -30.0, 30.0), gy(80, -12.0, 12.0);
  double total = 0.0;
  for (std::size_t i = 0; i < gx.nodes.size(); ++i)
    for (std::size_t j = 0; j < gy.nodes.size(); ++j)
      total += gx.weights[i] * gy.weights[j] *
               heterodyne_density(Eigen::Vector2d(gx.nodes[i], gy.nodes[j]), sq);
  CHECK(std::abs(total - 1.0) < 1e-8);

  // sampled outcomes have covariance sigma + I
  SampleStats mx2, my2;
  for (int i = 0; i < 100000; ++i) {
    RngStream rng(61, static_cast<std::uint64_t>(i));
    double g1 = rng.normal(), g2 = rng.normal();
    // Cholesky of diag(5, 1.25)
    mx2.add(5.0 * g1 * g1);
    my2.add(1.25 * g2 * g2);
  }
  CHECK(std::abs(mx2.mean() - 5.0) < 4.0 * mx2.std_error());
  CHECK(std::abs(my2.mean() - 1.25) < 4.0 * my2.std_error());
}

TEST_CASE("posterior objective: positivity, vacuum optimum at tiny budgets") {
  // E -> 2: the alphabet collapses to the vacuum; the vacuum reply dominates
  double budget = 2.0001;
  PosteriorGrid grid(budget, small_quad());
  std::vector<double> w;
  for (double rho : {0.0, 0.7, 2.2}) {
    grid.weights_at(Eigen::Vector2d(rho, 0.0), w);
    double vac = grid.objective_with(w, 1.0, 0.0);
    CHECK(vac > 0.0);
    for (double z2 : {1.2, 1.5, 2.5}) {
      for (double chi : {0.0, 1.0}) CHECK(grid.objective_with(w, z2, chi) < vac);
    }
  }
}

TEST_CASE("posterior objective: rotational covariance") {
  PosteriorGrid grid(6.0, small_quad());
  RngStream rng(62, 0);
  std::vector<double> w1, w2;
  for (int i = 0; i < 30; ++i) {
    Eigen::Vector2d m(rng.normal() * 1.5, rng.normal() * 1.5);
    double z2 = std::exp(rng.uniform(0.0, std::log(zsq_of(6.0))));
    double chi = rng.uniform(0.0, M_PI);
    double phi = rng.uniform(0.0, 2.0 * M_PI);
    grid.weights_at(m, w1);
    double g1 = grid.objective_with(w1, z2, chi);
    Eigen::Matrix2d rot = rotation2(phi);
    grid.weights_at(rot * m, w2);
    double g2 = grid.objective(w2, rot * squeezed_cm_2d(z2, chi) * rot.transpose());
    CHECK(std::abs(g1 - g2) < 1e-9);
  }
}

TEST_CASE("posterior objective public surface: validation") {
  CovarianceMatrix vac = CovarianceMatrix::vacuum(1);
  CHECK(posterior_objective(Eigen::Vector2d(0.3, -0.1), vac, 4.0) > 0.0);
  CHECK_THROWS_AS(posterior_objective(Eigen::Vector2d::Zero(), vac, 4.0,
                                      QuadratureSpec{4, 4}),
                  std::invalid_argument);
  CovarianceMatrix thermal(Eigen::Matrix2d::Identity() * 2.0);
  CHECK_THROWS_AS(posterior_objective(Eigen::Vector2d::Zero(), thermal, 4.0),
                  std::domain_error);
  CovarianceMatrix hot(squeezed_cm_2d(zsq_of(40.0), 0.0));
  CHECK_THROWS_AS(posterior_objective(Eigen::Vector2d::Zero(), hot, 4.0),
                  std::domain_error);
}

TEST_CASE("optimizer matches or beats a brute-force grid at every node") {
  double budget = 8.0;
  PolicyOptions opts = small_policy(20);
  BobPolicy policy = optimize_bob_policy(budget, opts);
  PosteriorGrid grid(budget, opts.quad);
  double zmax2 = zsq_of(budget);
  std::vector<double> w;
  for (const auto& node : policy.nodes) {
    grid.weights_at(Eigen::Vector2d(node.rho, 0.0), w);
    double node_value = grid.objective_with(w, node.zeta * node.zeta, node.chi);
    // independent, denser brute-force grid than the optimizer's seed
    double brute = 0.0;
    for (int iz = 0; iz < 60; ++iz) {
      double z2 = std::exp(std::log(zmax2) * iz / 59.0);
      for (int ic = 0; ic < 40; ++ic) {
        double chi = M_PI * ic / 40.0;
        brute = std::max(brute, grid.objective_with(w, z2, chi));
      }
    }
    CHECK(node_value >= brute - 1e-6);
  }
}

TEST_CASE("policy structure: tiny budgets give vacuum replies, zeta grows with rho") {
  // E = 2.0001: the alphabet collapses to the vacuum
  BobPolicy tiny = optimize_bob_policy(2.0001, small_policy(16));
  for (const auto& node : tiny.nodes) CHECK(node.zeta ==doctest::Approx(1.0).epsilon(1e-2));
  CHECK(tiny.nodes.front().chi == 0.0);

  // E = 8: monotone squeezing response on the informative outcome range
  BobPolicy policy = optimize_bob_policy(8.0, small_policy(20));
  CHECK(policy.nodes.front().rho == 0.0);
  CHECK(policy.nodes.front().chi == 0.0);
  // restrict to nodes carrying outcome mass (the far tail is flat)
  double rho_cut = 0.75 * policy.rho_max;
  double prev = policy.nodes.front().zeta;
  for (const auto& node : policy.nodes) {
    if (node.rho > rho_cut) break;
    CHECK(node.zeta >= prev - 5e-3);
    prev = std::max(prev, node.zeta);
  }
  CHECK(policy.nodes.back().zeta * policy.nodes.back().zeta <= zsq_of(8.0) * (1 + 1e-9));
}

TEST_CASE("policy interpolation and outcome covariance") {
  BobPolicy policy = optimize_bob_policy(6.0, small_policy(24));
  auto [z_lo, c_lo] = policy.reply_params(0.0);
  CHECK(z_lo >= 1.0);
  CHECK(c_lo == 0.0);
  // beyond rho_max the last node is used
  auto [z_hi, c_hi] = policy.reply_params(policy.rho_max * 3.0);
  CHECK(z_hi == doctest::Approx(policy.nodes.back().zeta));
  CHECK(c_hi == doctest::Approx(policy.nodes.back().chi));

  // rotating the outcome conjugates the reply exactly
  RngStream rng(63, 0);
  for (int i = 0; i < 50; ++i) {
    Eigen::Vector2d m(rng.normal(), rng.normal());
    double phi = rng.uniform(0.0, 2 * M_PI);
    Eigen::Matrix2d rot = rotation2(phi);
    Eigen::Matrix2d direct = policy.reply(rot * m);
    Eigen::Matrix2d conj = rot * policy.reply(m) * rot.transpose();
    CHECK((direct - conj).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("threshold evaluation: E -> 2 limit, vacuum lower bound, MC agreement") {
  // E -> 2: vacuum in, vacuum out, fidelity 1
  BobPolicy tiny = optimize_bob_policy(2.0001, small_policy(16));
  ThresholdEvalOptions eopts;
  eopts.quad = small_quad();
  eopts.mc_samples = 20000;
  eopts.seed = 64;
  eopts.workers = 2;
  ThresholdResult near_two = classical_average_fidelity(2.0001, tiny, eopts);
  CHECK(near_two.value > 0.999);
  CHECK(near_two.mc_consistent);

  // optimized policy weakly beats the constant vacuum reply
  for (double budget : {3.0, 8.0}) {
    BobPolicy policy = optimize_bob_policy(budget, small_policy(32));
    BobPolicy vacuum = policy;
    for (auto& node : vacuum.nodes) {
      node.zeta = 1.0;
      node.chi = 0.0;
    }
    ThresholdEvalOptions quad_only;
    quad_only.quad = small_quad();
    quad_only.mc_samples = 0;
    double opt = classical_average_fidelity(budget, policy, quad_only).value;
    double vac = classical_average_fidelity(budget, vacuum, quad_only).value;
    CHECK(opt >= vac - 1e-9);
    // the vacuum-reply value has a closed form; quadrature must match it
    CHECK(vac == doctest::Approx(vacuum_blind_closed(budget)).epsilon(1e-6));
  }

  // quadrature vs Monte Carlo at E = 8
  BobPolicy policy = optimize_bob_policy(8.0, small_policy(64));
  eopts.mc_samples = 50000;
  eopts.seed = 65;
  ThresholdResult res = classical_average_fidelity(8.0, policy, eopts);
  CHECK(res.mc_checked);
  CHECK(res.mc_consistent);
  CHECK(res.flagged_nodes == 0);
  CHECK(res.value > 0.0);
  CHECK(res.value <= 1.0);
}

TEST_CASE("threshold decreases with E and exceeds the teleportation curve at r=1") {
  // Under this protocol (zero-mean pure replies, overlap fidelity) the
  // classical benchmark decreases in E but stays above the blind vacuum
  // reply, which itself beats the r=1 teleportation average at E=8. The
  // printed fit constant corresponds to a strictly lower benchmark; see the
  // acceptance report and the fit-deviation column of the CLI.
  ThresholdEvalOptions quad_only;
  quad_only.quad = small_quad();
  quad_only.mc_samples = 0;
  double prev = 2.0;
  std::vector<double> values;
  for (double e : {2.1, 3.0, 5.0, 8.0}) {
    BobPolicy policy = optimize_bob_policy(e, small_policy(48));
    double v = classical_average_fidelity(e, policy, quad_only).value;
    CHECK(v < prev);
    CHECK(v >= vacuum_blind_closed(e) - 1e-6);
    values.push_back(v);
    prev = v;
  }
  CHECK(values.back() > average_fidelity(8.0, 1.0));

  // far beyond the fit range the benchmark keeps decreasing toward zero
  BobPolicy wide = optimize_bob_policy(50.0, small_policy(64));
  double far = classical_average_fidelity(50.0, wide, quad_only).value;
  CHECK(far < values.back());
}

TEST_CASE("fit helper evaluates the printed formula") {
  CHECK(classical_fit_value(2.0) == doctest::Approx(1.0));
  CHECK(classical_fit_value(8.0) ==
        doctest::Approx(1.0 - 0.317576 * std::asinh(std::sqrt(6.0))).epsilon(1e-14));
  CHECK(classical_fit_value(8.0) == doctest::Approx(0.4828887833452093).epsilon(1e-12));
}

TEST_CASE("crossover solver: r=5 crosses near E=2; r=1 reports no crossover on (2,8]") {
  CrossoverOptions opts;
  opts.policy = small_policy(40);
  opts.lo = 2.001;
  opts.hi = 8.0;

  // r = 5: quantum fidelity ~1 everywhere, crossover collapses to the lower edge
  CrossoverResult fast = crossover_energy(5.0, 0.01, opts);
  CHECK(fast.found);
  CHECK(fast.energy < 2.05);

  // r = 1: under this protocol the classical benchmark stays above the
  // teleportation curve on the whole bracket (see decisions ledger), so the
  // solver must report the absence of a sign change rather than invent one.
  CrossoverResult r1 = crossover_energy(1.0, 0.05, opts);
  CHECK_FALSE(r1.found);
  CHECK(r1.h_lo < 0.0);
  CHECK(r1.h_hi < 0.0);

  CHECK_THROWS_AS(crossover_energy(-1.0, 0.01, opts), std::domain_error);
  CHECK_THROWS_AS(crossover_energy(1.0, 0.0, opts), std::domain_error);
}
