#include "gmc/classical.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gmc/microcanonical.hpp"
#include "gmc/parallel.hpp"
#include "gmc/quadrature.hpp"
#include "gmc/rng.hpp"
#include "gmc/teleportation.hpp"

namespace gmc {

namespace {

double zsq_of_energy(double e) {
  return (e + std::sqrt(std::max(e * e - 4.0, 0.0))) / 2.0;
}

double tail_radius(double budget) {
  // Outcome tail mass beyond rho_max below 1e-8 for the widest input.
  return 6.5 * std::sqrt(zsq_of_energy(budget) + 1.0);
}

struct GoldenResult {
  double x;
  double value;
};

template <typename F>
GoldenResult golden_max(F&& f, double lo, double hi, int iters) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < iters; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

}  // namespace

double classical_fit_value(double budget) {
  if (budget < 2.0) throw std::domain_error("classical_fit_value: E must be >= 2");
  return 1.0 - kClassicalFitSlope * std::asinh(std::sqrt(budget - 2.0));
}

double heterodyne_density(const Eigen::Vector2d& m, const CovarianceMatrix& sigma_in) {
  if (sigma_in.modes() != 1)
    throw std::invalid_argument("heterodyne_density: single-mode states only");
  Eigen::Matrix2d c = sigma_in.entries() + Eigen::Matrix2d::Identity();
  double det = c(0, 0) * c(1, 1) - c(0, 1) * c(1, 0);
  double quad = (c(1, 1) * m(0) * m(0) - 2.0 * c(0, 1) * m(0) * m(1) +
                 c(0, 0) * m(1) * m(1)) /
                det;
  return std::exp(-0.5 * quad) / (2.0 * M_PI * std::sqrt(det));
}

PosteriorGrid::PosteriorGrid(double budget, QuadratureSpec spec) : budget_(budget) {
  if (budget <= 2.0)
    throw std::invalid_argument("PosteriorGrid: budget must exceed 2");
  if (spec.energy_nodes < 8 || spec.angle_nodes < 8)
    throw std::invalid_argument("PosteriorGrid: quadrature node counts below 8");

  GaussLegendre gt(spec.energy_nodes, 0.0, 1.0);
  GaussLegendre gth(spec.angle_nodes, 0.0, M_PI);
  int total = spec.energy_nodes * spec.angle_nodes;
  a_.resize(total);
  b_.resize(total);
  d_.resize(total);
  ica_.resize(total);
  icb_.resize(total);
  icd_.resize(total);
  wq_.resize(total);
  w_plain_.resize(total);

  int idx = 0;
  for (int i = 0; i < spec.energy_nodes; ++i) {
    double t = gt.nodes[static_cast<std::size_t>(i)];
    double we = gt.weights[static_cast<std::size_t>(i)] * 2.0 * t;  // dE1/(E-2) = 2t dt
    double e1 = 2.0 + (budget - 2.0) * t * t;
    double z2 = zsq_of_energy(e1);
    double iz2 = 1.0 / z2;
    for (int j = 0; j < spec.angle_nodes; ++j, ++idx) {
      double th = gth.nodes[static_cast<std::size_t>(j)];
      double wth = gth.weights[static_cast<std::size_t>(j)] / M_PI;
      double c = std::cos(th), s = std::sin(th);
      double av = c * c * z2 + s * s * iz2;
      double bv = s * s * z2 + c * c * iz2;
      double dv = c * s * (z2 - iz2);
      a_[idx] = av;
      b_[idx] = bv;
      d_[idx] = dv;
      double ca = av + 1.0, cb = bv + 1.0, cd = dv;
      double det = ca * cb - cd * cd;
      ica_[idx] = cb / det;
      icb_[idx] = ca / det;
      icd_[idx] = -cd / det;
      double w = we * wth;
      w_plain_[idx] = w;
      wq_[idx] = w / (2.0 * M_PI * std::sqrt(det));
    }
  }
}

void PosteriorGrid::weights_at(const Eigen::Vector2d& m, std::vector<double>& w) const {
  double mx = m(0), my = m(1);
  int total = size();
  w.resize(static_cast<std::size_t>(total));
  for (int i = 0; i < total; ++i) {
    double quad = ica_[i] * mx * mx + 2.0 * icd_[i] * mx * my + icb_[i] * my * my;
    w[static_cast<std::size_t>(i)] = wq_[i] * std::exp(-0.5 * quad);
  }
}

double PosteriorGrid::objective_with(const std::vector<double>& w, double zeta_sq,
                                     double chi) const {
  double c = std::cos(chi), s = std::sin(chi);
  double iz = 1.0 / zeta_sq;
  double ba = c * c * zeta_sq + s * s * iz;
  double bb = s * s * zeta_sq + c * c * iz;
  double bd = c * s * (zeta_sq - iz);
  double sum = 0.0;
  int total = size();
  for (int i = 0; i < total; ++i) {
    double det = (a_[i] + ba) * (b_[i] + bb) - (d_[i] + bd) * (d_[i] + bd);
    sum += w[static_cast<std::size_t>(i)] / std::sqrt(det);
  }
  return 2.0 * sum;
}

double PosteriorGrid::objective(const std::vector<double>& w,
                                const Eigen::Matrix2d& reply) const {
  double ba = reply(0, 0), bb = reply(1, 1), bd = reply(0, 1);
  double sum = 0.0;
  int total = size();
  for (int i = 0; i < total; ++i) {
    double det = (a_[i] + ba) * (b_[i] + bb) - (d_[i] + bd) * (d_[i] + bd);
    sum += w[static_cast<std::size_t>(i)] / std::sqrt(det);
  }
  return 2.0 * sum;
}

double PosteriorGrid::blind_average(const Eigen::Matrix2d& reply) const {
  double ba = reply(0, 0), bb = reply(1, 1), bd = reply(0, 1);
  double sum = 0.0;
  int total = size();
  for (int i = 0; i < total; ++i) {
    double det = (a_[i] + ba) * (b_[i] + bb) - (d_[i] + bd) * (d_[i] + bd);
    sum += w_plain_[static_cast<std::size_t>(i)] / std::sqrt(det);
  }
  return 2.0 * sum;
}

double posterior_objective(const Eigen::Vector2d& m, const CovarianceMatrix& sigma_b,
                           double budget, QuadratureSpec spec) {
  if (sigma_b.modes() != 1)
    throw std::invalid_argument("posterior_objective: single-mode replies only");
  double det_b = sigma_b.entries().determinant();
  if (std::abs(det_b - 1.0) > 1e-6)
    throw std::domain_error("posterior_objective: reply must be pure");
  if (sigma_b.energy() > budget + 1e-9)
    throw std::domain_error(
        fmt::format("posterior_objective: reply energy {:.6g} above budget {:.6g}",
                    sigma_b.energy(), budget));
  PosteriorGrid grid(budget, spec);
  std::vector<double> w;
  grid.weights_at(m, w);
  return grid.objective(w, sigma_b.entries());
}

std::pair<double, double> BobPolicy::reply_params(double rho) const {
  if (nodes.empty()) throw std::logic_error("BobPolicy: empty policy");
  if (nodes.size() == 1 || rho <= nodes.front().rho)
    return {nodes.front().zeta, nodes.front().chi};
  if (rho >= nodes.back().rho) return {nodes.back().zeta, nodes.back().chi};
  double step = nodes[1].rho - nodes[0].rho;
  auto idx = static_cast<std::size_t>((rho - nodes.front().rho) / step);
  idx = std::min(idx, nodes.size() - 2);
  const PolicyNode& n0 = nodes[idx];
  const PolicyNode& n1 = nodes[idx + 1];
  double t = (rho - n0.rho) / (n1.rho - n0.rho);
  double zeta = n0.zeta + t * (n1.zeta - n0.zeta);
  // chi is pi-periodic; interpolate along the shorter arc.
  double dchi = n1.chi - n0.chi;
  if (dchi > M_PI / 2) dchi -= M_PI;
  if (dchi < -M_PI / 2) dchi += M_PI;
  double chi = n0.chi + t * dchi;
  if (chi < 0) chi += M_PI;
  if (chi >= M_PI) chi -= M_PI;
  return {zeta, chi};
}

Eigen::Matrix2d BobPolicy::reply(const Eigen::Vector2d& m) const {
  double rho = m.norm();
  auto [zeta, chi] = reply_params(rho);
  double phase = rho > 0.0 ? std::atan2(m(1), m(0)) : 0.0;
  return squeezed_cm_2d(zeta * zeta, chi + phase);
}

BobPolicy optimize_bob_policy(double budget, const PolicyOptions& options) {
  if (budget <= 2.0)
    throw std::invalid_argument("optimize_bob_policy: budget must exceed 2");
  if (options.nodes < 2)
    throw std::invalid_argument("optimize_bob_policy: need at least 2 policy nodes");

  PosteriorGrid grid(budget, options.quad);
  double zmax_sq = zsq_of_energy(options.relax_energy_bound ? 4.0 * budget : budget);
  double lmax = std::log(zmax_sq);

  BobPolicy policy;
  policy.budget = budget;
  policy.rho_max = tail_radius(budget);
  policy.nodes.resize(static_cast<std::size_t>(options.nodes));

  auto optimize_node = [&](PolicyNode& node) {
    std::vector<double> w;
    grid.weights_at(Eigen::Vector2d(node.rho, 0.0), w);
    auto eval = [&](double lam, double chi) {
      return grid.objective_with(w, std::exp(std::clamp(lam, 0.0, lmax)), chi);
    };

    // coarse grid seed
    double best_l = 0.0, best_chi = 0.0, best_v = eval(0.0, 0.0);
    for (int iz = 0; iz < options.coarse_zeta; ++iz) {
      double lam = lmax * iz / std::max(options.coarse_zeta - 1, 1);
      for (int ic = 0; ic < options.coarse_chi; ++ic) {
        double chi = M_PI * ic / options.coarse_chi;
        double v = eval(lam, chi);
        if (v > best_v) {
          best_v = v;
          best_l = lam;
          best_chi = chi;
        }
      }
    }

    // local refinement from the grid best plus the symmetric angle starts
    const double starts[3] = {best_chi, 0.0, M_PI / 2};
    bool converged = false;
    for (double chi0 : starts) {
      double lam = best_l, chi = chi0;
      double v = eval(lam, chi);
      double prev = v;
      for (int sweep = 0; sweep < options.sweeps; ++sweep) {
        GoldenResult gl = golden_max([&](double L) { return eval(L, chi); }, 0.0, lmax, 30);
        lam = gl.x;
        GoldenResult gc = golden_max([&](double C) { return eval(lam, C); },
                                     chi - M_PI / 2, chi + M_PI / 2, 30);
        chi = gc.x;
        v = gc.value;
        if (std::abs(v - prev) <= 1e-12 * std::max(1.0, std::abs(v))) {
          converged = true;
          break;
        }
        prev = v;
      }
      if (v > best_v) {
        best_v = v;
        best_l = lam;
        best_chi = chi;
      }
    }

    node.zeta = std::sqrt(std::exp(std::clamp(best_l, 0.0, lmax)));
    node.chi = best_chi;
    node.value = best_v;
    node.flagged = !converged && options.sweeps > 0;
    if (node.zeta < 1.0 + 1e-9 || node.rho == 0.0) node.chi = 0.0;
    while (node.chi < 0) node.chi += M_PI;
    while (node.chi >= M_PI) node.chi -= M_PI;
  };

  std::int64_t count = options.nodes;
  for_each_chunk(
      count, options.workers,
      [&](std::size_t, std::int64_t b, std::int64_t e) {
        for (std::int64_t i = b; i < e; ++i) {
          PolicyNode& node = policy.nodes[static_cast<std::size_t>(i)];
          node.rho = policy.rho_max * static_cast<double>(i) / (options.nodes - 1);
          optimize_node(node);
        }
      },
      /*min_chunk=*/1);
  return policy;
}

namespace {

double radial_policy_integral(const PosteriorGrid& grid, const BobPolicy& policy,
                              int points_per_segment) {
  GaussLegendre unit(points_per_segment, 0.0, 1.0);
  std::vector<double> w;
  double total = 0.0;
  for (std::size_t seg = 0; seg + 1 < policy.nodes.size(); ++seg) {
    double r0 = policy.nodes[seg].rho;
    double r1 = policy.nodes[seg + 1].rho;
    double len = r1 - r0;
    double part = 0.0;
    for (std::size_t q = 0; q < unit.nodes.size(); ++q) {
      double rho = r0 + len * unit.nodes[q];
      auto [zeta, chi] = policy.reply_params(rho);
      grid.weights_at(Eigen::Vector2d(rho, 0.0), w);
      double g = grid.objective_with(w, zeta * zeta, chi);
      part += unit.weights[q] * len * 2.0 * M_PI * rho * g;
    }
    total += part;
  }
  return total;
}

}  // namespace

ThresholdResult classical_average_fidelity(double budget, const BobPolicy& policy,
                                           const ThresholdEvalOptions& options) {
  if (policy.budget != budget)
    throw std::invalid_argument("classical_average_fidelity: policy built for another budget");
  PosteriorGrid grid(budget, options.quad);

  ThresholdResult res;
  res.budget = budget;
  res.value = radial_policy_integral(grid, policy, options.radial_points);
  double coarse = radial_policy_integral(grid, policy, std::max(options.radial_points / 2, 1));
  res.quad_error = std::abs(res.value - coarse);
  for (const auto& node : policy.nodes) res.flagged_nodes += node.flagged ? 1 : 0;

  if (options.mc_samples > 0) {
    std::vector<SampleStats> parts(chunk_count(options.mc_samples));
    for_each_chunk(options.mc_samples, options.workers,
                   [&](std::size_t ci, std::int64_t b, std::int64_t e) {
                     SampleStats acc;
                     for (std::int64_t i = b; i < e; ++i) {
                       RngStream rng(options.seed, static_cast<std::uint64_t>(i));
                       double e1 = rng.uniform(2.0, budget);
                       double theta = rng.uniform(0.0, M_PI);
                       double z2 = zsq_of_energy(e1);
                       Eigen::Matrix2d sin_cm = squeezed_cm_2d(z2, theta);
                       // outcome ~ N(0, sigma_in + I) via 2x2 Cholesky
                       double ca = sin_cm(0, 0) + 1.0, cb = sin_cm(1, 1) + 1.0,
                              cd = sin_cm(0, 1);
                       double l11 = std::sqrt(ca);
                       double l21 = cd / l11;
                       double l22 = std::sqrt(cb - l21 * l21);
                       double g1 = rng.normal(), g2 = rng.normal();
                       Eigen::Vector2d m(l11 * g1, l21 * g1 + l22 * g2);
                       Eigen::Matrix2d reply = policy.reply(m);
                       double det = (sin_cm + reply).determinant();
                       acc.add(2.0 / std::sqrt(det));
                     }
                     parts[ci] = acc;
                   });
    SampleStats mc;
    for (const auto& p : parts) mc.merge(p);
    res.mc_checked = true;
    res.mc_mean = mc.mean();
    res.mc_std_error = mc.std_error();
    double combined = std::sqrt(res.mc_std_error * res.mc_std_error +
                                res.quad_error * res.quad_error);
    res.mc_consistent = std::abs(res.value - res.mc_mean) <= 4.0 * combined;
  }
  return res;
}

CrossoverResult crossover_energy(double r, double tol, const CrossoverOptions& options) {
  if (r <= 0.0) throw std::domain_error("crossover_energy: r must be positive");
  if (tol <= 0.0) throw std::domain_error("crossover_energy: tol must be positive");
  if (!(options.lo > 2.0 && options.hi > options.lo))
    throw std::invalid_argument("crossover_energy: bad bracket");

  CrossoverResult res;
  auto h = [&](double e) {
    BobPolicy policy = optimize_bob_policy(e, options.policy);
    ThresholdEvalOptions eval;
    eval.quad = options.policy.quad;
    eval.radial_points = options.radial_points;
    eval.mc_samples = 0;
    ++res.evaluations;
    return average_fidelity(e, r) - classical_average_fidelity(e, policy, eval).value;
  };

  double lo = options.lo, hi = options.hi;
  res.h_lo = h(lo);
  res.h_hi = h(hi);
  if (res.h_lo > 0.0) {
    // quantum already ahead at the bracket's lower edge
    res.found = true;
    res.at_lower_edge = true;
    res.energy = lo;
    return res;
  }
  if (res.h_hi < 0.0) {
    res.found = false;  // classical ahead on the whole bracket
    return res;
  }
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (h(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  res.found = true;
  res.energy = 0.5 * (lo + hi);
  return res;
}

}  // namespace gmc
