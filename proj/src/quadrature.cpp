#include "gmc/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <stdexcept>

namespace gmc {

namespace {

// Legendre P_n and P_{n-1} at x by the three-term recurrence.
void legendre_pair(int n, double x, double* pn, double* pnm1) {
  double p0 = 1.0, p1 = x;
  if (n == 0) {
    *pn = p0;
    *pnm1 = 0.0;
    return;
  }
  for (int k = 2; k <= n; ++k) {
    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  *pn = p1;
  *pnm1 = p0;
}

}  // namespace

GaussLegendre::GaussLegendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("GaussLegendre: need at least one node");
  std::unique_ptr<gsl_integration_glfixed_table, void (*)(gsl_integration_glfixed_table*)>
      table(gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n)),
            gsl_integration_glfixed_table_free);
  if (!table) throw std::runtime_error("GaussLegendre: table allocation failed");
  nodes.resize(static_cast<std::size_t>(n));
  weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = 0.0, w = 0.0;
    gsl_integration_glfixed_point(-1.0, 1.0, static_cast<std::size_t>(i), &x, &w,
                                  table.get());
    // GSL computes tables for non-cached sizes to ~1e-10 only; a couple of
    // Newton steps on P_n restore machine precision for any n.
    if (n > 1 && std::abs(x) < 1.0) {
      for (int it = 0; it < 3; ++it) {
        double pn, pnm1;
        legendre_pair(n, x, &pn, &pnm1);
        double deriv = n * (x * pn - pnm1) / (x * x - 1.0);
        double step = pn / deriv;
        x -= step;
        if (std::abs(step) < 1e-15) break;
      }
      double pn, pnm1;
      legendre_pair(n, x, &pn, &pnm1);
      double deriv = n * (x * pn - pnm1) / (x * x - 1.0);
      w = 2.0 / ((1.0 - x * x) * deriv * deriv);
    }
    nodes[static_cast<std::size_t>(i)] = 0.5 * (b - a) * x + 0.5 * (a + b);
    weights[static_cast<std::size_t>(i)] = 0.5 * (b - a) * w;
  }
}

}  // namespace gmc
