#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace occ {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

// Adaptive Gauss-Kronrod 15-point quadrature over [a, b], subdivided at the
// supplied breakpoints before adaptation. Breakpoints outside (a, b) are
// ignored. The error estimate is the sum of per-segment estimates and is an
// absolute bound on the achieved error.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double abs_tol,
                           std::span<const double> breakpoints = {}) {
  std::vector<double> edges;
  edges.push_back(a);
  for (double x : breakpoints) {
    if (x > a && x < b) edges.push_back(x);
  }
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());

  // Drive each segment well below the requested absolute tolerance; the
  // relative termination bottoms out against the segment's L1 norm.
  const double rel_tol = std::max(1e-14, abs_tol * 1e-4);

  using gk = boost::math::quadrature::gauss_kronrod<double, 15>;
  QuadratureResult out;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (edges[i + 1] <= edges[i]) continue;
    double err = 0.0;
    double l1 = 0.0;
    const double v = gk::integrate(f, edges[i], edges[i + 1], 14, rel_tol, &err, &l1);
    out.value += v;
    out.error_estimate += err;
  }
  return out;
}

}  // namespace occ
