#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "occ/params.hpp"

namespace occ {

// Signature of the stationary-power routine, injectable so a deliberately
// broken variant can be fed to the suites in tests.
using DualPowerFn = std::function<std::optional<double>(
    double lambda, double distance_m, double cnr, double l0, double k)>;

struct PropertyCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // counterexample (lambda, D, S, P) or a summary line
};

struct PropertyOptions {
  std::uint64_t seed = 1;
  int concavity_samples = 10000;
  int negative_root_samples = 1000;
  int inversion_samples = 10000;
  int stationarity_samples = 1000;
  DualPowerFn dual_power_override;  // empty -> the real implementation
};

// Runs the analytic property suites:
//   concavity_above_floor / convexity_below_floor   (rate curvature in P)
//   negative_root_below_floor / never_selected      (invalid stationary root)
//   ber_inversion_identity                          (approx BER round trip)
//   stationarity                                    (dual power zero-gradient)
//   dual_monotonicity                               (I(lambda) non-increasing)
//   budget_tightness                                (|E[P]-Pmax|/Pmax after bisection)
std::vector<PropertyCheck> run_property_suites(const Scenario& scenario,
                                               const PropertyOptions& opts = {});

}  // namespace occ
