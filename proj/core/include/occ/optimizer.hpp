#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "occ/channel.hpp"
#include "occ/params.hpp"

namespace occ {

// Dual bisection configuration. The latency multiplier mu is held at zero by
// the relaxation; only lambda is searched.
struct DualState {
  double lambda_lb = 1e-6;
  double lambda_ub = 1e6;
  double tolerance = 0.0;  // on |I(lambda)|; 0 -> 1e-6 * p_max
  int max_iters = 200;
  int max_expansions = 60;
};

enum class ActiveFloor { kDual, kLatency, kConcavity };

const char* to_string(ActiveFloor f);

// Power below which the rate is convex in P: sqrt(1 / (K S)). S <= 0 is an
// infeasible link and maps to +inf.
double concavity_floor(double cnr, double k);

// Minimum power meeting the latency cap:
// sqrt((2^(D L_p / (l0 tau_max)) - 1) / (K S)). Overflows to +inf.
double latency_floor(double distance_m, double cnr, double l0,
                     double packet_bits, double tau_max_s, double k);

// Positive stationary root l0/(lambda D) + sqrt(l0^2/(lambda D)^2 - 1/(K S)),
// or nullopt when the discriminant is negative (lambda too large for this
// distance).
std::optional<double> dual_power(double lambda, double distance_m, double cnr,
                                 double l0, double k);

// Witness for the invalid-negative-root lemma: true iff the negative
// stationary root lies strictly below the concavity floor. Requires a
// non-negative discriminant.
bool negative_root_invalid(double lambda, double distance_m, double cnr,
                           double l0, double k);

struct OptimalPower {
  double power_w;
  ActiveFloor active;
};

// Immutable per-solve context: scenario snapshot, derived constants and the
// fixed link geometry (distance is the only free variable).
class SolverContext {
 public:
  static SolverContext make(const Scenario& scenario, double aoi_deg = 60.0);

  const Scenario& scenario() const { return scenario_; }
  const DerivedConstants& derived() const { return derived_; }
  double k() const { return k_; }
  double aoi_deg() const { return aoi_deg_; }
  double l0() const { return derived_.l0; }

  LinkGeometry geometry(double distance_m) const;
  double cnr_at(double distance_m) const;  // S(D) = cnr_d4_ / D^4

 private:
  Scenario scenario_;
  DerivedConstants derived_;
  double k_ = 0.0;
  double aoi_deg_ = 60.0;
  double cnr_d4_ = 0.0;  // S(D) * D^4, constant in D for fixed angles
};

// Eq.-style max over the stationary power and the two constraint floors;
// ties resolve toward the dual term, then the latency floor.
OptimalPower optimal_power(double lambda, double distance_m,
                           const SolverContext& ctx);

// Budget residual I(lambda) = integral of P_opt(lambda, D) f_D(D) dD over
// (0, d_max] minus p_max, by adaptive quadrature (absolute tolerance 1e-9 on
// the integral). Non-increasing in lambda. Throws NumericError when the
// quadrature error estimate exceeds the tolerance.
double budget_gap(double lambda, const SolverContext& ctx);

struct BisectionResult {
  double lambda = 0.0;
  double gap = 0.0;       // I(lambda) at the returned multiplier
  int iterations = 0;
  bool converged = false;
};

// Bisection on a non-increasing gap function. Expands the bracket
// geometrically until the sign changes; throws InfeasibleBudgetError when no
// sign change exists (the floors alone exceed the budget).
BisectionResult bisect_lambda(const std::function<double(double)>& gap,
                              DualState state);

BisectionResult bisect_lambda(const SolverContext& ctx, DualState state = {});

enum class RateMode { kContinuous, kDiscrete };

const char* to_string(RateMode m);

struct ProfilePoint {
  double distance_m;
  double power_w;
  ActiveFloor active;
};

struct ConstraintAudit {
  double budget_residual_rel = 0.0;    // |E[P] - p_max| / p_max
  double max_latency_s = 0.0;          // over the profile grid, outages excluded
  double latency_violation_mass = 0.0; // f_D mass with tau > tau_max
  double outage_mass = 0.0;            // f_D mass with zero rate (discrete only)
  double max_exact_ber = 0.0;          // over the profile grid, outages excluded
};

// Expectations are unnormalized integrals against f_D over (0, d_max]
// (untruncated-density convention; the mass below d_max is ~0.9995 for the
// default model). Peak power and PAPR are taken over the 1 m profile grid
// restricted to [d_stop, d_max]. papr_db is the ratio of the peak and average
// expressed in dBW, the form the peak-to-average figures use; it is NaN when
// either side is below 1 W.
struct PolicySolution {
  RateMode mode = RateMode::kContinuous;
  double lambda = 0.0;
  std::vector<ProfilePoint> profile;  // 1 m grid on (0, d_max]
  double avg_rate_bps = 0.0;
  double avg_latency_s = 0.0;
  double avg_power_w = 0.0;
  double peak_power_w = 0.0;
  double papr = 0.0;
  double papr_db = 0.0;
  ConstraintAudit audit;
  BisectionResult dual;
};

PolicySolution solve_continuous(const SolverContext& ctx, DualState state = {});

// Reuses the continuous multiplier and power profile; maps the continuous
// rate down to the largest feasible constellation per distance. Rates below
// BPSK map to outage (zero rate, infinite latency). The latency constraint is
// audited, not re-enforced, after the mapping.
PolicySolution solve_discrete(const SolverContext& ctx, DualState state = {});

// --- pointwise policy evaluation (shared by quadrature, Monte Carlo, sweeps)

struct ContinuousPoint {
  double power_w;
  ActiveFloor active;
  double rate_bps;
  double snr;
};

ContinuousPoint continuous_point(double lambda, double distance_m,
                                 const SolverContext& ctx);

struct DiscretePoint {
  double power_w;
  ActiveFloor active;
  double se;        // selected spectral efficiency, 0 on outage
  double rate_bps;  // 0 on outage
  double snr;
};

DiscretePoint discrete_point(double lambda, double distance_m,
                             const SolverContext& ctx);

// --- brute-force oracle for the discrete-rate problem on small grids

struct BruteForceInstance {
  std::vector<double> distances_m;
  std::vector<double> weights;       // probability masses, summing to 1
  std::vector<double> power_grid_w;  // ascending
};

// Equal-mass instance: quantile distances of the truncated model and a
// geometric power grid spanning the constraint-floor range.
BruteForceInstance make_equal_mass_instance(const SolverContext& ctx,
                                            std::size_t n_distances,
                                            std::size_t n_powers);

struct GridChoice {
  int se = 0;           // 0 -> outage
  double power_w = 0.0; // 0 on outage
};

struct BruteForceResult {
  double avg_rate_bps = 0.0;
  double avg_power_w = 0.0;
  std::vector<GridChoice> choices;
};

// Exhaustive per-distance search over (modulation, power-level) pairs
// maximizing the weighted discrete rate subject to the average power budget,
// exact BER <= ber_tgt and tau_d <= tau_max. Combinations across distances
// are enumerated on a dominance-pruned cost/value frontier, which makes the
// search exact without visiting all |options|^n allocations. Limits: at most
// 64 power levels and 256 distances.
BruteForceResult brute_force_discrete(const SolverContext& ctx,
                                      const BruteForceInstance& instance);

// Algorithm-2 style solution restricted to a discrete distance measure:
// bisects lambda so the weighted average power meets the budget, then maps
// each distance through the continuous-to-discrete rate flooring.
struct GridPolicyResult {
  double lambda = 0.0;
  double avg_rate_bps = 0.0;
  double avg_power_w = 0.0;
  std::vector<GridChoice> choices;
};

GridPolicyResult solve_discrete_on_grid(const SolverContext& ctx,
                                        std::span<const double> distances_m,
                                        std::span<const double> weights,
                                        DualState state = {});

}  // namespace occ
