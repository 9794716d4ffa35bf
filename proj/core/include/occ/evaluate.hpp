#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "occ/distance.hpp"
#include "occ/optimizer.hpp"
#include "occ/params.hpp"

namespace occ {

struct PolicySample {
  double rate_bps = 0.0;
  bool outage = false;
};

using PolicyFn = std::function<PolicySample(double distance_m)>;

PolicyFn continuous_policy(const SolverContext& ctx, double lambda);
PolicyFn discrete_policy(const SolverContext& ctx, double lambda);
// Fixed transmit power with the highest feasible modulation per distance.
PolicyFn fixed_power_adaptive_policy(const SolverContext& ctx, double power_w);

struct McAverages {
  double avg_rate_bps = 0.0;     // mean over emitted samples
  double avg_latency_s = 0.0;    // mean over non-outage samples
  double outage_fraction = 0.0;
  double rate_std_error = 0.0;
  std::size_t n = 0;
};

// Sample means over n index-addressed draws. In resample truncation the means
// are conditional on D <= d_max; in reject-count mode rejected indices
// contribute zero rate, matching unnormalized quadrature expectations.
McAverages monte_carlo_average(const PolicyFn& policy,
                               const DistanceSampler& sampler, std::size_t n);

// --- sweep engine -----------------------------------------------------------

enum class SweepKind {
  kBerVsSnr,
  kBerVsDistance,
  kBerVsAoi,
  kSeLatencyVsDistance,
  kRateVsPmax,
  kLatencyVsPmax,
  kPowerVsDistance,
  kPeakVsAvg,
  kPaprVsAvg,
};

// Throws ValidationError on an unknown kind name.
SweepKind parse_sweep_kind(const std::string& name);
const char* to_string(SweepKind kind);
std::vector<SweepKind> all_sweep_kinds();

struct SweepPoint {
  double x;
  double y;
};

struct SweepSeries {
  std::string name;
  std::vector<SweepPoint> points;
};

struct SweepResult {
  std::string kind;
  std::string x_name, x_unit;
  std::string y_name, y_unit;
  std::vector<SweepSeries> series;
  std::string fingerprint;  // scenario fingerprint at run time
  std::map<std::string, std::string> metadata;
};

struct SweepOptions {
  double fixed_power_w = 1.2;  // fixed-power sweeps
  double aoi_deg = 60.0;
  double pmax_start_dbw = 5.0;
  double pmax_stop_dbw = 15.0;
  double pmax_step_dbw = 0.5;
  double distance_start_m = 1.0;
  double distance_stop_m = 0.0;  // 0 -> kind-specific default
  double distance_step_m = 1.0;
  double snr_start_db = -5.0;
  double snr_stop_db = 30.0;
  double snr_step_db = 0.5;
  double aoi_step_deg = 1.0;
  bool continuous = true;   // optimizer sweeps: which modes to emit
  bool discrete = true;
  std::optional<double> k_override;  // forces K, bypassing the BER target
};

// Deterministic data series for one figure family. Pure function of
// (scenario, options).
SweepResult run_sweep(SweepKind kind, const Scenario& scenario,
                      const SweepOptions& options = {});

}  // namespace occ
