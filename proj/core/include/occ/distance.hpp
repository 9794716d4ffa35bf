#pragma once

#include <cstdint>
#include <optional>

#include "occ/params.hpp"
#include "occ/rng.hpp"

namespace occ {

// Log-normal density f_D(D) = exp(-(ln D - alpha)^2 / (2 sigma^2)) / (D sigma sqrt(2 pi)).
double lognormal_pdf(double distance_m, const DistanceModel& model);

double lognormal_cdf(double distance_m, const DistanceModel& model);

double lognormal_quantile(double p, const DistanceModel& model);

// Probability mass of the untruncated density below d_max.
double truncated_mass(const DistanceModel& model);

// Mean of the distribution conditioned on D <= d_max.
double truncated_mean(const DistanceModel& model);

enum class Truncation {
  kResample,     // redraw out-of-range samples; emitted stream is conditional on D <= d_max
  kRejectCount,  // out-of-range samples are dropped but counted (unconditional expectations)
};

// Index-addressed truncated log-normal sampler. sample(i) is a pure function
// of (seed, i), so any partition of indices reproduces the same stream.
class DistanceSampler {
 public:
  DistanceSampler(const DistanceModel& model, std::uint64_t seed,
                  Truncation truncation = Truncation::kResample);

  // Resample mode: the accepted draw for this index (bounded retries).
  // Reject-count mode: nullopt when the raw draw fell beyond d_max.
  std::optional<double> sample(std::uint64_t index) const;

  const DistanceModel& model() const { return model_; }
  std::uint64_t seed() const { return rng_.seed(); }
  Truncation truncation() const { return truncation_; }

 private:
  double raw_draw(std::uint64_t index, std::uint64_t retry) const;

  DistanceModel model_;
  CounterRng rng_;
  Truncation truncation_;
};

}  // namespace occ
