#include "occ/link.hpp"

#include <cmath>
#include <sstream>

#include "occ/errors.hpp"

namespace occ {

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double exact_ber(const ModulationScheme& mod, double snr) {
  if (snr < 0.0) {
    std::ostringstream msg;
    msg << "snr: must be >= 0, got " << snr;
    throw ValidationError(msg.str());
  }
  if (mod.kind == ModulationScheme::Kind::kBpsk) {
    return q_function(std::sqrt(2.0 * snr));
  }
  const double bits = mod.spectral_efficiency();
  const double m = static_cast<double>(mod.order);
  return 4.0 / bits * q_function(std::sqrt(3.0 * snr * bits / (m - 1.0)));
}

double approx_ber(double power_w, double cnr, double order) {
  if (order <= 1.0) {
    std::ostringstream msg;
    msg << "order: must be > 1, got " << order;
    throw ValidationError(msg.str());
  }
  return 0.2 * std::exp(-1.5 * power_w * power_w * cnr / (order - 1.0));
}

double continuous_order(double power_w, double cnr, double k) {
  return 1.0 + k * power_w * power_w * cnr;
}

double continuous_rate(double power_w, double distance_m, double cnr,
                       double l0, double k) {
  if (distance_m <= 0.0) {
    std::ostringstream msg;
    msg << "distance_m: must be > 0, got " << distance_m;
    throw ValidationError(msg.str());
  }
  return l0 / distance_m * std::log2(1.0 + k * power_w * power_w * cnr);
}

double discrete_rate(const ModulationScheme& mod, double distance_m, double l0) {
  if (distance_m <= 0.0) {
    std::ostringstream msg;
    msg << "distance_m: must be > 0, got " << distance_m;
    throw ValidationError(msg.str());
  }
  return l0 / distance_m * mod.spectral_efficiency();
}

double latency(double rate_bps, double packet_bits) {
  if (rate_bps < 0.0) {
    std::ostringstream msg;
    msg << "rate_bps: must be >= 0, got " << rate_bps;
    throw ValidationError(msg.str());
  }
  if (rate_bps == 0.0) return kInfiniteLatency;
  return packet_bits / rate_bps;
}

std::optional<ModulationScheme> best_feasible_modulation(
    double snr, std::span<const ModulationScheme> set, double ber_tgt) {
  if (set.empty()) {
    throw ValidationError("modulation set: must not be empty");
  }
  for (auto it = set.rbegin(); it != set.rend(); ++it) {
    if (exact_ber(*it, snr) <= ber_tgt) return *it;
  }
  return std::nullopt;
}

}  // namespace occ
