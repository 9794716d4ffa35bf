#pragma once

#include <limits>
#include <optional>
#include <span>

#include "occ/params.hpp"

namespace occ {

inline constexpr double kInfiniteLatency = std::numeric_limits<double>::infinity();

// Gaussian tail probability Q(x) = erfc(x / sqrt 2) / 2.
double q_function(double x);

// Error probability at simplified SNR gamma_s:
//   BPSK   Q(sqrt(2 gamma))
//   M-QAM  (4/log2 M) Q(sqrt(3 gamma log2 M / (M-1)))
double exact_ber(const ModulationScheme& mod, double snr);

// Invertible exponential BER bound 0.2 exp(-1.5 P^2 S / (M-1)). Defined for
// any real order M > 1 (BPSK participates as M = 2).
double approx_ber(double power_w, double cnr, double order);

// Continuous modulation order M(D) = 1 + K P^2 S, the inversion of
// approx_ber at the target BER behind K.
double continuous_order(double power_w, double cnr, double k);

// Camera-limited continuous rate C = (l0 / D) log2(1 + K P^2 S)  [bit/s].
double continuous_rate(double power_w, double distance_m, double cnr,
                       double l0, double k);

// Discrete rate R = (l0 / D) log2(M)  [bit/s].
double discrete_rate(const ModulationScheme& mod, double distance_m, double l0);

// Transmission latency tau = L_p / rate. Zero rate is an outage and maps to
// the infinite-latency sentinel, not an error.
double latency(double rate_bps, double packet_bits);

// Highest-spectral-efficiency scheme meeting the BER target, or nullopt when
// even the smallest scheme fails. The set must be ordered by spectral
// efficiency and non-empty.
std::optional<ModulationScheme> best_feasible_modulation(
    double snr, std::span<const ModulationScheme> set, double ber_tgt);

}  // namespace occ
