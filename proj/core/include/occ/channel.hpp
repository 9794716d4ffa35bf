#pragma once

#include "occ/params.hpp"

namespace occ {

// One line-of-sight link state. Gain is zero beyond the lens field of view.
struct LinkGeometry {
  double distance_m = 50.0;
  double aoi_deg = 60.0;          // angle of incidence at the receiver lens
  double irradiance_deg = 70.0;   // angle of irradiance at the emitter
};

struct ChannelState {
  double gain;  // H, unitless
  double cnr;   // S = zeta^2 gain_scale H^2 / sigma_s   [W^-2]
  double snr;   // gamma_s = P^2 S, unitless
};

// Effective signal collection area A T_s g cos(theta), zero beyond the FoV.
double effective_area(double aoi_deg, const SystemParams& p);

// Lambertian DC gain H = (m+1) A / (2 pi D^2) cos^m(phi) T_s g cos(theta) for
// theta <= fov, else 0. Strictly decreasing in D, non-increasing in theta.
double channel_gain(const LinkGeometry& geom, const SystemParams& p);

// Pixel-based forward distance D = (f/a) * (delta/eta).
double distance_from_pixels(double eta_pixels, const SystemParams& p);

struct NoiseVariances {
  double shot_full;        // 2 q zeta B P_r + 2 q B I_bg I_2   [A^2]
  double shot_simplified;  // 2 q B I_bg I_2                    [A^2]
  double thermal;          // preamplifier thermal variance     [A^2]
  double sigma_s;          // shot_simplified + thermal         [A^2]
};

NoiseVariances noise_variances(const LinkGeometry& geom, double power_w,
                               const SystemParams& p);

// Channel-to-noise ratio S. Independent of transmit power; includes the
// responsivity and the calibration gain scale.
double cnr(const LinkGeometry& geom, const SystemParams& p);

// Simplified SNR gamma_s = P^2 S under square-law optical detection.
double snr(const LinkGeometry& geom, double power_w, const SystemParams& p);

ChannelState channel_state(const LinkGeometry& geom, double power_w,
                           const SystemParams& p);

}  // namespace occ
