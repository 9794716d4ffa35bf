#include "occ/channel.hpp"

#include <cmath>
#include <sstream>

#include "occ/errors.hpp"
#include "occ/units.hpp"

namespace occ {

double effective_area(double aoi_deg, const SystemParams& p) {
  if (aoi_deg < 0.0 || aoi_deg > p.fov_deg) return 0.0;
  return p.pupil_area_m2 * p.filter_transmittance *
         derived_constants(p).lens_gain * std::cos(deg_to_rad(aoi_deg));
}

double channel_gain(const LinkGeometry& geom, const SystemParams& p) {
  if (geom.distance_m <= 0.0) {
    std::ostringstream msg;
    msg << "distance_m: must be > 0, got " << geom.distance_m;
    throw ValidationError(msg.str());
  }
  if (geom.aoi_deg < 0.0 || geom.aoi_deg > p.fov_deg) return 0.0;
  const DerivedConstants d = derived_constants(p);
  const double m = d.lambertian_order;
  return (m + 1.0) * p.pupil_area_m2 /
         (2.0 * kPi * geom.distance_m * geom.distance_m) *
         std::pow(std::cos(deg_to_rad(geom.irradiance_deg)), m) *
         p.filter_transmittance * d.lens_gain * std::cos(deg_to_rad(geom.aoi_deg));
}

double distance_from_pixels(double eta_pixels, const SystemParams& p) {
  if (eta_pixels <= 0.0) {
    std::ostringstream msg;
    msg << "eta_pixels: must be > 0, got " << eta_pixels;
    throw ValidationError(msg.str());
  }
  return p.focal_length_m / p.pixel_size_m * (p.led_baseline_m / eta_pixels);
}

NoiseVariances noise_variances(const LinkGeometry& geom, double power_w,
                               const SystemParams& p) {
  if (power_w < 0.0) {
    std::ostringstream msg;
    msg << "power_w: must be >= 0, got " << power_w;
    throw ValidationError(msg.str());
  }
  const DerivedConstants d = derived_constants(p);
  const double received = power_w * channel_gain(geom, p);
  NoiseVariances n{};
  n.shot_simplified = d.shot_simplified;
  n.shot_full = 2.0 * p.electron_charge_c * p.responsivity_a_per_w *
                    p.noise_bandwidth_hz * received +
                d.shot_simplified;
  n.thermal = d.thermal;
  n.sigma_s = d.sigma_s;
  return n;
}

double cnr(const LinkGeometry& geom, const SystemParams& p) {
  const double h = channel_gain(geom, p);
  const double zeta = p.responsivity_a_per_w;
  return p.gain_scale * zeta * zeta * h * h / derived_constants(p).sigma_s;
}

double snr(const LinkGeometry& geom, double power_w, const SystemParams& p) {
  if (power_w < 0.0) {
    std::ostringstream msg;
    msg << "power_w: must be >= 0, got " << power_w;
    throw ValidationError(msg.str());
  }
  return power_w * power_w * cnr(geom, p);
}

ChannelState channel_state(const LinkGeometry& geom, double power_w,
                           const SystemParams& p) {
  ChannelState state{};
  state.gain = channel_gain(geom, p);
  state.cnr = cnr(geom, p);
  state.snr = power_w * power_w * state.cnr;
  return state;
}

}  // namespace occ
