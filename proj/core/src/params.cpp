#include "occ/params.hpp"

#include <cmath>
#include <sstream>

#include "occ/channel.hpp"
#include "occ/errors.hpp"
#include "occ/link.hpp"
#include "occ/units.hpp"

namespace occ {
namespace {

void require(bool ok, const std::string& field, const std::string& constraint,
             double value) {
  if (ok) return;
  std::ostringstream msg;
  msg << field << ": " << constraint << ", got " << value;
  throw ValidationError(msg.str());
}

}  // namespace

double ModulationScheme::spectral_efficiency() const {
  return std::log2(static_cast<double>(order));
}

std::string ModulationScheme::name() const {
  if (kind == Kind::kBpsk) return "BPSK";
  return std::to_string(order) + "-QAM";
}

std::vector<ModulationScheme> default_modulation_set() {
  return {ModulationScheme::bpsk(),     ModulationScheme::mqam(4),
          ModulationScheme::mqam(8),    ModulationScheme::mqam(16),
          ModulationScheme::mqam(32),   ModulationScheme::mqam(64)};
}

double SystemParams::scalar_resolution() const {
  if (w_interpretation == WInterpretation::kTotalPixels) {
    return image_resolution_px * image_resolution_px;
  }
  return image_resolution_px;
}

void SystemParams::validate() const {
  require(phi_irradiance_deg >= 0.0 && phi_irradiance_deg <= 90.0,
          "phi_irradiance_deg", "must be in [0, 90] degrees", phi_irradiance_deg);
  require(half_angle_deg > 0.0 && half_angle_deg < 90.0, "half_angle_deg",
          "must be in (0, 90) degrees", half_angle_deg);
  require(fov_deg > 0.0 && fov_deg <= 90.0, "fov_deg",
          "must be in (0, 90] degrees", fov_deg);
  require(focal_length_m > 0.0, "focal_length_m", "must be > 0", focal_length_m);
  require(pixel_size_m > 0.0, "pixel_size_m", "must be > 0", pixel_size_m);
  require(pupil_area_m2 > 0.0, "pupil_area_m2", "must be > 0", pupil_area_m2);
  require(filter_transmittance > 0.0 && filter_transmittance <= 1.0,
          "filter_transmittance", "must be in (0, 1]", filter_transmittance);
  require(refractive_index >= 1.0, "refractive_index", "must be >= 1",
          refractive_index);
  require(responsivity_a_per_w > 0.0, "responsivity_a_per_w", "must be > 0",
          responsivity_a_per_w);
  require(n_leds_per_row > 0, "n_leds_per_row", "must be > 0", n_leds_per_row);
  require(frame_rate_fps > 0.0, "frame_rate_fps", "must be > 0", frame_rate_fps);
  require(noise_bandwidth_hz > 0.0, "noise_bandwidth_hz", "must be > 0",
          noise_bandwidth_hz);
  require(background_current_a > 0.0, "background_current_a", "must be > 0",
          background_current_a);
  require(i2 > 0.0, "i2", "must be > 0", i2);
  require(i3 > 0.0, "i3", "must be > 0", i3);
  require(temperature_k > 0.0, "temperature_k", "must be > 0", temperature_k);
  require(boltzmann_j_per_k > 0.0, "boltzmann_j_per_k", "must be > 0",
          boltzmann_j_per_k);
  require(open_loop_gain > 0.0, "open_loop_gain", "must be > 0", open_loop_gain);
  require(capacitance_per_area_f_m2 > 0.0, "capacitance_per_area_f_m2",
          "must be > 0", capacitance_per_area_f_m2);
  require(fet_noise_factor > 0.0, "fet_noise_factor", "must be > 0",
          fet_noise_factor);
  require(fet_transconductance_s > 0.0, "fet_transconductance_s", "must be > 0",
          fet_transconductance_s);
  require(electron_charge_c > 0.0, "electron_charge_c", "must be > 0",
          electron_charge_c);
  require(image_resolution_px > 0.0, "image_resolution_px", "must be > 0",
          image_resolution_px);
  require(packet_size_bits > 0.0, "packet_size_bits", "must be > 0",
          packet_size_bits);
  require(led_strip_length_m > 0.0, "led_strip_length_m", "must be > 0",
          led_strip_length_m);
  require(led_baseline_m > 0.0, "led_baseline_m", "must be > 0", led_baseline_m);
  require(gain_scale > 0.0, "gain_scale", "must be > 0", gain_scale);
  require(rate_scale > 0.0, "rate_scale", "must be > 0", rate_scale);

  // Derived quantities must come out positive for any accepted parameter set.
  const DerivedConstants d = derived_constants(*this);
  require(d.lambertian_order > 0.0, "half_angle_deg",
          "must yield a positive Lambertian order", half_angle_deg);
  require(d.lens_gain >= 1.0, "refractive_index",
          "must yield lens gain >= 1", refractive_index);
  require(d.sigma_s > 0.0, "noise parameters", "must yield sigma_s > 0",
          d.sigma_s);
  require(d.l0 > 0.0, "rate parameters", "must yield l0 > 0", d.l0);
}

DerivedConstants derived_constants(const SystemParams& p) {
  DerivedConstants d{};
  d.lambertian_order =
      -std::log(2.0) / std::log(std::cos(deg_to_rad(p.half_angle_deg)));
  const double sin_fov = std::sin(deg_to_rad(p.fov_deg));
  d.lens_gain = p.refractive_index * p.refractive_index / (sin_fov * sin_fov);

  const double q = p.electron_charge_c;
  const double b = p.noise_bandwidth_hz;
  d.shot_simplified = 2.0 * q * b * p.background_current_a * p.i2;

  const double kt = p.boltzmann_j_per_k * p.temperature_k;
  const double cf = p.capacitance_per_area_f_m2;
  const double area = p.pupil_area_m2;
  d.thermal = 8.0 * kPi * kt / p.open_loop_gain * p.i2 * b * b * cf * area +
              16.0 * kPi * kPi * kt * p.fet_noise_factor /
                  p.fet_transconductance_s * p.i3 * b * b * b * cf * cf * area *
                  area;
  d.sigma_s = d.shot_simplified + d.thermal;

  d.l0 = p.rate_scale * p.frame_rate_fps * p.n_leds_per_row *
         p.scalar_resolution() * p.led_strip_length_m /
         (6.0 * std::tan(deg_to_rad(p.fov_deg) / 2.0));
  return d;
}

double ber_k_factor(double ber_tgt) {
  if (!(ber_tgt > 0.0 && ber_tgt < 0.2)) {
    std::ostringstream msg;
    msg << "ber_tgt: must be in (0, 0.2), got " << ber_tgt;
    throw ValidationError(msg.str());
  }
  return -1.5 / std::log(5.0 * ber_tgt);
}

void UrllcSpec::validate() const {
  ber_k_factor(ber_tgt);  // enforces 0 < ber_tgt < 0.2
  require(tau_max_s > 0.0, "tau_max_s", "must be > 0", tau_max_s);
  require(p_max_w > 0.0, "p_max_w", "must be > 0", p_max_w);
  if (modulation_set.empty()) {
    throw ValidationError("modulation_set: must not be empty");
  }
  for (std::size_t i = 0; i + 1 < modulation_set.size(); ++i) {
    if (modulation_set[i + 1].order <= modulation_set[i].order) {
      throw ValidationError(
          "modulation_set: must be strictly increasing in constellation size");
    }
  }
  for (const auto& mod : modulation_set) {
    const bool pow2 = mod.order > 1 && (mod.order & (mod.order - 1)) == 0;
    if (!pow2 || (mod.kind == ModulationScheme::Kind::kMqam && mod.order < 4)) {
      throw ValidationError("modulation_set: " + mod.name() +
                            " is not a supported scheme");
    }
  }
}

void DistanceModel::validate() const {
  require(sigma > 0.0, "sigma", "must be > 0", sigma);
  require(d_max_m > 0.0, "d_max_m", "must be > 0", d_max_m);
  require(d_stop_m > 0.0 && d_stop_m < d_max_m, "d_stop_m",
          "must be in (0, d_max_m)", d_stop_m);
}

void Scenario::validate() const {
  params.validate();
  urllc.validate();
  distance.validate();
}

CalibrationScales fit_calibration(const SystemParams& p,
                                  const CalibrationAnchors& anchors) {
  SystemParams unit = p;
  unit.gain_scale = 1.0;
  unit.rate_scale = 1.0;
  const DerivedConstants d = derived_constants(unit);
  const ModulationScheme anchor_mod = ModulationScheme::mqam(anchors.order);

  // rate_scale: R(anchor order, anchor distance) = L_p / anchor latency.
  const double rate_target = p.packet_size_bits / anchors.latency_s;
  const double rate_raw =
      anchor_mod.spectral_efficiency() * d.l0 / anchors.distance_m;
  const double rate_scale = rate_target / rate_raw;

  // gain_scale: exact BER at the anchor point equals the anchor target.
  // exact_ber is strictly decreasing in snr, so bisect for the required snr.
  double lo = 1e-9, hi = 1e12;
  for (int i = 0; i < 200; ++i) {
    const double mid = std::sqrt(lo * hi);
    if (exact_ber(anchor_mod, mid) > anchors.ber) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double snr_required = std::sqrt(lo * hi);

  const LinkGeometry geom{anchors.distance_m, anchors.aoi_deg,
                          p.phi_irradiance_deg};
  const double snr_raw = snr(geom, anchors.power_w, unit);
  if (snr_raw <= 0.0) {
    throw ValidationError(
        "calibration: zero SNR at the anchor geometry (outside the FoV?)");
  }
  return {snr_required / snr_raw, rate_scale};
}

SystemParams calibrated(SystemParams p, const CalibrationAnchors& anchors) {
  const CalibrationScales scales = fit_calibration(p, anchors);
  p.gain_scale = scales.gain_scale;
  p.rate_scale = scales.rate_scale;
  return p;
}

}  // namespace occ
