#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace occ {

// How the scalar image resolution w enters the camera rate constant. The
// sensor is 512 x 512; some rate budgets count rows only, others every pixel.
enum class WInterpretation { kRows, kTotalPixels };

struct ModulationScheme {
  enum class Kind { kBpsk, kMqam };

  Kind kind = Kind::kBpsk;
  int order = 2;  // constellation size M; 2 for BPSK

  static ModulationScheme bpsk() { return {Kind::kBpsk, 2}; }
  static ModulationScheme mqam(int m) { return {Kind::kMqam, m}; }

  double spectral_efficiency() const;  // bits/symbol: 1 for BPSK, log2(M) for M-QAM
  std::string name() const;            // "BPSK", "4-QAM", ...

  bool operator==(const ModulationScheme&) const = default;
};

// BPSK plus square M-QAM with M in {4, 8, 16, 32, 64}, ordered by spectral
// efficiency.
std::vector<ModulationScheme> default_modulation_set();

// Physical and system constants. SI units throughout (m, s, W, A, F/m^2).
struct SystemParams {
  double phi_irradiance_deg = 70.0;      // angle of irradiance at the emitter
  double half_angle_deg = 60.0;          // LED semi-angle at half luminance
  double fov_deg = 90.0;                 // field of view of the camera lens
  double focal_length_m = 15e-3;         // f
  double pixel_size_m = 7.5e-6;          // a
  double pupil_area_m2 = 1e-3;           // entrance pupil area A (10 cm^2)
  double filter_transmittance = 1.0;     // T_s
  double refractive_index = 1.5;         // nu
  double responsivity_a_per_w = 1.0;     // zeta
  int n_leds_per_row = 30;               // N_LEDs
  double frame_rate_fps = 1000.0;        // W_fps
  double noise_bandwidth_hz = 2e6;       // B
  double background_current_a = 5100e-6; // I_bg
  double i2 = 0.562;                     // rectangular-pulse noise bandwidth factor
  double i3 = 0.0868;                    // noise bandwidth factor
  double temperature_k = 298.0;          // T_A
  double boltzmann_j_per_k = 1.380e-23;  // k
  double open_loop_gain = 10.0;          // G
  double capacitance_per_area_f_m2 = 1.12e-6;  // C_f (112 pF/cm^2)
  double fet_noise_factor = 1.5;         // Gamma
  double fet_transconductance_s = 30e-3; // g_m
  double electron_charge_c = 1.6e-19;    // q
  double image_resolution_px = 512.0;    // w (see w_interpretation)
  WInterpretation w_interpretation = WInterpretation::kRows;
  double packet_size_bits = 5000.0;      // L_p
  double led_strip_length_m = 0.15;      // L, LED strip length along the width
  double led_baseline_m = 1.0;           // delta, left/right LED unit spacing

  // Calibration knobs, both default 1 (uncalibrated). gain_scale multiplies
  // the channel-to-noise ratio S; rate_scale multiplies the camera rate
  // constant l0 (equivalently rescales the w*L product).
  double gain_scale = 1.0;
  double rate_scale = 1.0;

  // w as a scalar: row count, or total pixel count, per w_interpretation.
  double scalar_resolution() const;

  // Throws ValidationError naming the offending field, constraint and value.
  void validate() const;
};

struct DerivedConstants {
  double lambertian_order;   // m = -ln2 / ln(cos half_angle)
  double lens_gain;          // g = nu^2 / sin^2(fov)
  double shot_simplified;    // 2 q B I_bg I_2                     [A^2]
  double thermal;            // two-term preamplifier thermal term [A^2]
  double sigma_s;            // shot_simplified + thermal          [A^2]
  double l0;                 // W_fps N_LEDs w L / (6 tan(fov/2)), rate_scale applied
};

// Recomputed on demand from the current parameter values; never cached.
DerivedConstants derived_constants(const SystemParams& p);

// K = -1.5 / ln(5 BER_tgt), the BER-inversion constant. Requires ber_tgt in
// (0, 0.2).
double ber_k_factor(double ber_tgt);

struct UrllcSpec {
  double ber_tgt = 1e-4;
  double tau_max_s = 10e-3;
  double p_max_w = 3.1622776601683795;  // 5 dBW
  std::vector<ModulationScheme> modulation_set = default_modulation_set();

  double k_factor() const { return ber_k_factor(ber_tgt); }
  void validate() const;
};

// Log-normal inter-vehicular distance model, ln D ~ N(alpha, sigma^2),
// truncated to (0, d_max] for evaluation. d_stop is the stopping distance;
// samples below it are flagged, never rejected.
struct DistanceModel {
  double alpha = 3.78;
  double sigma = 0.21;
  double d_max_m = 90.0;
  double d_stop_m = 20.0;

  void validate() const;
};

// A full simulation scenario: immutable after load, safe to share across
// threads by const reference.
struct Scenario {
  SystemParams params;
  UrllcSpec urllc;
  DistanceModel distance;
  std::uint64_t seed = 1;

  void validate() const;
};

// ---------------------------------------------------------------------------
// Calibration.
//
// The geometry constants (pupil area A, LED baseline delta, strip length L,
// the reading of w) under-determine the absolute link budget. The calibration
// fits the two scale knobs against a documented anchor operating point:
//   rate_scale:  64-QAM reaches `latency_s` at `distance_m`
//   gain_scale:  64-QAM meets exact BER `ber` at `distance_m` with `power_w`
// ---------------------------------------------------------------------------
struct CalibrationAnchors {
  double distance_m = 52.0;
  double latency_s = 1e-3;
  double power_w = 1.2;
  double aoi_deg = 60.0;
  double ber = 1e-4;
  int order = 64;
};

struct CalibrationScales {
  double gain_scale;
  double rate_scale;
};

CalibrationScales fit_calibration(const SystemParams& p,
                                  const CalibrationAnchors& anchors = {});

// Returns a copy of p with the fitted scales applied.
SystemParams calibrated(SystemParams p, const CalibrationAnchors& anchors = {});

}  // namespace occ
