#pragma once

#include <cmath>
#include <numbers>

namespace occ {

inline constexpr double kPi = std::numbers::pi;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

// Power unit conversions. Files and the in-process API are in watts; dBW is a
// CLI-facing convenience.
inline double dbw_to_watts(double dbw) { return std::pow(10.0, dbw / 10.0); }
inline double watts_to_dbw(double watts) { return 10.0 * std::log10(watts); }

}  // namespace occ
