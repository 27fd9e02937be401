#pragma once

// Unit conventions used throughout: frequencies and field amplitudes are kept
// as angular quantities (rad/s) internally; hertz and tesla appear only at
// I/O boundaries.

#include <cmath>

namespace qfmcasr {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// NV gyromagnetic ratio, g ~ 2: 2*pi * 28.024 GHz/T.
inline constexpr double kGammaNV = kTwoPi * 28.024e9;

inline constexpr double hz_to_angular(double f_hz) { return kTwoPi * f_hz; }
inline constexpr double angular_to_hz(double w) { return w / kTwoPi; }

// Field amplitude in tesla -> drive amplitude in rad/s.
inline constexpr double tesla_to_angular(double b_tesla) { return kGammaNV * b_tesla; }
inline constexpr double angular_to_tesla(double omega) { return omega / kGammaNV; }

// Normalize an angle to [0, 2*pi).
inline double wrap_phase(double phi) {
  double p = std::fmod(phi, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  if (p >= kTwoPi) p = 0.0;
  return p;
}

// Normalize an angle to (-pi, pi].
inline double wrap_phase_signed(double phi) {
  double p = std::remainder(phi, kTwoPi);
  if (p <= -0.5 * kTwoPi) p += kTwoPi;
  return p;
}

inline constexpr double deg_to_rad(double d) { return d * (kTwoPi / 360.0); }
inline constexpr double rad_to_deg(double r) { return r * (360.0 / kTwoPi); }

}  // namespace qfmcasr
