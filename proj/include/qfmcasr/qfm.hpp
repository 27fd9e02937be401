#pragma once

// Closed-form quantum-frequency-mixing math for a two-level spin driven by a
// target tone and a strong AC bias tone, both transverse and far detuned.
//
// Both second-order coefficients share the kernel K(w) = w0/(w0^2 - w^2):
//
//   stark shift      delta   = Os^2 K(ws) + Ob^2 K(wb)
//   mixing amplitude Omega_e = (Os*Ob/2) * (K(ws) + K(wb))
//
// The relative sign of the two is fixed empirically: integrating the
// lab-frame dynamics and fitting the slow sigma_z modulation shows the
// mixing term carries the same kernel sign as the static shift (see the
// spin_oracle tests). Magnitudes match the usual |w^2 - w0^2| denominators.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qfmcasr/tones.hpp"
#include "qfmcasr/units.hpp"

namespace qfmcasr::qfm {

struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};
struct degenerate_frequency_error : std::domain_error {
  using std::domain_error::domain_error;
};

inline constexpr double kDefaultPoleEpsilon = 1e-12;      // relative to w0
inline constexpr double kDefaultFrequencyFloor = kTwoPi;  // 2*pi * 1 Hz
inline constexpr double kDefaultValidityThreshold = 0.05;

namespace detail {

inline void require_off_resonance(double w, double w0, double pole_eps, const char* which) {
  if (std::abs(w - w0) <= pole_eps * w0)
    throw pole_error(std::string(which) + " frequency coincides with the spin resonance");
}

// K(w) = w0 / (w0^2 - w^2)
inline double kernel(double w, double w0) { return w0 / ((w0 - w) * (w0 + w)); }

}  // namespace detail

// Signed effective amplitude Omega_e (rad/s).
inline double effective_amplitude(const FieldTone& signal, const FieldTone& bias,
                                  const NVTwoLevel& nv, double pole_eps = kDefaultPoleEpsilon) {
  detail::require_off_resonance(signal.frequency, nv.resonance, pole_eps, "signal");
  detail::require_off_resonance(bias.frequency, nv.resonance, pole_eps, "bias");
  const double ks = detail::kernel(signal.frequency, nv.resonance);
  const double kb = detail::kernel(bias.frequency, nv.resonance);
  return 0.5 * signal.amplitude * bias.amplitude * (ks + kb);
}

// AC Stark shift delta (rad/s).
inline double stark_shift(const FieldTone& signal, const FieldTone& bias, const NVTwoLevel& nv,
                          double pole_eps = kDefaultPoleEpsilon) {
  detail::require_off_resonance(signal.frequency, nv.resonance, pole_eps, "signal");
  detail::require_off_resonance(bias.frequency, nv.resonance, pole_eps, "bias");
  const double ks = detail::kernel(signal.frequency, nv.resonance);
  const double kb = detail::kernel(bias.frequency, nv.resonance);
  return signal.amplitude * signal.amplitude * ks + bias.amplitude * bias.amplitude * kb;
}

// Attenuation |Omega_e / Omega_s| for unit signal amplitude at angular
// frequency w_signal, with the given bias.
inline double amplitude_ratio(double w_signal, const FieldTone& bias, const NVTwoLevel& nv,
                              double pole_eps = kDefaultPoleEpsilon) {
  FieldTone unit(1.0, w_signal, 0.0);
  return std::abs(effective_amplitude(unit, bias, nv, pole_eps));
}

// Bundle the down-converted tone. A negative raw w_e = w_s - w_b is folded
// to positive frequency by flipping the sign of both w_e and phi_e, leaving
// Omega_e * cos(w_e t + phi_e) unchanged.
inline EffectiveSignal down_convert(const FieldTone& signal, const FieldTone& bias,
                                    const NVTwoLevel& nv,
                                    double frequency_floor = kDefaultFrequencyFloor,
                                    double pole_eps = kDefaultPoleEpsilon) {
  double we = signal.frequency - bias.frequency;
  if (std::abs(we) < frequency_floor)
    throw degenerate_frequency_error("signal and bias frequencies are degenerate");
  double phe = signal.phase - bias.phase;
  if (we < 0.0) {
    we = -we;
    phe = -phe;
  }
  EffectiveSignal e;
  e.amplitude = effective_amplitude(signal, bias, nv, pole_eps);
  e.frequency = we;
  e.phase = wrap_phase(phe);
  e.stark_shift = stark_shift(signal, bias, nv, pole_eps);
  return e;
}

// Far-detuning check; reports, never throws.
inline ValidityReport validity_check(const FieldTone& signal, const FieldTone& bias,
                                     const NVTwoLevel& nv,
                                     double threshold = kDefaultValidityThreshold) {
  ValidityReport r;
  r.threshold = threshold;
  r.margin_signal_minus = std::abs(signal.frequency - nv.resonance);
  r.margin_signal_plus = signal.frequency + nv.resonance;
  r.margin_bias_minus = std::abs(bias.frequency - nv.resonance);
  r.margin_bias_plus = bias.frequency + nv.resonance;
  const double m = r.min_margin();
  if (m > 0.0) {
    r.ratio_signal = signal.amplitude / m;
    r.ratio_bias = bias.amplitude / m;
    r.ratio_beat = std::abs(signal.frequency - bias.frequency) / m;
    r.pass = r.max_ratio() < threshold;
  } else {
    r.ratio_signal = r.ratio_bias = r.ratio_beat = std::numeric_limits<double>::infinity();
    r.pass = false;
  }
  return r;
}

}  // namespace qfmcasr::qfm
