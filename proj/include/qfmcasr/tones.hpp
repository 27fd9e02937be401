#pragma once

// Domain value types: drive tones, the selected NV two-level system, and the
// down-converted effective signal.

#include <stdexcept>
#include <string>

#include "qfmcasr/units.hpp"

namespace qfmcasr {

// One oscillating transverse drive: amplitude Omega = gamma*B (rad/s),
// angular frequency (rad/s), phase normalized to [0, 2*pi).
struct FieldTone {
  double amplitude = 0.0;
  double frequency = 0.0;
  double phase = 0.0;

  FieldTone() = default;
  FieldTone(double amplitude_rad_s, double frequency_rad_s, double phase_rad)
      : amplitude(amplitude_rad_s), frequency(frequency_rad_s), phase(wrap_phase(phase_rad)) {
    if (!(amplitude >= 0.0))
      throw std::invalid_argument("FieldTone: amplitude must be >= 0");
    if (!(frequency > 0.0))
      throw std::invalid_argument("FieldTone: frequency must be > 0");
  }

  static FieldTone from_field(double b_tesla, double f_hz, double phase_rad = 0.0) {
    return FieldTone(tesla_to_angular(b_tesla), hz_to_angular(f_hz), phase_rad);
  }
  static FieldTone from_rabi_hz(double rabi_hz, double f_hz, double phase_rad = 0.0) {
    return FieldTone(hz_to_angular(rabi_hz), hz_to_angular(f_hz), phase_rad);
  }

  double field_tesla() const { return angular_to_tesla(amplitude); }
  double frequency_hz() const { return angular_to_hz(frequency); }
};

enum class NvBranch { minus_one, plus_one };

inline const char* to_string(NvBranch b) {
  return b == NvBranch::minus_one ? "minus_one" : "plus_one";
}

// Selected |0> <-> |+-1> two-level subsystem. Default resonances are the
// 20.7 mT bias-field values: w_-1 = 2pi*2.29 GHz, w_+1 = 2pi*3.45 GHz.
struct NVTwoLevel {
  double resonance = kTwoPi * 2.29e9;  // rad/s
  NvBranch branch = NvBranch::minus_one;

  NVTwoLevel() = default;
  NVTwoLevel(double resonance_rad_s, NvBranch br) : resonance(resonance_rad_s), branch(br) {
    if (!(resonance > 0.0))
      throw std::invalid_argument("NVTwoLevel: resonance must be > 0");
  }

  static NVTwoLevel from_branch(NvBranch br) {
    return NVTwoLevel(br == NvBranch::minus_one ? kTwoPi * 2.29e9 : kTwoPi * 3.45e9, br);
  }
  double resonance_hz() const { return angular_to_hz(resonance); }
};

// Down-converted signal seen along the quantization axis. The amplitude is
// signed: it is the coefficient of cos(w_e t + phi_e) in the effective
// sigma_z modulation, with the sign fixed against the lab-frame integrator.
struct EffectiveSignal {
  double amplitude = 0.0;   // rad/s, signed
  double frequency = 0.0;   // rad/s, > 0 after folding
  double phase = 0.0;       // rad, [0, 2*pi)
  double stark_shift = 0.0; // rad/s

  double frequency_hz() const { return angular_to_hz(frequency); }
};

// Far-detuning diagnostics for the mixing approximation. Margins are the
// four detunings |w_{s,b} -+ w0|; ratios compare the drive amplitudes and the
// beat frequency against the smallest margin.
struct ValidityReport {
  double margin_signal_minus = 0.0;
  double margin_signal_plus = 0.0;
  double margin_bias_minus = 0.0;
  double margin_bias_plus = 0.0;
  double ratio_signal = 0.0;
  double ratio_bias = 0.0;
  double ratio_beat = 0.0;
  double threshold = 0.0;
  bool pass = false;

  double min_margin() const {
    double m = margin_signal_minus;
    if (margin_signal_plus < m) m = margin_signal_plus;
    if (margin_bias_minus < m) m = margin_bias_minus;
    if (margin_bias_plus < m) m = margin_bias_plus;
    return m;
  }
  double max_ratio() const {
    double r = ratio_signal;
    if (ratio_bias > r) r = ratio_bias;
    if (ratio_beat > r) r = ratio_beat;
    return r;
  }
};

}  // namespace qfmcasr
