#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mcpipe/props.hpp"
#include "mcpipe/trace.hpp"

namespace mcpipe {

// OOK pulse train: one emission window (n*t_b, n*t_b + t_e] per 1-bit.
struct EmissionSchedule {
  std::vector<uint8_t> bits;
  double t_b = 2.0;  // bit duration, s
  double t_e = 1.0;  // emission duration, s
  double v2 = 1.0;   // pulse speed, m/s

  size_t n_bits() const { return bits.size(); }
  bool active(double t) const;
  // Window (start, end] of bit n, or nullopt-equivalent {0,0} for 0-bits.
  std::pair<double, double> window(size_t n) const;
  double frame_duration() const { return static_cast<double>(bits.size()) * t_b; }
};

EmissionSchedule modulate(const std::vector<uint8_t>& bits, double t_b, double t_e, double v2);

// Eq-style closed-form rates at the branch inlet while a window is active.
double mass_flow_rate(const EmissionSchedule& s, double t, const FluidProps& props,
                      double a_branch);  // kg/s
double molar_flow_rate(const EmissionSchedule& s, double t, const FluidProps& props,
                       double a_branch);  // mol/s

// Asymmetric first-order lag: fast adsorption, slow recovery.
struct SensorModel {
  double tau_rise = 0.3;  // s
  double tau_fall = 1.5;  // s
  double gain = 1.0;      // conductance per unit concentration

  void validate() const {
    if (!(tau_rise > 0.0) || !(tau_fall > 0.0))
      throw ValidationError("SensorModel: time constants must be > 0");
    if (tau_fall < tau_rise)
      throw ValidationError("SensorModel: tau_fall must be >= tau_rise");
  }
};

// Integrates dS/dt = (gain*C - S)/tau with exact exponential steps per
// sample interval; tau switches between rise and fall per interval.
RxTrace sensor_respond(const RxTrace& trace, const SensorModel& model);

// Scales to a unit maximum; an all-zero trace is returned unchanged with
// zero_flagged set.
RxTrace normalize(const RxTrace& trace);

// Time of the global maximum of a single-pulse pilot trace (earliest on ties).
double calibrate_peak(const RxTrace& pilot);

struct DecoderConfig {
  double threshold = 0.5;
  double t_peak = 0.0;  // calibrated first-bit sampling time, s
  double t_b = 2.0;
  size_t n_bits = 0;

  void validate() const {
    if (!(threshold > 0.0) || !(threshold < 1.0))
      throw ValidationError("DecoderConfig: threshold must be in (0, 1)");
    if (!(t_peak > 0.0)) throw ValidationError("DecoderConfig: t_peak must be > 0");
  }
};

struct DecodedResult {
  std::vector<uint8_t> bits;
  std::vector<double> sample_times;
  std::vector<double> sample_values;
};

// Samples the normalized trace at T_s = t_peak + n*t_b (nearest sample) and
// thresholds. Throws when the trace does not cover the last sampling time.
DecodedResult decode(const RxTrace& normalized, const DecoderConfig& cfg);

double ber(const std::vector<uint8_t>& tx, const std::vector<uint8_t>& rx);

// Seeded mt19937_64 bit source; documented so runs reproduce across platforms.
std::vector<uint8_t> random_bits(uint64_t seed, size_t n);

// DF = (V2/V1) * (D2/D1)^2, the branch-to-main momentum-flux ratio.
double dilution_factor(double v1, double v2, double d1, double d2);

}  // namespace mcpipe
