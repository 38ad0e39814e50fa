#include "mcpipe/link.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace mcpipe {

bool EmissionSchedule::active(double t) const {
  for (size_t n = 0; n < bits.size(); ++n) {
    if (!bits[n]) continue;
    const double start = static_cast<double>(n) * t_b;
    if (t > start && t <= start + t_e) return true;
    if (start > t) break;  // windows are ordered
  }
  return false;
}

std::pair<double, double> EmissionSchedule::window(size_t n) const {
  if (n >= bits.size() || !bits[n]) return {0.0, 0.0};
  const double start = static_cast<double>(n) * t_b;
  return {start, start + t_e};
}

EmissionSchedule modulate(const std::vector<uint8_t>& bits, double t_b, double t_e, double v2) {
  if (!(t_e > 0.0)) throw ValidationError("modulate: t_e must be > 0");
  if (t_e > t_b)
    throw ValidationError("modulate: t_e must not exceed t_b (emission would spill into the next bit slot)");
  if (!(v2 > 0.0)) throw ValidationError("modulate: v2 must be > 0");
  EmissionSchedule s;
  s.bits = bits;
  s.t_b = t_b;
  s.t_e = t_e;
  s.v2 = v2;
  return s;
}

double mass_flow_rate(const EmissionSchedule& s, double t, const FluidProps& props,
                      double a_branch) {
  if (t < 0.0 || !s.active(t)) return 0.0;
  return props.rho_voc * a_branch * s.v2;
}

double molar_flow_rate(const EmissionSchedule& s, double t, const FluidProps& props,
                       double a_branch) {
  // mass rate in g/s over molar weight in g/mol
  return mass_flow_rate(s, t, props, a_branch) * 1000.0 / props.mw_voc;
}

RxTrace sensor_respond(const RxTrace& trace, const SensorModel& model) {
  model.validate();
  RxTrace out = trace;
  const double er = std::exp(-trace.dt / model.tau_rise);
  const double ef = std::exp(-trace.dt / model.tau_fall);
  double s = 0.0;
  for (size_t i = 0; i < trace.size(); ++i) {
    const double target = model.gain * trace.value[i];
    const double e = target > s ? er : ef;
    s = target + (s - target) * e;
    out.value[i] = s;
  }
  out.conc.clear();
  return out;
}

RxTrace normalize(const RxTrace& trace) {
  if (trace.size() == 0) throw ValidationError("normalize: empty trace");
  RxTrace out = trace;
  double peak = 0.0;
  for (double v : trace.value) peak = std::max(peak, v);
  if (peak == 0.0) {
    out.zero_flagged = true;
    return out;
  }
  for (auto& v : out.value) v /= peak;
  out.conc.clear();
  return out;
}

double calibrate_peak(const RxTrace& pilot) {
  if (pilot.size() == 0) throw ValidationError("calibrate_peak: empty pilot trace");
  size_t best = 0;
  double peak = pilot.value[0];
  for (size_t i = 1; i < pilot.size(); ++i) {
    if (pilot.value[i] > peak) {
      peak = pilot.value[i];
      best = i;
    }
  }
  if (peak <= 0.0) throw ValidationError("calibrate_peak: pilot trace carries no signal");
  return pilot.time_at(best);
}

DecodedResult decode(const RxTrace& normalized, const DecoderConfig& cfg) {
  cfg.validate();
  const double t_last = cfg.t_peak + static_cast<double>(cfg.n_bits ? cfg.n_bits - 1 : 0) * cfg.t_b;
  const double t_cover = normalized.size() ? normalized.time_at(normalized.size() - 1) : 0.0;
  if (t_cover + normalized.dt / 2.0 < t_last) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "decode: trace ends at %.6g s but sampling requires %.6g s (missing %.6g s)",
                  t_cover, t_last, t_last - t_cover);
    throw ValidationError(buf);
  }
  DecodedResult r;
  r.bits.reserve(cfg.n_bits);
  for (size_t n = 0; n < cfg.n_bits; ++n) {
    const double ts = cfg.t_peak + static_cast<double>(n) * cfg.t_b;
    auto idx = static_cast<long long>(std::llround(ts / normalized.dt)) - 1;
    idx = std::clamp<long long>(idx, 0, static_cast<long long>(normalized.size()) - 1);
    const double v = normalized.value[static_cast<size_t>(idx)];
    r.bits.push_back(v >= cfg.threshold ? 1 : 0);
    r.sample_times.push_back(ts);
    r.sample_values.push_back(v);
  }
  return r;
}

double ber(const std::vector<uint8_t>& tx, const std::vector<uint8_t>& rx) {
  if (tx.size() != rx.size())
    throw ValidationError("ber: sequences differ in length");
  if (tx.empty()) throw ValidationError("ber: empty sequences");
  size_t errs = 0;
  for (size_t i = 0; i < tx.size(); ++i)
    if ((tx[i] != 0) != (rx[i] != 0)) ++errs;
  return static_cast<double>(errs) / static_cast<double>(tx.size());
}

std::vector<uint8_t> random_bits(uint64_t seed, size_t n) {
  if (n < 1) throw ValidationError("random_bits: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<uint8_t>(rng() >> 63);
  return bits;
}

double dilution_factor(double v1, double v2, double d1, double d2) {
  if (!(v1 > 0.0) || !(v2 > 0.0) || !(d1 > 0.0) || !(d2 > 0.0))
    throw ValidationError("dilution_factor: all arguments must be > 0");
  const double r = d2 / d1;
  return (v2 / v1) * r * r;
}

}  // namespace mcpipe
