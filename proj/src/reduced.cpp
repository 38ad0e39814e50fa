#include "mcpipe/reduced.hpp"

#include <algorithm>
#include <cmath>

namespace mcpipe {

namespace {
constexpr double kPi = 3.14159265358979323846;
// exp() arguments below -720 underflow to zero; used to bound the support of
// a single release so long bit streams cost O(pulses * local window).
constexpr double kExpCutoff = 720.0;
}  // namespace

double impulse_response(const Channel1D& ch, double mass, double t) {
  ch.validate();
  if (t <= 0.0) return 0.0;
  const double denom = 4.0 * ch.d_ax * t;
  const double arg = (ch.length - ch.u * t) * (ch.length - ch.u * t) / denom;
  return (mass / ch.area) / std::sqrt(kPi * denom) * std::exp(-arg);
}

double pulse_response(const Channel1D& ch, double mass, double t0, double t_e, double t,
                      int n_slices) {
  ch.validate();
  if (!(t_e > 0.0)) throw ValidationError("pulse_response: t_e must be > 0");
  if (n_slices < 1) throw ValidationError("pulse_response: n_slices must be >= 1");
  const double m_slice = mass / n_slices;
  double c = 0.0;
  for (int q = 0; q < n_slices; ++q) {
    const double tau = t0 + (q + 0.5) * t_e / n_slices;
    c += impulse_response(ch, m_slice, t - tau);
  }
  return c;
}

double taylor_dispersion(const FluidProps& props, double pipe_diameter, double v1) {
  props.validate();
  if (!(pipe_diameter > 0.0) || !(v1 > 0.0))
    throw ValidationError("taylor_dispersion: diameter and v1 must be > 0");
  const double re = props.rho_air * v1 * pipe_diameter / props.mu_mix;
  if (re <= 4000.0)
    throw ValidationError("taylor_dispersion: Re <= 4000, closure valid only for turbulent flow");
  const double f = 0.316 * std::pow(re, -0.25);
  const double u_star = v1 * std::sqrt(f / 8.0);
  return 10.1 * (pipe_diameter / 2.0) * u_star;
}

RxTrace sequence_response(const Channel1D& ch, const EmissionSchedule& schedule,
                          const FluidProps& props, double a_branch, double dt,
                          double duration, int n_slices) {
  ch.validate();
  if (!(dt > 0.0) || !(duration > 0.0))
    throw ValidationError("sequence_response: dt and duration must be > 0");
  if (n_slices < 1) throw ValidationError("sequence_response: n_slices must be >= 1");

  RxTrace tr;
  tr.dt = dt;
  tr.v1 = ch.u;
  tr.v2 = schedule.v2;
  tr.t_e = schedule.t_e;
  tr.t_b = schedule.t_b;
  const auto n = static_cast<size_t>(std::llround(duration / dt));
  tr.value.assign(n, 0.0);

  const double pulse_mass = props.rho_voc * a_branch * schedule.v2 * schedule.t_e;
  const double m_slice = pulse_mass / n_slices;

  // Per-slice support: |L - u x|^2 / (4 D x) <= cutoff. Two fixed-point
  // passes widen the bound enough to cover the growth of the variance.
  double w = std::sqrt(4.0 * ch.d_ax * (ch.length / ch.u) * kExpCutoff);
  for (int pass = 0; pass < 2; ++pass)
    w = std::sqrt(4.0 * ch.d_ax * ((ch.length + w) / ch.u) * kExpCutoff);
  const double x_lo = std::max(0.0, (ch.length - w) / ch.u);
  const double x_hi = (ch.length + w) / ch.u;

  for (size_t b = 0; b < schedule.bits.size(); ++b) {
    if (!schedule.bits[b]) continue;
    const double t0 = static_cast<double>(b) * schedule.t_b;
    for (int q = 0; q < n_slices; ++q) {
      const double tau = t0 + (q + 0.5) * schedule.t_e / n_slices;
      const auto i_lo =
          static_cast<long long>(std::floor((tau + x_lo) / dt)) - 1;
      const auto i_hi = static_cast<long long>(std::ceil((tau + x_hi) / dt));
      const auto lo = static_cast<size_t>(std::max<long long>(0, i_lo));
      const auto hi = static_cast<size_t>(
          std::min<long long>(static_cast<long long>(n), i_hi));
      for (size_t i = lo; i < hi; ++i)
        tr.value[i] += impulse_response(ch, m_slice, tr.time_at(i) - tau);
    }
  }

  // value column carries the mass-fraction view (conc / rho_air) so traces
  // from either channel share one CSV schema.
  tr.conc = tr.value;
  for (auto& v : tr.value) v /= props.rho_air;
  return tr;
}

}  // namespace mcpipe
