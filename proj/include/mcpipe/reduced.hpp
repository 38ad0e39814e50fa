#pragma once

#include "mcpipe/link.hpp"
#include "mcpipe/props.hpp"
#include "mcpipe/trace.hpp"

namespace mcpipe {

// Straight 1-D advection-dispersion surrogate of the pipe: the analytic
// oracle for the 3-D transport solver on straight ducts and the fast channel
// for long bit-error experiments. It deliberately ignores the elbow and the
// branch geometry.
struct Channel1D {
  double length = 1.15 + 0.91;  // release plane to probe, m
  double u = 5.0;               // mean carrier speed, m/s
  double d_ax = 0.1;            // axial dispersion, m^2/s
  double area = 0.0176714586764425867;  // cross-section, m^2

  void validate() const {
    if (!(length > 0.0) || !(u > 0.0) || !(d_ax > 0.0) || !(area > 0.0))
      throw ValidationError("Channel1D: all parameters must be > 0");
  }
};

// Concentration at the probe after an instantaneous release of mass m at the
// origin, c(L,t) = (m/A)/sqrt(4 pi D t) * exp(-(L - u t)^2 / (4 D t));
// zero for t <= 0 by causality.
double impulse_response(const Channel1D& ch, double mass, double t);

// Release of `mass` spread uniformly over (t0, t0 + t_e], evaluated at time
// t by midpoint quadrature over n_slices sub-releases.
double pulse_response(const Channel1D& ch, double mass, double t0, double t_e, double t,
                      int n_slices);

// Taylor-style axial dispersion for turbulent pipe flow with the Blasius
// friction factor: D_ax = 10.1 (D/2) u*, u* = V1 sqrt(f/8). Requires a
// turbulent Reynolds number.
double taylor_dispersion(const FluidProps& props, double pipe_diameter, double v1);

// Superposes the pulse responses of every 1-bit window; the emitted mass per
// pulse is rho_voc * a_branch * V2 * T_e.
RxTrace sequence_response(const Channel1D& ch, const EmissionSchedule& schedule,
                          const FluidProps& props, double a_branch, double dt,
                          double duration, int n_slices = 16);

}  // namespace mcpipe
