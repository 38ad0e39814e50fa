#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "mcpipe/geometry.hpp"
#include "mcpipe/parallel.hpp"
#include "mcpipe/props.hpp"

namespace mcpipe {

// Boundary data for one steady flow state.
struct FlowBC {
  double v1 = 5.0;        // inlet-1 normal speed, m/s
  double v2_on = 0.0;     // inlet-2 normal speed during a pulse; <= 0 treats it as a wall
  double intensity = 0.05;
  double dh_inlet1 = 0.15;
  double dh_inlet2 = 0.15;
  double p_outlet = 0.0;  // gauge

  void validate() const {
    if (!(v1 > 0.0)) throw ValidationError("FlowBC: v1 must be > 0");
    if (v2_on < 0.0) throw ValidationError("FlowBC: v2_on must be >= 0");
    if (!(intensity > 0.0) || !(intensity < 1.0))
      throw ValidationError("FlowBC: intensity must be in (0, 1)");
  }
};

struct SolveControls {
  double tol = 1e-6;          // scaled-residual convergence target
  int max_outer = 5000;
  double relax_u = 0.7;
  double relax_p = 0.3;
  double relax_ke = 0.8;
  int sweeps_uvw = 4;
  int sweeps_ke = 4;
  int sweeps_p = 160;         // cap per outer iteration
  double p_rel_tol = 0.05;    // residual drop target of the inner pressure solve
  double k_floor = 1e-10;
  double eps_floor = 1e-10;
  Exec exec = Exec::OpenMP;
  bool log_progress = false;  // residual lines to stderr
};

struct FlowStats {
  int iterations = 0;
  bool converged = false;
  // scaled residuals: u, v, w, continuity, k, eps
  std::array<double, 6> residuals{};
  long long clip_count = 0;          // k/eps floor hits across the run
  double mass_balance_rel = 0.0;     // |sum of boundary fluxes| / inlet flux
};

// Converged RANS state: collocated cell fields plus conservative face mass
// fluxes (kg/s, positive along the +axis of the face). Immutable once built.
struct FlowField {
  std::vector<double> u, v, w;  // m/s
  std::vector<double> p;        // Pa gauge
  std::vector<double> k;        // m^2/s^2
  std::vector<double> eps;      // m^2/s^3
  std::vector<double> mu_t;     // kg/(m s)
  std::vector<double> flux;     // per face, kg/s
  FlowStats stats;
};

double reynolds_number(const FluidProps& props, double speed, double diameter);

// k = 1.5 (I U)^2, eps = C_mu^{3/4} k^{3/2} / (0.07 D_h); floors for U <= 0.
std::pair<double, double> inlet_turbulence(double intensity, double speed, double d_h,
                                           const TurbulenceConstants& tc = {},
                                           double k_floor = 1e-10, double eps_floor = 1e-10);

// mu_t = rho C_mu k^2 / eps with the floor substituted for a degenerate eps.
double eddy_viscosity(double rho, double k, double eps, double c_mu = 0.09,
                      double eps_floor = 1e-10);

// SIMPLE with first-order upwind convection, Rhie-Chow face fluxes, standard
// k-epsilon with equilibrium wall functions. Iterates until every scaled
// residual drops below controls.tol; throws NumericalError on divergence or
// when max_outer is exhausted.
FlowField solve_steady_flow(const Mesh& mesh, const FlowBC& bc, const FluidProps& props,
                            const TurbulenceConstants& tc = {},
                            const SolveControls& controls = {});

// Quasi-steady pair driving the pulsed transport: `on` solved with the
// branch inlet active, `off` with the branch treated as a wall.
std::pair<FlowField, FlowField> two_state_fields(const Mesh& mesh, const FlowBC& bc,
                                                 const FluidProps& props,
                                                 const TurbulenceConstants& tc = {},
                                                 const SolveControls& controls = {});

// Net mass flux through a boundary tag, positive out of the domain.
double boundary_mass_flux(const Mesh& mesh, const FlowField& field, FaceTag tag);

// Area-weighted mean normal speed through the outlet.
double outlet_mean_speed(const Mesh& mesh, const FlowField& field, const FluidProps& props);

double max_cell_speed(const FlowField& field);

// One CSV row per cell: x,y,z,u,v,w,p,k,eps,mu_t.
std::string field_dump_csv(const Mesh& mesh, const FlowField& field);

}  // namespace mcpipe
