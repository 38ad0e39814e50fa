#pragma once

#include "mcpipe/errors.hpp"

namespace mcpipe {

// Gas properties of the air carrier and the VOC tracer. Defaults are the
// acetone-dominant values used throughout the numerical analysis.
struct FluidProps {
  double rho_air = 1.225;      // kg/m^3
  double rho_voc = 2.0;        // kg/m^3
  double mu_air = 1.7894e-5;   // kg/(m s)
  double mu_voc = 33.1e-5;     // kg/(m s)
  double mu_mix = 1.72e-5;     // kg/(m s), air/VOC mixture
  double d_voc_air = 1.2e-5;   // m^2/s, molecular diffusivity of VOC in air
  double mw_voc = 58.08;       // g/mol
  double mw_air = 28.96;       // g/mol
  double p_op = 101325.0;      // Pa

  void validate() const {
    auto pos = [](double v, const char* name) {
      if (!(v > 0.0)) throw ValidationError(std::string("FluidProps: ") + name + " must be > 0");
    };
    pos(rho_air, "rho_air");
    pos(rho_voc, "rho_voc");
    pos(mu_air, "mu_air");
    pos(mu_voc, "mu_voc");
    pos(mu_mix, "mu_mix");
    pos(d_voc_air, "d_voc_air");
    pos(mw_voc, "mw_voc");
    pos(mw_air, "mw_air");
    pos(p_op, "p_op");
  }
};

// Standard k-epsilon closure constants; immutable per run.
struct TurbulenceConstants {
  double c_mu = 0.09;
  double c1_eps = 1.44;
  double c2_eps = 1.92;
  double c3_eps = 0.0;
  double sigma_k = 1.0;
  double sigma_eps = 1.3;
};

// Cross-section convention for the closed-form rate formulas. The 3-D mesh is
// always a square duct; the rate formulas default to the circular area.
enum class CrossSection { Circular, Square };

double duct_area(CrossSection cs, double diameter);

}  // namespace mcpipe
