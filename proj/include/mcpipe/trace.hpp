#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mcpipe {

// Uniformly sampled receiver time series. Sample i holds the value at
// t = (i+1)*dt, matching one recorded sample per simulation step. `value` is
// mass fraction for raw solver traces, kg/m^3 after density scaling, or a
// dimensionless signal after the sensor / normalization stages.
struct RxTrace {
  double dt = 0.01;
  std::vector<double> value;
  std::vector<double> conc;  // kg/m^3 companion column for raw traces

  // Metadata carried into CSV headers and reports.
  double v1 = 0.0, v2 = 0.0, t_e = 0.0, t_b = 0.0;
  std::string bits_id;
  bool zero_flagged = false;  // set by normalize() on an all-zero trace

  size_t size() const { return value.size(); }
  double time_at(size_t i) const { return static_cast<double>(i + 1) * dt; }
};

}  // namespace mcpipe
