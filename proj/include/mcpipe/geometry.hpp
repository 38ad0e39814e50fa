#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mcpipe/errors.hpp"

namespace mcpipe {

// L-shaped duct dimensions in meters. Segment 1 runs along +z from inlet-1,
// segment 2 along +x to the outlet, and the branch sits on top of segment 1
// along +y with the VOC entering downward. Defaults match the testbed pipe.
struct PipeSpec {
  double d1 = 0.15;  // main duct width
  double d2 = 0.15;  // branch duct width
  double l1 = 1.15;  // segment-1 length
  double l2 = 0.91;  // segment-2 length
  double l3 = 0.10;  // inlet-1 to branch distance
  double l4 = 0.13;  // branch length
  double l5 = 0.07;  // probe to outlet distance

  void validate() const;
};

struct Probe {
  double x = 0.0, y = 0.0, z = 0.0;
};

// Default probe: on the segment-2 axis centerline, l5 upstream of the outlet.
Probe default_probe(const PipeSpec& spec);

enum class FaceTag : uint8_t { Interior, Wall, Inlet1, Inlet2, Outlet };

const char* face_tag_name(FaceTag tag);

// One grid face. The normal always points along +axis; `lo` is the cell on
// the -axis side, `hi` on the +axis side, -1 when the side is not fluid.
struct Face {
  int32_t lo = -1;
  int32_t hi = -1;
  uint8_t axis = 0;  // 0=x, 1=y, 2=z
  FaceTag tag = FaceTag::Interior;
};

// Uniform Cartesian mesh of the fluid region. Cells are classified against
// the box union of the duct segments after snapping every box coordinate to
// the nearest grid plane, so cell volumes always sum to the analytic volume
// of the snapped geometry. Immutable after construction.
struct Mesh {
  double h = 0.0;
  int nx = 0, ny = 0, nz = 0;
  std::vector<int32_t> cell_at;                   // nx*ny*nz lookup, -1 = solid
  std::vector<std::array<int32_t, 3>> cell_ijk;   // per fluid cell
  std::vector<Face> faces;
  std::vector<std::array<int32_t, 6>> cell_faces; // face ids, order -x,+x,-y,+y,-z,+z
  std::vector<std::array<int32_t, 6>> cell_nbr;   // fluid neighbor ids, -1 at boundaries
  double analytic_volume = 0.0;                   // box-union volume of the snapped geometry
  double max_snap_shift = 0.0;                    // largest |snapped - requested| coordinate

  int n_cells() const { return static_cast<int>(cell_ijk.size()); }
  int n_faces() const { return static_cast<int>(faces.size()); }
  double cell_volume() const { return h * h * h; }
  double face_area() const { return h * h; }
  int32_t cell_id(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i >= nx || j >= ny || k >= nz) return -1;
    return cell_at[static_cast<size_t>((k * ny + j) * nx + i)];
  }
  std::array<double, 3> cell_center(int32_t c) const {
    const auto& ijk = cell_ijk[static_cast<size_t>(c)];
    return {(ijk[0] + 0.5) * h, (ijk[1] + 0.5) * h, (ijk[2] + 0.5) * h};
  }
  double boundary_area(FaceTag tag) const;
  int boundary_face_count(FaceTag tag) const;
  std::string summary() const;
};

// Meshes the L-shaped duct. Requires h to resolve the main duct with at
// least 6 cells across; rejects geometry that violates PipeSpec invariants.
Mesh build_mesh(const PipeSpec& spec, double h);

// Straight square duct along +z (inlet1 at z=0, outlet at z=length) used by
// the diagnostics and the solver verification cases.
Mesh build_straight_duct(double width, double length, double h);

// The fluid cell whose bounds contain the probe; a position exactly on a
// cell boundary resolves to the lower-index cell. Throws when the probe is
// in a solid region or outside the domain.
int32_t probe_cell(const Mesh& mesh, const Probe& probe);

enum class Duct { Main, Branch };

// Square duct of side a has hydraulic diameter a.
double hydraulic_diameter(const PipeSpec& spec, Duct which);

}  // namespace mcpipe
