#include "mcpipe/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "mcpipe/props.hpp"

namespace mcpipe {

double duct_area(CrossSection cs, double diameter) {
  constexpr double kPi = 3.14159265358979323846;
  if (cs == CrossSection::Circular) return kPi * diameter * diameter / 4.0;
  return diameter * diameter;
}

void PipeSpec::validate() const {
  auto pos = [](double v, const char* name) {
    if (!(v > 0.0)) throw ValidationError(std::string("PipeSpec: ") + name + " must be > 0");
  };
  pos(d1, "d1");
  pos(d2, "d2");
  pos(l1, "l1");
  pos(l2, "l2");
  pos(l3, "l3");
  pos(l4, "l4");
  pos(l5, "l5");
  if (l3 + d2 > l1)
    throw ValidationError("PipeSpec: branch does not fit on segment 1 (l3 + d2 > l1)");
  if (l5 >= l2)
    throw ValidationError("PipeSpec: probe outside segment 2 (l5 >= l2)");
  if (l1 <= d1)
    throw ValidationError("PipeSpec: segment 1 shorter than the duct width (l1 <= d1)");
  if (l2 <= d1)
    throw ValidationError("PipeSpec: segment 2 does not extend past the elbow (l2 <= d1)");
}

Probe default_probe(const PipeSpec& spec) {
  return Probe{spec.l2 - spec.l5, spec.d1 / 2.0, spec.l1 - spec.d1 / 2.0};
}

const char* face_tag_name(FaceTag tag) {
  switch (tag) {
    case FaceTag::Interior: return "interior";
    case FaceTag::Wall: return "wall";
    case FaceTag::Inlet1: return "inlet1";
    case FaceTag::Inlet2: return "inlet2";
    case FaceTag::Outlet: return "outlet";
  }
  return "?";
}

double hydraulic_diameter(const PipeSpec& spec, Duct which) {
  spec.validate();
  return which == Duct::Main ? spec.d1 : spec.d2;
}

namespace {

// Half-open index-space box.
struct IBox {
  int i0, i1, j0, j1, k0, k1;
  bool contains(int i, int j, int k) const {
    return i >= i0 && i < i1 && j >= j0 && j < j1 && k >= k0 && k < k1;
  }
  long long count() const {
    return static_cast<long long>(i1 - i0) * (j1 - j0) * (k1 - k0);
  }
};

int snap_index(double v, double h) { return static_cast<int>(std::llround(v / h)); }

// Assembles the mesh from a set of snapped boxes plus a tag rule for
// boundary faces, shared by the L-duct and the straight-duct builders.
template <class TagRule>
Mesh assemble(double h, int nx, int ny, int nz, const std::vector<IBox>& boxes,
              TagRule&& tag_of) {
  Mesh m;
  m.h = h;
  m.nx = nx;
  m.ny = ny;
  m.nz = nz;
  m.cell_at.assign(static_cast<size_t>(nx) * ny * nz, -1);

  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        bool fluid = false;
        for (const auto& b : boxes)
          if (b.contains(i, j, k)) { fluid = true; break; }
        if (fluid) {
          m.cell_at[static_cast<size_t>((k * ny + j) * nx + i)] =
              static_cast<int32_t>(m.cell_ijk.size());
          m.cell_ijk.push_back({i, j, k});
        }
      }

  const int n = m.n_cells();
  m.cell_faces.assign(static_cast<size_t>(n), {-1, -1, -1, -1, -1, -1});
  m.cell_nbr.assign(static_cast<size_t>(n), {-1, -1, -1, -1, -1, -1});

  // Direction order: -x,+x,-y,+y,-z,+z. Interior faces are created by the
  // lower cell; boundary faces by the adjacent fluid cell.
  const int di[6] = {-1, 1, 0, 0, 0, 0};
  const int dj[6] = {0, 0, -1, 1, 0, 0};
  const int dk[6] = {0, 0, 0, 0, -1, 1};
  for (int32_t c = 0; c < n; ++c) {
    const auto [ci, cj, ck] = m.cell_ijk[static_cast<size_t>(c)];
    for (int d = 0; d < 6; ++d) {
      const int32_t nb = m.cell_id(ci + di[d], cj + dj[d], ck + dk[d]);
      m.cell_nbr[static_cast<size_t>(c)][static_cast<size_t>(d)] = nb;
      if (nb >= 0 && (d % 2 == 0)) continue;  // the lower cell owns this interior face
      Face f;
      f.axis = static_cast<uint8_t>(d / 2);
      if (nb >= 0) {
        f.lo = c;
        f.hi = nb;
        f.tag = FaceTag::Interior;
      } else {
        if (d % 2 == 0) { f.lo = -1; f.hi = c; }
        else            { f.lo = c;  f.hi = -1; }
        f.tag = tag_of(ci, cj, ck, d);
      }
      const auto id = static_cast<int32_t>(m.faces.size());
      m.faces.push_back(f);
      m.cell_faces[static_cast<size_t>(c)][static_cast<size_t>(d)] = id;
      if (nb >= 0)
        m.cell_faces[static_cast<size_t>(nb)][static_cast<size_t>(d - 1)] = id;
    }
  }
  return m;
}

}  // namespace

Mesh build_mesh(const PipeSpec& spec, double h) {
  spec.validate();
  if (!(h > 0.0)) throw ValidationError("build_mesh: h must be > 0");

  const int n_d1 = snap_index(spec.d1, h);
  if (n_d1 < 6)
    throw ValidationError("build_mesh: resolution too coarse, fewer than 6 cells across the main duct");
  const int n_d2 = snap_index(spec.d2, h);
  if (n_d2 < 1)
    throw ValidationError("build_mesh: resolution too coarse, branch width under one cell");
  const int n_l1 = snap_index(spec.l1, h);
  const int n_l2 = snap_index(spec.l2, h);
  const int n_l3 = snap_index(spec.l3, h);
  const int n_l4 = snap_index(spec.l4, h) > 0 ? snap_index(spec.l4, h) : 1;

  if (n_l2 <= n_d1)
    throw ValidationError("build_mesh: snapped segment 2 does not extend past the elbow");
  if (n_l1 <= n_d1)
    throw ValidationError("build_mesh: snapped segment 1 shorter than the duct width");
  if (n_l3 + n_d2 > n_l1)
    throw ValidationError("build_mesh: snapped branch footprint exceeds segment 1");

  const IBox seg1{0, n_d1, 0, n_d1, 0, n_l1};
  const IBox seg2{0, n_l2, 0, n_d1, n_l1 - n_d1, n_l1};
  const IBox branch{0, n_d1, n_d1, n_d1 + n_l4, n_l3, n_l3 + n_d2};

  const int nx = n_l2;
  const int ny = n_d1 + n_l4;
  const int nz = n_l1;

  Mesh m = assemble(h, nx, ny, nz, {seg1, seg2, branch},
                    [&](int /*i*/, int j, int /*k*/, int d) {
                      if (d == 4 && j < n_d1) return FaceTag::Inlet1;  // -z at z=0 plane
                      if (d == 3 && j == ny - 1) return FaceTag::Inlet2;
                      return FaceTag::Wall;
                    });
  // Outlet faces: +x boundary at the domain x-extent (only segment 2 reaches it).
  for (auto& f : m.faces) {
    if (f.tag == FaceTag::Wall && f.axis == 0 && f.hi == -1) {
      const auto& ijk = m.cell_ijk[static_cast<size_t>(f.lo)];
      if (ijk[0] == nx - 1) f.tag = FaceTag::Outlet;
    }
  }

  // Overlap of seg1 and seg2 is the elbow volume; the branch is disjoint.
  const long long cells =
      seg1.count() + seg2.count() + branch.count() -
      static_cast<long long>(n_d1) * n_d1 * n_d1;
  m.analytic_volume = static_cast<double>(cells) * m.cell_volume();

  double shift = 0.0;
  auto track = [&](double v) { shift = std::max(shift, std::abs(snap_index(v, h) * h - v)); };
  track(spec.d1);
  track(spec.d2);
  track(spec.l1);
  track(spec.l2);
  track(spec.l3);
  track(spec.l4);
  m.max_snap_shift = shift;
  return m;
}

Mesh build_straight_duct(double width, double length, double h) {
  if (!(h > 0.0)) throw ValidationError("build_straight_duct: h must be > 0");
  if (!(width > 0.0) || !(length > 0.0))
    throw ValidationError("build_straight_duct: width and length must be > 0");
  const int nw = snap_index(width, h);
  if (nw < 6)
    throw ValidationError("build_straight_duct: fewer than 6 cells across the duct");
  const int nl = snap_index(length, h);
  if (nl < 2) throw ValidationError("build_straight_duct: duct shorter than two cells");

  const IBox box{0, nw, 0, nw, 0, nl};
  Mesh m = assemble(h, nw, nw, nl, {box}, [&](int, int, int k, int d) {
    if (d == 4 && k == 0) return FaceTag::Inlet1;
    if (d == 5 && k == nl - 1) return FaceTag::Outlet;
    return FaceTag::Wall;
  });
  m.analytic_volume = box.count() * m.cell_volume();
  m.max_snap_shift = std::max(std::abs(nw * h - width), std::abs(nl * h - length));
  return m;
}

int32_t probe_cell(const Mesh& mesh, const Probe& probe) {
  const double pos[3] = {probe.x, probe.y, probe.z};
  const int dims[3] = {mesh.nx, mesh.ny, mesh.nz};
  int idx[3];
  for (int a = 0; a < 3; ++a) {
    const double s = pos[a] / mesh.h;
    const auto nearest = static_cast<long long>(std::llround(s));
    long long i;
    if (std::abs(s - static_cast<double>(nearest)) < 1e-9) {
      i = nearest - 1;  // on a grid plane: lower-index cell wins
    } else {
      i = static_cast<long long>(std::floor(s));
    }
    if (i < 0 || i >= dims[a])
      throw ValidationError("probe_cell: probe position outside the mesh domain");
    idx[a] = static_cast<int>(i);
  }
  const int32_t c = mesh.cell_id(idx[0], idx[1], idx[2]);
  if (c < 0) throw ValidationError("probe_cell: probe position lies in a solid region");
  return c;
}

double Mesh::boundary_area(FaceTag tag) const {
  return static_cast<double>(boundary_face_count(tag)) * face_area();
}

int Mesh::boundary_face_count(FaceTag tag) const {
  int n = 0;
  for (const auto& f : faces)
    if (f.tag == tag) ++n;
  return n;
}

std::string Mesh::summary() const {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf, "mesh: h=%g m, grid %dx%dx%d, fluid cells %d, faces %d\n",
                h, nx, ny, nz, n_cells(), n_faces());
  os << buf;
  std::snprintf(buf, sizeof buf, "fluid volume: %.9g m^3 (analytic %.9g m^3), max snap shift %.4g m\n",
                n_cells() * cell_volume(), analytic_volume, max_snap_shift);
  os << buf;
  for (FaceTag t : {FaceTag::Inlet1, FaceTag::Inlet2, FaceTag::Outlet, FaceTag::Wall}) {
    std::snprintf(buf, sizeof buf, "%-7s faces %6d, area %.6g m^2\n", face_tag_name(t),
                  boundary_face_count(t), boundary_area(t));
    os << buf;
  }
  return os.str();
}

}  // namespace mcpipe
