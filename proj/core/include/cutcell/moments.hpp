#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cutcell/geometry.hpp"
#include "cutcell/grid.hpp"
#include "cutcell/implicit_clip.hpp"

namespace cutcell {

// Light is {psi<0}, dark is {psi>0}.
enum class Phase : int { light = 0, dark = 1 };

inline constexpr int phase_index(Phase p) { return static_cast<int>(p); }
inline constexpr Phase other(Phase p) {
  return p == Phase::light ? Phase::dark : Phase::light;
}

enum class CellKind : std::uint8_t { pure_light, pure_dark, cut };

struct MomentOptions {
  // Cell centroids are collocation points of the discrete operators, so the
  // planar moments carry a tolerance tight enough that quadrature noise in
  // small cut cells stays below the fine-grid discretization error.
  clip::ClipOptions clip1d{1e-10, 16, 2};
  clip::ClipOptions clip2d{1e-10, 12, 2};
  clip::ClipOptions clip3d{1e-6, 5, 1};
  // Staggered volumes are denominators of difference quotients and tolerate a
  // looser resolution than the conserved moments.
  clip::ClipOptions stagger3d{1e-5, 4, 1};
  // Measures within eps_geo (relative to the full cell/face/box measure) of an
  // extreme are snapped to it; cells whose minority phase shrinks below it are
  // demoted to pure cells. The threshold sits well above the clip quadrature
  // noise so that grid-tangent interfaces shed their zero-measure slivers.
  double eps_geo = 1e-9;
};

// Reduced geometric moments of both phases on a Cartesian grid.
//
// Storage conventions:
//  - volume/centroid/line/kind are cell arrays; aperture/stagger are face
//    arrays (per axis). Entries for a phase absent from a cell or face are 0.
//  - centroid falls back to the cell center when the phase is absent; the
//    interface centroid falls back likewise when the cell carries no
//    interface.
//  - line[p][a][cell] is the measure of the phase cross-section through the
//    phase centroid, orthogonal to axis a.
//  - stagger[p][a][face] is the phase measure of the box spanning the two
//    adjacent phase centroids along axis a (full cell extent across); it is 0
//    on domain-boundary faces, which are closed by boundary conditions
//    instead.
//
// Dark-phase measures are constructed as exact complements of the light ones,
// so the partition identities (volume, first moment, aperture) hold to the
// last bit.
struct MomentSet {
  CartesianGrid grid;
  int dim = 0;

  std::array<std::vector<double>, 2> volume;
  std::array<std::vector<Vec3>, 2> centroid;
  std::array<std::array<std::vector<double>, 3>, 2> aperture;
  std::array<std::array<std::vector<double>, 3>, 2> line;
  std::array<std::array<std::vector<double>, 3>, 2> stagger;
  std::vector<double> gamma_measure;
  std::vector<Vec3> gamma_centroid;
  std::vector<CellKind> kind;

  // Phase centroids of domain-boundary faces, used to collocate boundary
  // data: [phase][axis][side][transverse cell index]. Side 0 is the low end.
  std::array<std::array<std::array<std::vector<Vec3>, 2>, 3>, 2> boundary_centroid;

  bool is_cut(int c) const { return kind[c] == CellKind::cut; }
  bool has_phase(int c, Phase p) const { return volume[phase_index(p)][c] > 0.0; }

  // Flat index into the transverse arrays for a boundary face of `axis`.
  int transverse_index(int axis, int cell) const {
    auto co = grid.cell_coords(cell);
    int idx = 0, stride = 1;
    for (int a = 0; a < 3; ++a) {
      if (a == axis) continue;
      idx += co[a] * stride;
      stride *= grid.n[a];
    }
    return idx;
  }
};

MomentSet compute_moments(const CartesianGrid& grid, const ImplicitGeometry& geom,
                          const MomentOptions& opt = {});

// Cell labels only; agrees with compute_moments on the same inputs.
std::vector<CellKind> classify(const CartesianGrid& grid, const ImplicitGeometry& geom,
                               const MomentOptions& opt = {});

// One row per cell: indices, volumes, centroids, low-face apertures and
// staggered volumes per axis, centroid cross-sections, interface measure and
// centroid.
void write_moments_csv(std::ostream& os, const MomentSet& ms);

}  // namespace cutcell
