#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cutcell/vec.hpp"

namespace cutcell {

// Tensor-product Cartesian grid in 1, 2, or 3 dimensions.
//
// Internally every grid is stored as a 3D box of cells; collapsed axes carry a
// single cell spanning [0,1]. With that convention a cell "volume" is always
// the product of the three extents, which reproduces the natural measure in
// each dimension (length in 1D, area in 2D, volume in 3D), and face measures
// follow the same rule one dimension down.
struct CartesianGrid {
  int dim = 0;
  std::array<std::vector<double>, 3> edges;  // per-axis abscissas, size n[a]+1
  std::array<int, 3> n = {0, 0, 0};          // cells per axis

  int cell_count() const { return n[0] * n[1] * n[2]; }
  int face_count(int axis) const {
    int c = 1;
    for (int a = 0; a < 3; ++a) c *= (a == axis) ? n[a] + 1 : n[a];
    return c;
  }

  int cell_index(int i, int j, int k) const { return i + n[0] * (j + n[1] * k); }
  std::array<int, 3> cell_coords(int c) const {
    return {c % n[0], (c / n[0]) % n[1], c / (n[0] * n[1])};
  }

  // Faces normal to `axis` are indexed like cells but with n[axis]+1 entries
  // along that axis; face (i,j,k) is the low face of cell (i,j,k).
  int face_index(int axis, int i, int j, int k) const {
    std::array<int, 3> m = {n[0], n[1], n[2]};
    m[axis] += 1;
    return i + m[0] * (j + m[1] * k);
  }

  double lo(int axis, int i) const { return edges[axis][i]; }
  double hi(int axis, int i) const { return edges[axis][i + 1]; }
  double width(int axis, int i) const { return edges[axis][i + 1] - edges[axis][i]; }
  double center(int axis, int i) const {
    return 0.5 * (edges[axis][i] + edges[axis][i + 1]);
  }

  Vec3 cell_center(int c) const {
    auto [i, j, k] = cell_coords(c);
    return {center(0, i), center(1, j), center(2, k)};
  }
  double cell_volume(int c) const {
    auto [i, j, k] = cell_coords(c);
    return width(0, i) * width(1, j) * width(2, k);
  }

  // Measure of a full face normal to `axis` through cell (i,j,k): the product
  // of the extents along the other two axes.
  double face_measure(int axis, int i, int j, int k) const {
    std::array<int, 3> ijk = {i, j, k};
    double m = 1.0;
    for (int a = 0; a < 3; ++a)
      if (a != axis) m *= width(a, ijk[a]);
    return m;
  }

  double min_width() const;
};

// Builds a grid from explicit abscissas; axes beyond `dim` are collapsed.
// Throws std::invalid_argument unless every axis is strictly increasing with
// at least one cell.
CartesianGrid make_grid(int dim, std::array<std::vector<double>, 3> edges);

// Uniform grid on the box [lo, hi] with n cells per axis.
CartesianGrid make_uniform_grid(int dim, const Vec3& lo, const Vec3& hi,
                                const std::array<int, 3>& n);

}  // namespace cutcell
