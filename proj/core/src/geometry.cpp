#include "cutcell/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cutcell {

double TrigStar::psi(const Vec3& p) const {
  const double dx = p.x - c_.x;
  const double dy = p.y - c_.y;
  const double r = std::sqrt(dx * dx + dy * dy);
  const double theta = std::atan2(dy, dx);
  return r - (a_ + b_ * std::cos(k_ * theta));
}

SampledLevelSet::SampledLevelSet(CartesianGrid grid, std::vector<double> node_values)
    : grid_(std::move(grid)), values_(std::move(node_values)) {
  size_t expect = 1;
  for (int a = 0; a < 3; ++a) expect *= grid_.n[a] + 1;
  if (values_.size() != expect)
    throw std::invalid_argument("sampled level set needs one value per grid node");
}

double SampledLevelSet::psi(const Vec3& p) const {
  int idx[3];
  double w[3];
  for (int a = 0; a < 3; ++a) {
    const auto& e = grid_.edges[a];
    const double c = std::clamp(p[a], e.front(), e.back());
    // Find the cell containing c; upper_bound gives the first edge beyond it.
    int i = static_cast<int>(std::upper_bound(e.begin(), e.end(), c) - e.begin()) - 1;
    i = std::clamp(i, 0, grid_.n[a] - 1);
    idx[a] = i;
    w[a] = (c - e[i]) / (e[i + 1] - e[i]);
  }
  const int sx = 1;
  const int sy = grid_.n[0] + 1;
  const int sz = (grid_.n[0] + 1) * (grid_.n[1] + 1);
  double v = 0.0;
  for (int dz = 0; dz < 2; ++dz)
    for (int dy = 0; dy < 2; ++dy)
      for (int dx = 0; dx < 2; ++dx) {
        const double weight = (dx ? w[0] : 1 - w[0]) * (dy ? w[1] : 1 - w[1]) *
                              (dz ? w[2] : 1 - w[2]);
        v += weight * values_[(idx[0] + dx) * sx + (idx[1] + dy) * sy + (idx[2] + dz) * sz];
      }
  return v;
}

}  // namespace cutcell
