#include "cutcell/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutcell {

double CartesianGrid::min_width() const {
  double w = edges[0][1] - edges[0][0];
  for (int a = 0; a < dim; ++a)
    for (int i = 0; i < n[a]; ++i) w = std::min(w, width(a, i));
  return w;
}

CartesianGrid make_grid(int dim, std::array<std::vector<double>, 3> edges) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("grid dimension must be 1, 2, or 3");
  CartesianGrid g;
  g.dim = dim;
  for (int a = dim; a < 3; ++a) edges[a] = {0.0, 1.0};
  for (int a = 0; a < 3; ++a) {
    if (edges[a].size() < 2)
      throw std::invalid_argument("grid axis needs at least one cell");
    for (size_t i = 0; i + 1 < edges[a].size(); ++i)
      if (!(edges[a][i] < edges[a][i + 1]))
        throw std::invalid_argument("grid abscissas must be strictly increasing");
    g.n[a] = static_cast<int>(edges[a].size()) - 1;
    g.edges[a] = std::move(edges[a]);
  }
  return g;
}

CartesianGrid make_uniform_grid(int dim, const Vec3& lo, const Vec3& hi,
                                const std::array<int, 3>& n) {
  std::array<std::vector<double>, 3> edges;
  for (int a = 0; a < dim; ++a) {
    if (n[a] < 1) throw std::invalid_argument("grid needs at least one cell per axis");
    edges[a].resize(n[a] + 1);
    for (int i = 0; i <= n[a]; ++i)
      edges[a][i] = lo[a] + (hi[a] - lo[a]) * (static_cast<double>(i) / n[a]);
    edges[a].back() = hi[a];
  }
  return make_grid(dim, std::move(edges));
}

}  // namespace cutcell
