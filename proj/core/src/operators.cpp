#include "cutcell/operators.hpp"

#include <array>
#include <cassert>

namespace cutcell {
namespace {

template <class F>
void for_each_face(const CartesianGrid& g, int axis, F&& fn) {
  std::array<int, 3> m = {g.n[0], g.n[1], g.n[2]};
  m[axis] += 1;
  int f = 0;
  for (int kk = 0; kk < m[2]; ++kk)
    for (int jj = 0; jj < m[1]; ++jj)
      for (int ii = 0; ii < m[0]; ++ii, ++f) {
        const std::array<int, 3> fc = {ii, jj, kk};
        std::array<int, 3> cl = fc;
        cl[axis] -= 1;
        const int clo =
            fc[axis] > 0 ? g.cell_index(cl[0], cl[1], cl[2]) : -1;
        const int chi =
            fc[axis] < g.n[axis] ? g.cell_index(fc[0], fc[1], fc[2]) : -1;
        fn(f, clo, chi);
      }
}

}  // namespace

std::vector<double> div_bulk(const MomentSet& ms, Phase p, int axis,
                             const std::vector<double>& q) {
  const int pi = phase_index(p);
  assert(q.size() == ms.aperture[pi][axis].size());
  std::vector<double> out(ms.grid.cell_count(), 0.0);
  for_each_face(ms.grid, axis, [&](int f, int clo, int chi) {
    const double aq = ms.aperture[pi][axis][f] * q[f];
    if (clo >= 0) out[clo] += aq;
    if (chi >= 0) out[chi] -= aq;
  });
  return out;
}

std::vector<double> div_interface(const MomentSet& ms, Phase p, int axis,
                                  const std::vector<double>& q) {
  const int pi = phase_index(p);
  assert(q.size() == ms.aperture[pi][axis].size());
  std::vector<double> out(ms.grid.cell_count(), 0.0);
  for_each_face(ms.grid, axis, [&](int f, int clo, int chi) {
    const double a = ms.aperture[pi][axis][f];
    if (clo >= 0) out[clo] += (ms.line[pi][axis][clo] - a) * q[f];
    if (chi >= 0) out[chi] += (a - ms.line[pi][axis][chi]) * q[f];
  });
  return out;
}

std::vector<double> div_total(const MomentSet& ms, Phase p, int axis,
                              const std::vector<double>& q) {
  const int pi = phase_index(p);
  assert(q.size() == ms.aperture[pi][axis].size());
  std::vector<double> out(ms.grid.cell_count(), 0.0);
  for_each_face(ms.grid, axis, [&](int f, int clo, int chi) {
    if (clo >= 0) out[clo] += ms.line[pi][axis][clo] * q[f];
    if (chi >= 0) out[chi] -= ms.line[pi][axis][chi] * q[f];
  });
  return out;
}

std::vector<double> grad_bulk(const MomentSet& ms, Phase p, int axis,
                              const std::vector<double>& phi) {
  const int pi = phase_index(p);
  assert(phi.size() == static_cast<size_t>(ms.grid.cell_count()));
  std::vector<double> out(ms.grid.face_count(axis), 0.0);
  for_each_face(ms.grid, axis, [&](int f, int clo, int chi) {
    const double w = ms.stagger[pi][axis][f];
    if (clo < 0 || chi < 0 || w <= 0.0) return;
    out[f] = (ms.line[pi][axis][chi] * phi[chi] - ms.line[pi][axis][clo] * phi[clo]) / w;
  });
  return out;
}

std::vector<double> grad_interface(const MomentSet& ms, Phase p, int axis,
                                   const std::vector<double>& phi_gamma) {
  const int pi = phase_index(p);
  assert(phi_gamma.size() == static_cast<size_t>(ms.grid.cell_count()));
  std::vector<double> out(ms.grid.face_count(axis), 0.0);
  for_each_face(ms.grid, axis, [&](int f, int clo, int chi) {
    const double w = ms.stagger[pi][axis][f];
    if (clo < 0 || chi < 0 || w <= 0.0) return;
    const double a = ms.aperture[pi][axis][f];
    out[f] = ((a - ms.line[pi][axis][chi]) * phi_gamma[chi] -
              (a - ms.line[pi][axis][clo]) * phi_gamma[clo]) /
             w;
  });
  return out;
}

std::vector<double> flux(const MomentSet& ms, Phase p, int axis, double k,
                         const std::vector<double>& phi,
                         const std::vector<double>& phi_gamma) {
  std::vector<double> gb = grad_bulk(ms, p, axis, phi);
  const std::vector<double> gi = grad_interface(ms, p, axis, phi_gamma);
  for (size_t f = 0; f < gb.size(); ++f) gb[f] = -k * (gb[f] + gi[f]);
  return gb;
}

}  // namespace cutcell
