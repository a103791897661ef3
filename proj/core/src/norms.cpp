#include "cutcell/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "cutcell/operators.hpp"
#include "cutcell/summation.hpp"

namespace cutcell {

namespace {

// The regular and cut entries are orthogonal components of the all-cells
// norm: all three share the total active volume as denominator, so
// all^2 = reg^2 + cut^2 holds exactly.
struct SplitSums {
  NeumaierSum num_reg, num_cut, den;
  void add(bool is_cut, double v, double esq) {
    (is_cut ? num_cut : num_reg).add(v * esq);
    den.add(v);
  }
  ErrorNorms norms() const {
    const double d = den.value();
    if (d <= 0.0) return {0.0, 0.0, 0.0};
    const double r = num_reg.value() / d;
    const double q = num_cut.value() / d;
    return {std::sqrt(r + q), std::sqrt(r), std::sqrt(q)};
  }
};

}  // namespace

ErrorNorms l2_error(const MomentSet& ms, const ProblemSpec& prob, const FieldState& fs,
                    const ExactFieldFn& exact) {
  SplitSums sums;
  const int nc = ms.grid.cell_count();
  for (int p = 0; p < 2; ++p) {
    if (!prob.phase[p].active) continue;
    const Phase ph = static_cast<Phase>(p);
    for (int c = 0; c < nc; ++c) {
      const double v = ms.volume[p][c];
      if (v <= 0.0) continue;
      const double e = fs.bulk[p][c] - exact(ph, ms.centroid[p][c]);
      sums.add(ms.is_cut(c), v, e * e);
    }
  }
  return sums.norms();
}

ErrorNorms h1_error(const MomentSet& ms, const ProblemSpec& prob, const FieldState& fs,
                    const ExactFieldFn&, const ExactGradFn& exact_grad) {
  SplitSums sums;
  const int nc = ms.grid.cell_count();
  for (int p = 0; p < 2; ++p) {
    if (!prob.phase[p].active) continue;
    const Phase ph = static_cast<Phase>(p);

    std::array<std::vector<double>, 3> g;
    for (int a = 0; a < ms.dim; ++a) {
      g[a] = grad_bulk(ms, ph, a, fs.bulk[p]);
      const auto gi = grad_interface(ms, ph, a, fs.gamma[p]);
      for (size_t f = 0; f < g[a].size(); ++f) g[a][f] += gi[f];
    }

    for (int c = 0; c < nc; ++c) {
      const double v = ms.volume[p][c];
      if (v <= 0.0) continue;
      const Vec3 gex = exact_grad(ph, ms.centroid[p][c]);
      const auto co = ms.grid.cell_coords(c);
      double esq = 0.0;
      for (int a = 0; a < ms.dim; ++a) {
        auto hi_co = co;
        hi_co[a] += 1;
        const int flo = ms.grid.face_index(a, co[0], co[1], co[2]);
        const int fhi = ms.grid.face_index(a, hi_co[0], hi_co[1], hi_co[2]);
        const double full = ms.grid.face_measure(a, co[0], co[1], co[2]);
        // Pointwise-consistent faces first: a face the phase covers entirely
        // differences two centroids across an uncut band. Cut faces compose
        // interfacial weights tuned for flux balance, not point gradients,
        // so they are only a fallback.
        int f = -1;
        for (int cand : {flo, fhi})
          if (ms.stagger[p][a][cand] > 0.0 &&
              ms.aperture[p][a][cand] >= (1.0 - 1e-12) * full) {
            f = cand;
            break;
          }
        if (f < 0)
          for (int cand : {flo, fhi})
            if (ms.stagger[p][a][cand] > 0.0) {
              f = cand;
              break;
            }
        if (f < 0) continue;
        const double d = g[a][f] - gex[a];
        esq += d * d;
      }
      sums.add(ms.is_cut(c), v, esq);
    }
  }
  return sums.norms();
}

OrderFit convergence_orders(const std::vector<double>& h, const std::vector<double>& err) {
  if (h.size() != err.size())
    throw std::invalid_argument("convergence_orders: size mismatch");
  OrderFit fit;
  const size_t n = h.size();
  for (size_t i = 1; i < n; ++i)
    fit.pairwise.push_back(std::log(err[i - 1] / err[i]) / std::log(h[i - 1] / h[i]));
  if (n >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
      const double x = std::log(h[i]);
      const double y = std::log(err[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return fit;
}

BoundsReport bounds_report(const MomentSet& ms, const ProblemSpec& prob,
                           const FieldState& fs, double lo, double hi) {
  BoundsReport rep;
  bool seen = false;
  const int nc = ms.grid.cell_count();
  for (int p = 0; p < 2; ++p) {
    if (!prob.phase[p].active) continue;
    for (int c = 0; c < nc; ++c) {
      if (ms.volume[p][c] <= 0.0) continue;
      const double v = fs.bulk[p][c];
      if (!seen) {
        rep.min = rep.max = v;
        seen = true;
      }
      rep.min = std::min(rep.min, v);
      rep.max = std::max(rep.max, v);
      ++rep.active;
      if (v < lo || v > hi) ++rep.outside;
    }
    for (int c = 0; c < nc; ++c) {
      if (!ms.is_cut(c) || ms.volume[p][c] <= 0.0) continue;
      const double v = fs.gamma[p][c];
      rep.min = std::min(rep.min, v);
      rep.max = std::max(rep.max, v);
    }
  }
  return rep;
}

}  // namespace cutcell
