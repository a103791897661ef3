#include "cutcell/moments.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace cutcell {
namespace {

Vec3 clamp_into(Vec3 p, const Vec3& lo, const Vec3& hi) {
  for (int a = 0; a < 3; ++a) p[a] = std::clamp(p[a], lo[a], hi[a]);
  return p;
}

struct CellScan {
  double vlight = 0.0;
  Vec3 mlight;
  double gamma = 0.0;
  Vec3 gamma_mom;
};

CellScan scan_cell(const CartesianGrid& grid, const ImplicitGeometry& geom, int c,
                   const MomentOptions& opt) {
  const auto [i, j, k] = grid.cell_coords(c);
  const Vec3 lo{grid.lo(0, i), grid.lo(1, j), grid.lo(2, k)};
  const Vec3 hi{grid.hi(0, i), grid.hi(1, j), grid.hi(2, k)};
  const Vec3 ctr = grid.cell_center(c);
  CellScan out;
  if (grid.dim == 1) {
    const auto sm = clip::segment_moments(geom, ctr, 0, lo.x, hi.x, opt.clip1d);
    const double cross = grid.cell_volume(c) / grid.width(0, i);
    out.vlight = sm.measure * cross;
    out.mlight = {sm.moment * cross, out.vlight * ctr.y, out.vlight * ctr.z};
    out.gamma = cross * static_cast<double>(sm.crossings.size());
    for (double x : sm.crossings) out.gamma_mom += cross * Vec3{x, ctr.y, ctr.z};
  } else if (grid.dim == 2) {
    Vec3 base = lo;
    base.z = ctr.z;
    const auto rm = clip::rect_moments(geom, 0, 1, base, hi, opt.clip2d);
    const double wz = grid.width(2, k);
    out.vlight = rm.area * wz;
    out.mlight = wz * rm.moment;
    out.gamma = rm.line * wz;
    out.gamma_mom = wz * rm.line_moment;
  } else {
    const auto bm = clip::box_moments(geom, lo, hi, opt.clip3d);
    out.vlight = bm.volume;
    out.mlight = bm.moment;
    out.gamma = bm.area;
    out.gamma_mom = bm.area_moment;
  }
  return out;
}

struct CellState {
  double vlight, vdark, gamma;
  CellKind kind;
};

// Applies measure snapping and the degenerate-cell rules shared by
// compute_moments and classify.
CellState settle_cell(const CartesianGrid& grid, int c, const CellScan& scan,
                      double eps) {
  const double full = grid.cell_volume(c);
  double vlight = scan.vlight;
  if (vlight < eps * full) vlight = 0.0;
  if (full - vlight < eps * full) vlight = full;
  double gamma = scan.gamma;
  const auto [i, j, k] = grid.cell_coords(c);
  double gscale = 0.0;
  const std::array<int, 3> co = {i, j, k};
  for (int a = 0; a < 3; ++a) gscale += 2.0 * full / grid.width(a, co[a]);
  if (gamma < eps * gscale) gamma = 0.0;
  bool has_l = vlight > 0.0, has_d = vlight < full;
  if (has_l && has_d && gamma == 0.0) {
    // Both phases present but no interface was found: a grazing cut. Demote
    // to the majority phase.
    if (vlight >= full - vlight)
      vlight = full;
    else
      vlight = 0.0;
    has_l = vlight > 0.0;
    has_d = vlight < full;
  }
  if (!(has_l && has_d)) gamma = 0.0;
  const CellKind kind = (has_l && has_d) ? CellKind::cut
                        : has_l          ? CellKind::pure_light
                                         : CellKind::pure_dark;
  return {vlight, full - vlight, gamma, kind};
}

}  // namespace

std::vector<CellKind> classify(const CartesianGrid& grid, const ImplicitGeometry& geom,
                               const MomentOptions& opt) {
  const int nc = grid.cell_count();
  std::vector<CellKind> kinds(nc);
  for (int c = 0; c < nc; ++c)
    kinds[c] = settle_cell(grid, c, scan_cell(grid, geom, c, opt), opt.eps_geo).kind;
  return kinds;
}

MomentSet compute_moments(const CartesianGrid& grid, const ImplicitGeometry& geom,
                          const MomentOptions& opt) {
  MomentSet ms;
  ms.grid = grid;
  ms.dim = grid.dim;
  const int nc = grid.cell_count();
  for (int p = 0; p < 2; ++p) {
    ms.volume[p].assign(nc, 0.0);
    ms.centroid[p].assign(nc, Vec3{});
    for (int a = 0; a < 3; ++a) {
      ms.aperture[p][a].assign(grid.face_count(a), 0.0);
      ms.line[p][a].assign(nc, 0.0);
      ms.stagger[p][a].assign(grid.face_count(a), 0.0);
    }
  }
  ms.gamma_measure.assign(nc, 0.0);
  ms.gamma_centroid.assign(nc, Vec3{});
  ms.kind.assign(nc, CellKind::pure_light);
  for (int p = 0; p < 2; ++p)
    for (int a = 0; a < 3; ++a)
      for (int s = 0; s < 2; ++s) {
        int tn = 1;
        for (int b = 0; b < 3; ++b)
          if (b != a) tn *= grid.n[b];
        ms.boundary_centroid[p][a][s].assign(tn, Vec3{});
      }

  const double eps = opt.eps_geo;

  // ===== volumes, centroids, interface =====
  for (int c = 0; c < nc; ++c) {
    const auto [i, j, k] = grid.cell_coords(c);
    const Vec3 lo{grid.lo(0, i), grid.lo(1, j), grid.lo(2, k)};
    const Vec3 hi{grid.hi(0, i), grid.hi(1, j), grid.hi(2, k)};
    const Vec3 ctr = grid.cell_center(c);
    const double full = grid.cell_volume(c);
    const CellScan scan = scan_cell(grid, geom, c, opt);
    const CellState st = settle_cell(grid, c, scan, eps);
    ms.volume[0][c] = st.vlight;
    ms.volume[1][c] = st.vdark;
    ms.kind[c] = st.kind;
    if (st.kind == CellKind::cut) {
      // The dark first moment is the exact complement of the light one, so
      // the moment partition identity holds to the last bit.
      const Vec3 mfull = full * ctr;
      ms.centroid[0][c] = clamp_into((1.0 / st.vlight) * scan.mlight, lo, hi);
      ms.centroid[1][c] = clamp_into((1.0 / st.vdark) * (mfull - scan.mlight), lo, hi);
      ms.gamma_measure[c] = st.gamma;
      ms.gamma_centroid[c] =
          st.gamma > 0.0 ? clamp_into((1.0 / st.gamma) * scan.gamma_mom, lo, hi) : ctr;
    } else {
      ms.centroid[0][c] = ctr;
      ms.centroid[1][c] = ctr;
      ms.gamma_centroid[c] = ctr;
    }
  }

  // ===== face apertures and boundary collocation points =====
  for (int a = 0; a < ms.dim; ++a) {
    std::array<int, 3> m = {grid.n[0], grid.n[1], grid.n[2]};
    m[a] += 1;
    for (int kk = 0; kk < m[2]; ++kk)
      for (int jj = 0; jj < m[1]; ++jj)
        for (int ii = 0; ii < m[0]; ++ii) {
          const std::array<int, 3> fc = {ii, jj, kk};
          const int f = ii + m[0] * (jj + m[1] * kk);
          const bool has_lo = fc[a] > 0;
          const bool has_hi = fc[a] < grid.n[a];
          std::array<int, 3> cl = fc;
          cl[a] -= 1;
          const int clo = has_lo ? grid.cell_index(cl[0], cl[1], cl[2]) : -1;
          const int chi = has_hi ? grid.cell_index(fc[0], fc[1], fc[2]) : -1;
          double fullf = 1.0;
          for (int b = 0; b < 3; ++b)
            if (b != a) fullf *= grid.width(b, fc[b]);
          const double xf = grid.edges[a][fc[a]];
          const int cadj = has_hi ? chi : clo;
          Vec3 fctr = grid.cell_center(cadj);
          fctr[a] = xf;

          const CellKind k_lo = has_lo ? ms.kind[clo] : ms.kind[chi];
          const CellKind k_hi = has_hi ? ms.kind[chi] : ms.kind[clo];
          const bool pure_pair = k_lo == k_hi && k_lo != CellKind::cut;

          double alight;
          Vec3 c_light = fctr, c_dark = fctr;
          if (pure_pair) {
            alight = (k_lo == CellKind::pure_light) ? fullf : 0.0;
          } else if (ms.dim == 1) {
            alight = geom.psi(fctr) < 0.0 ? fullf : 0.0;
          } else if (ms.dim == 2) {
            const int b = 1 - a;
            Vec3 base = fctr;
            const auto sm = clip::segment_moments(geom, base, b, grid.lo(b, fc[b]),
                                                  grid.hi(b, fc[b]), opt.clip1d);
            const double wz = grid.width(2, fc[2]);
            alight = sm.measure * wz;
            if (sm.measure > 0.0) c_light[b] = sm.moment / sm.measure;
            const double mfull = fullf / wz * fctr[b];
            if (fullf - alight > 0.0)
              c_dark[b] = (mfull - sm.moment) / (fullf / wz - sm.measure);
          } else {
            int b0 = -1, b1 = -1;
            for (int b = 0; b < 3; ++b)
              if (b != a) (b0 < 0 ? b0 : b1) = b;
            Vec3 flo = fctr, fhi = fctr;
            flo[b0] = grid.lo(b0, fc[b0]);
            flo[b1] = grid.lo(b1, fc[b1]);
            fhi[b0] = grid.hi(b0, fc[b0]);
            fhi[b1] = grid.hi(b1, fc[b1]);
            const auto rm = clip::rect_moments(geom, b0, b1, flo, fhi, opt.clip2d);
            alight = rm.area;
            if (rm.area > 0.0) c_light = (1.0 / rm.area) * rm.moment;
            if (fullf - rm.area > 0.0)
              c_dark = (1.0 / (fullf - rm.area)) * (fullf * fctr - rm.moment);
          }
          if (alight < eps * fullf) alight = 0.0;
          if (fullf - alight < eps * fullf) alight = fullf;
          ms.aperture[0][a][f] = alight;
          ms.aperture[1][a][f] = fullf - alight;
          if (!has_lo || !has_hi) {
            const int side = has_lo ? 1 : 0;
            const int t = ms.transverse_index(a, cadj);
            ms.boundary_centroid[0][a][side][t] = alight > 0.0 ? c_light : fctr;
            ms.boundary_centroid[1][a][side][t] = alight < fullf ? c_dark : fctr;
          }
        }
  }

  // ===== isolated pocket demotion =====
  // A cut cell whose minority phase has zero aperture on every face holds a
  // pocket with no flux path to any neighbour; its unknowns would decouple.
  // Such pockets arise where the interface grazes a grid line. Absorb them
  // into the majority phase before line and staggered moments are formed.
  for (int c = 0; c < nc; ++c) {
    if (ms.kind[c] != CellKind::cut) continue;
    const auto [i, j, k] = grid.cell_coords(c);
    const int p = ms.volume[0][c] <= ms.volume[1][c] ? 0 : 1;
    bool sealed = true;
    for (int a = 0; a < ms.dim && sealed; ++a) {
      std::array<int, 3> hi = {i, j, k};
      hi[a] += 1;
      if (ms.aperture[p][a][grid.face_index(a, i, j, k)] > 0.0 ||
          ms.aperture[p][a][grid.face_index(a, hi[0], hi[1], hi[2])] > 0.0)
        sealed = false;
    }
    if (!sealed) continue;
    const double full = grid.cell_volume(c);
    ms.volume[p][c] = 0.0;
    ms.volume[1 - p][c] = full;
    ms.kind[c] = p == 0 ? CellKind::pure_dark : CellKind::pure_light;
    ms.centroid[0][c] = ms.centroid[1][c] = grid.cell_center(c);
    ms.gamma_measure[c] = 0.0;
    ms.gamma_centroid[c] = grid.cell_center(c);
  }

  // ===== centroid cross-sections =====
  for (int a = 0; a < ms.dim; ++a)
    for (int c = 0; c < nc; ++c) {
      const auto [i, j, k] = grid.cell_coords(c);
      const std::array<int, 3> co = {i, j, k};
      const double cross = grid.cell_volume(c) / grid.width(a, co[a]);
      if (ms.kind[c] != CellKind::cut) {
        ms.line[phase_index(Phase::light)][a][c] =
            ms.kind[c] == CellKind::pure_light ? cross : 0.0;
        ms.line[phase_index(Phase::dark)][a][c] =
            ms.kind[c] == CellKind::pure_dark ? cross : 0.0;
        continue;
      }
      for (int p = 0; p < 2; ++p) {
        const double s = ms.centroid[p][c][a];
        double lm;
        if (ms.dim == 1) {
          Vec3 q = grid.cell_center(c);
          q[a] = s;
          lm = geom.psi(q) < 0.0 ? cross : 0.0;
        } else if (ms.dim == 2) {
          const int b = 1 - a;
          Vec3 base = grid.cell_center(c);
          base[a] = s;
          const auto sm = clip::segment_moments(geom, base, b, grid.lo(b, co[b]),
                                                grid.hi(b, co[b]), opt.clip1d);
          lm = sm.measure * grid.width(2, k);
        } else {
          int b0 = -1, b1 = -1;
          for (int b = 0; b < 3; ++b)
            if (b != a) (b0 < 0 ? b0 : b1) = b;
          Vec3 flo = grid.cell_center(c), fhi = flo;
          flo[a] = fhi[a] = s;
          flo[b0] = grid.lo(b0, co[b0]);
          flo[b1] = grid.lo(b1, co[b1]);
          fhi[b0] = grid.hi(b0, co[b0]);
          fhi[b1] = grid.hi(b1, co[b1]);
          lm = clip::rect_moments(geom, b0, b1, flo, fhi, opt.clip2d).area;
        }
        double bp = (p == 0) ? lm : cross - lm;
        if (bp < eps * cross) bp = 0.0;
        if (cross - bp < eps * cross) bp = cross;
        ms.line[p][a][c] = bp;
      }
    }

  // ===== staggered volumes =====
  for (int a = 0; a < ms.dim; ++a) {
    std::array<int, 3> m = {grid.n[0], grid.n[1], grid.n[2]};
    m[a] += 1;
    for (int kk = 0; kk < m[2]; ++kk)
      for (int jj = 0; jj < m[1]; ++jj)
        for (int ii = 0; ii < m[0]; ++ii) {
          const std::array<int, 3> fc = {ii, jj, kk};
          if (fc[a] == 0 || fc[a] == grid.n[a]) continue;
          const int f = ii + m[0] * (jj + m[1] * kk);
          std::array<int, 3> cl = fc;
          cl[a] -= 1;
          const int clo = grid.cell_index(cl[0], cl[1], cl[2]);
          const int chi = grid.cell_index(fc[0], fc[1], fc[2]);
          double fullf = 1.0;
          for (int b = 0; b < 3; ++b)
            if (b != a) fullf *= grid.width(b, fc[b]);
          for (int p = 0; p < 2; ++p) {
            const CellKind mine =
                p == 0 ? CellKind::pure_light : CellKind::pure_dark;
            const CellKind theirs =
                p == 0 ? CellKind::pure_dark : CellKind::pure_light;
            double w;
            const double slo = ms.centroid[p][clo][a];
            const double shi = ms.centroid[p][chi][a];
            const double box = (shi - slo) * fullf;
            if (ms.kind[clo] == mine && ms.kind[chi] == mine) {
              w = box;
            } else if (ms.kind[clo] == theirs && ms.kind[chi] == theirs) {
              w = 0.0;
            } else if (!(shi > slo)) {
              w = 0.0;
            } else {
              double lm;
              if (ms.dim == 1) {
                const auto sm = clip::segment_moments(geom, grid.cell_center(clo), a,
                                                      slo, shi, opt.clip1d);
                lm = sm.measure * fullf;
              } else if (ms.dim == 2) {
                const int b = 1 - a;
                Vec3 blo = grid.cell_center(clo), bhi = blo;
                blo[a] = slo;
                bhi[a] = shi;
                blo[b] = grid.lo(b, fc[b]);
                bhi[b] = grid.hi(b, fc[b]);
                const auto rm = clip::rect_moments(geom, a, b, blo, bhi, opt.clip2d);
                lm = rm.area * grid.width(2, fc[2]);
              } else {
                Vec3 blo{grid.lo(0, fc[0]), grid.lo(1, fc[1]), grid.lo(2, fc[2])};
                Vec3 bhi{grid.hi(0, fc[0]), grid.hi(1, fc[1]), grid.hi(2, fc[2])};
                blo[a] = slo;
                bhi[a] = shi;
                lm = clip::box_moments(geom, blo, bhi, opt.stagger3d).volume;
              }
              w = (p == 0) ? lm : box - lm;
              if (w < eps * box) w = 0.0;
              if (box - w < eps * box) w = box;
            }
            ms.stagger[p][a][f] = w;
          }
        }
  }

  return ms;
}

void write_moments_csv(std::ostream& os, const MomentSet& ms) {
  const auto& g = ms.grid;
  os << "i,j,k,kind,v_light,v_dark";
  for (const char* p : {"light", "dark"})
    os << ",cx_" << p << ",cy_" << p << ",cz_" << p;
  for (int a = 0; a < g.dim; ++a)
    for (const char* p : {"light", "dark"})
      os << ",aperture" << a << "_lo_" << p << ",line" << a << "_" << p << ",stagger"
         << a << "_lo_" << p;
  os << ",gamma,gamma_cx,gamma_cy,gamma_cz\n";
  for (int c = 0; c < g.cell_count(); ++c) {
    const auto [i, j, k] = g.cell_coords(c);
    os << i << ',' << j << ',' << k << ',' << static_cast<int>(ms.kind[c]) << ','
       << ms.volume[0][c] << ',' << ms.volume[1][c];
    for (int p = 0; p < 2; ++p)
      os << ',' << ms.centroid[p][c].x << ',' << ms.centroid[p][c].y << ','
         << ms.centroid[p][c].z;
    for (int a = 0; a < g.dim; ++a) {
      const int f = g.face_index(a, i, j, k);
      for (int p = 0; p < 2; ++p)
        os << ',' << ms.aperture[p][a][f] << ',' << ms.line[p][a][c] << ','
           << ms.stagger[p][a][f];
    }
    os << ',' << ms.gamma_measure[c] << ',' << ms.gamma_centroid[c].x << ','
       << ms.gamma_centroid[c].y << ',' << ms.gamma_centroid[c].z << '\n';
  }
}

}  // namespace cutcell
