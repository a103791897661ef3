#include "cutcell/implicit_clip.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace cutcell::clip {
namespace {

// ===================== 1D =====================

struct SegmentWorker {
  const ImplicitGeometry& g;
  Vec3 base;
  int axis;
  ClipOptions opt;
  double root_tol;
  SegmentMoments out;

  double eval(double s) {
    Vec3 p = base;
    p[axis] = s;
    return g.psi(p);
  }

  // Refines a bracketed sign change by bisection on the true level set.
  double root(double a, double fa, double b, double fb) {
    (void)fb;
    while (b - a > root_tol) {
      const double m = 0.5 * (a + b);
      const double fm = eval(m);
      if ((fm < 0) == (fa < 0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    return 0.5 * (a + b);
  }

  void add_light(double a, double b) {
    out.measure += b - a;
    out.moment += 0.5 * (a + b) * (b - a);
  }

  // Interval certified to hold at most one crossing.
  void leaf(double a, double fa, double b, double fb) {
    const bool la = fa < 0, lb = fb < 0;
    if (la && lb) {
      add_light(a, b);
    } else if (la != lb) {
      const double r = root(a, fa, b, fb);
      out.crossings.push_back(r);
      if (la)
        add_light(a, r);
      else
        add_light(r, b);
    }
  }

  void recurse(double a, double fa, double b, double fb, int depth) {
    const double m = 0.5 * (a + b);
    const double fm = eval(m);
    const double res = std::abs(fm - 0.5 * (fa + fb));
    const double fmin = std::min({std::abs(fa), std::abs(fm), std::abs(fb)});
    const double fmax = std::max({std::abs(fa), std::abs(fm), std::abs(fb)});
    const bool same_sign = ((fa < 0) == (fm < 0)) && ((fm < 0) == (fb < 0));
    if (depth >= opt.min_depth) {
      if (same_sign && fmin > 3.0 * res) {
        // The chord stays a safe distance from zero and psi tracks it.
        if (fa < 0) add_light(a, b);
        return;
      }
      if (res <= 0.05 * fmax || depth >= opt.max_depth) {
        leaf(a, fa, m, fm);
        leaf(m, fm, b, fb);
        return;
      }
    } else if (depth >= opt.max_depth) {
      leaf(a, fa, m, fm);
      leaf(m, fm, b, fb);
      return;
    }
    recurse(a, fa, m, fm, depth + 1);
    recurse(m, fm, b, fb, depth + 1);
  }
};

// ===================== planar polygon helpers =====================

struct P2 {
  double u, v;
};

void poly_moments_2d(const std::vector<P2>& p, double& area, double& mu, double& mv) {
  area = mu = mv = 0.0;
  const size_t n = p.size();
  for (size_t i = 0; i < n; ++i) {
    const size_t j = (i + 1) % n;
    const double cr = p[i].u * p[j].v - p[j].u * p[i].v;
    area += cr;
    mu += (p[i].u + p[j].u) * cr;
    mv += (p[i].v + p[j].v) * cr;
  }
  area *= 0.5;
  mu /= 6.0;
  mv /= 6.0;
}

// Keeps {ell <= 0}; Sutherland-Hodgman against a single half-plane.
template <class Ell>
std::vector<P2> clip_poly_2d(const std::vector<P2>& poly, Ell&& ell) {
  std::vector<P2> out;
  const size_t n = poly.size();
  out.reserve(n + 2);
  for (size_t i = 0; i < n; ++i) {
    const P2& cur = poly[i];
    const P2& nxt = poly[(i + 1) % n];
    const double lc = ell(cur.u, cur.v);
    const double ln = ell(nxt.u, nxt.v);
    const bool ic = lc <= 0.0, in = ln <= 0.0;
    if (ic) out.push_back(cur);
    if (ic != in) {
      const double t = lc / (lc - ln);
      out.push_back({cur.u + t * (nxt.u - cur.u), cur.v + t * (nxt.v - cur.v)});
    }
  }
  return out;
}

// ===================== 2D =====================

struct RectWorker {
  const ImplicitGeometry& g;
  int a0, a1;
  Vec3 base;  // carries the fixed third coordinate
  ClipOptions opt;
  RectMoments out;

  double eval(double u, double v) {
    Vec3 p = base;
    p[a0] = u;
    p[a1] = v;
    return g.psi(p);
  }

  void add_point_moment(double u, double v, double w) {
    Vec3 p = base;
    p[a0] = u;
    p[a1] = v;
    out.moment += w * p;
  }

  // Accumulates the affine-clip moments of one leaf rectangle.
  void leaf(double l0, double h0, double l1, double h1, double c, double gu, double gv) {
    const double uc = 0.5 * (l0 + h0), vc = 0.5 * (l1 + h1);
    auto ell = [&](double u, double v) { return c + gu * (u - uc) + gv * (v - vc); };
    const std::vector<P2> rect = {{l0, l1}, {h0, l1}, {h0, h1}, {l0, h1}};
    std::vector<P2> kept = clip_poly_2d(rect, ell);
    if (kept.size() >= 3) {
      double area, mu, mv;
      poly_moments_2d(kept, area, mu, mv);
      if (area > 0.0) {
        out.area += area;
        add_point_moment(mu / area, mv / area, area);
      }
    }
    // Chord of {ell = 0} inside the rectangle, by slab clipping along the line.
    const double gn = std::hypot(gu, gv);
    if (gn == 0.0) return;
    const double qu = uc - c * gu / (gn * gn);
    const double qv = vc - c * gv / (gn * gn);
    const double du = -gv / gn, dv = gu / gn;
    double tmin = -1e300, tmax = 1e300;
    auto slab = [&](double q, double d, double lo, double hi) {
      if (std::abs(d) < 1e-300) {
        if (q < lo || q > hi) tmin = 1.0, tmax = 0.0;
        return;
      }
      double t0 = (lo - q) / d, t1 = (hi - q) / d;
      if (t0 > t1) std::swap(t0, t1);
      tmin = std::max(tmin, t0);
      tmax = std::min(tmax, t1);
    };
    slab(qu, du, l0, h0);
    slab(qv, dv, l1, h1);
    if (tmax > tmin) {
      const double len = tmax - tmin;
      const double tm = 0.5 * (tmin + tmax);
      out.line += len;
      Vec3 p = base;
      p[a0] = qu + tm * du;
      p[a1] = qv + tm * dv;
      out.line_moment += len * p;
    }
  }

  void recurse(double l0, double h0, double l1, double h1, int depth) {
    const double uc = 0.5 * (l0 + h0), vc = 0.5 * (l1 + h1);
    const double hu = 0.5 * (h0 - l0), hv = 0.5 * (h1 - l1);
    double f[9];
    int idx = 0;
    bool neg = false, pos = false;
    double sum = 0, su = 0, sv = 0;
    for (int jv = -1; jv <= 1; ++jv)
      for (int ju = -1; ju <= 1; ++ju) {
        const double val = eval(uc + ju * hu, vc + jv * hv);
        f[idx++] = val;
        (val < 0 ? neg : pos) = true;
        sum += val;
        su += val * ju;
        sv += val * jv;
      }
    const double c = sum / 9.0;
    const double gu = su / (6.0 * hu);
    const double gv = sv / (6.0 * hv);
    double res = 0, fmin = 1e300;
    idx = 0;
    for (int jv = -1; jv <= 1; ++jv)
      for (int ju = -1; ju <= 1; ++ju) {
        res = std::max(res, std::abs(f[idx] - (c + gu * ju * hu + gv * jv * hv)));
        fmin = std::min(fmin, std::abs(f[idx]));
        ++idx;
      }
    const double span = std::abs(gu) * hu + std::abs(gv) * hv;
    if (depth >= opt.min_depth && !(neg && pos) && std::abs(c) > span + 3.0 * res &&
        fmin > 0.0) {
      if (neg) {
        // Entire rectangle is light.
        const double area = (h0 - l0) * (h1 - l1);
        out.area += area;
        add_point_moment(uc, vc, area);
      }
      return;
    }
    if (res <= opt.rel_tol * span || depth >= opt.max_depth) {
      leaf(l0, h0, l1, h1, c, gu, gv);
      return;
    }
    recurse(l0, uc, l1, vc, depth + 1);
    recurse(uc, h0, l1, vc, depth + 1);
    recurse(l0, uc, vc, h1, depth + 1);
    recurse(uc, h0, vc, h1, depth + 1);
  }
};

// ===================== 3D =====================

// Keeps {ell <= 0} of a planar polygon in 3D; appends the cut edge endpoints.
template <class Ell>
std::vector<Vec3> clip_poly_3d(const std::vector<Vec3>& poly, Ell&& ell,
                               std::vector<Vec3>& cut_points) {
  std::vector<Vec3> out;
  const size_t n = poly.size();
  out.reserve(n + 2);
  for (size_t i = 0; i < n; ++i) {
    const Vec3& cur = poly[i];
    const Vec3& nxt = poly[(i + 1) % n];
    const double lc = ell(cur);
    const double ln = ell(nxt);
    const bool ic = lc <= 0.0, in = ln <= 0.0;
    if (ic) out.push_back(cur);
    if (ic != in) {
      const double t = lc / (lc - ln);
      const Vec3 p = cur + t * (nxt - cur);
      out.push_back(p);
      cut_points.push_back(p);
    }
  }
  return out;
}

struct PolyAccum {
  double volume = 0.0;
  Vec3 moment;

  // Divergence-theorem contribution of one outward-oriented planar polygon.
  void add_face(const std::vector<Vec3>& p) {
    if (p.size() < 3) return;
    for (size_t i = 1; i + 1 < p.size(); ++i) {
      const Vec3& p0 = p[0];
      const Vec3& p1 = p[i];
      const Vec3& p2 = p[i + 1];
      const Vec3 av = 0.5 * cross(p1 - p0, p2 - p0);
      const Vec3 ct = (1.0 / 3.0) * (p0 + p1 + p2);
      volume += dot(av, ct) / 3.0;
      // Midpoint-rule average of x_k^2 over the triangle is exact for quadratics.
      const Vec3 m01 = 0.5 * (p0 + p1), m12 = 0.5 * (p1 + p2), m20 = 0.5 * (p2 + p0);
      for (int k = 0; k < 3; ++k) {
        const double q = (m01[k] * m01[k] + m12[k] * m12[k] + m20[k] * m20[k]) / 3.0;
        moment[k] += 0.5 * av[k] * q;
      }
    }
  }
};

struct BoxWorker {
  const ImplicitGeometry& g;
  ClipOptions opt;
  BoxMoments out;

  double eval(const Vec3& p) { return g.psi(p); }

  void leaf(const Vec3& lo, const Vec3& hi, const Vec3& ctr, double c, const Vec3& grad) {
    auto ell = [&](const Vec3& p) { return c + dot(grad, p - ctr); };
    // Corner shorthand: pick lo/hi per axis by bit.
    auto corner = [&](int bx, int by, int bz) -> Vec3 {
      return {bx ? hi.x : lo.x, by ? hi.y : lo.y, bz ? hi.z : lo.z};
    };
    // The six box faces, each ordered so the normal points out of the box.
    const std::array<std::array<Vec3, 4>, 6> faces = {{
        {corner(0, 0, 0), corner(0, 0, 1), corner(0, 1, 1), corner(0, 1, 0)},  // -x
        {corner(1, 0, 0), corner(1, 1, 0), corner(1, 1, 1), corner(1, 0, 1)},  // +x
        {corner(0, 0, 0), corner(1, 0, 0), corner(1, 0, 1), corner(0, 0, 1)},  // -y
        {corner(0, 1, 0), corner(0, 1, 1), corner(1, 1, 1), corner(1, 1, 0)},  // +y
        {corner(0, 0, 0), corner(0, 1, 0), corner(1, 1, 0), corner(1, 0, 0)},  // -z
        {corner(0, 0, 1), corner(1, 0, 1), corner(1, 1, 1), corner(0, 1, 1)},  // +z
    }};
    PolyAccum acc;
    std::vector<Vec3> cut_points;
    bool any_kept = false;
    for (const auto& f : faces) {
      std::vector<Vec3> quad(f.begin(), f.end());
      std::vector<Vec3> kept = clip_poly_3d(quad, ell, cut_points);
      if (!kept.empty()) any_kept = true;
      acc.add_face(kept);
    }
    if (!any_kept) return;
    if (cut_points.size() >= 3) {
      // Assemble the cap polygon on {ell=0}: order the cut points by angle in
      // the plane, oriented so its normal points along +grad (out of the kept
      // region).
      const double gn = norm(grad);
      const Vec3 nrm = (1.0 / gn) * grad;
      Vec3 mean;
      for (const auto& p : cut_points) mean += (1.0 / cut_points.size()) * p;
      Vec3 t1 = cross(nrm, std::abs(nrm.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0});
      t1 = (1.0 / norm(t1)) * t1;
      const Vec3 t2 = cross(nrm, t1);
      std::vector<std::pair<double, Vec3>> ang;
      ang.reserve(cut_points.size());
      for (const auto& p : cut_points)
        ang.push_back({std::atan2(dot(p - mean, t2), dot(p - mean, t1)), p});
      std::sort(ang.begin(), ang.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<Vec3> cap;
      const double dedupe = 1e-12 * (norm(hi - lo) + 1.0);
      for (const auto& [a, p] : ang) {
        (void)a;
        if (cap.empty() || norm(p - cap.back()) > dedupe) cap.push_back(p);
      }
      while (cap.size() >= 2 && norm(cap.front() - cap.back()) <= dedupe) cap.pop_back();
      if (cap.size() >= 3) {
        Vec3 av;
        for (size_t i = 1; i + 1 < cap.size(); ++i)
          av += 0.5 * cross(cap[i] - cap[0], cap[i + 1] - cap[0]);
        if (dot(av, nrm) < 0.0) std::reverse(cap.begin(), cap.end());
        acc.add_face(cap);
        // Cap area and centroid feed the interface moments.
        double area_sum = 0.0;
        Vec3 cmom;
        for (size_t i = 1; i + 1 < cap.size(); ++i) {
          const Vec3 tv = 0.5 * cross(cap[i] - cap[0], cap[i + 1] - cap[0]);
          const double at = norm(tv);
          area_sum += at;
          cmom += at * ((1.0 / 3.0) * (cap[0] + cap[i] + cap[i + 1]));
        }
        out.area += area_sum;
        out.area_moment += cmom;
      }
    }
    if (acc.volume > 0.0) {
      out.volume += acc.volume;
      out.moment += acc.moment;
    }
  }

  void recurse(const Vec3& lo, const Vec3& hi, int depth) {
    const Vec3 ctr = 0.5 * (lo + hi);
    const Vec3 half = 0.5 * (hi - lo);
    // Sample lattice: 8 corners, 6 face centers, center. The lattice is
    // symmetric, so the affine least-squares fit is diagonal.
    std::array<Vec3, 15> pts;
    int np = 0;
    for (int bz = -1; bz <= 1; bz += 2)
      for (int by = -1; by <= 1; by += 2)
        for (int bx = -1; bx <= 1; bx += 2)
          pts[np++] = {ctr.x + bx * half.x, ctr.y + by * half.y, ctr.z + bz * half.z};
    for (int a = 0; a < 3; ++a)
      for (int s = -1; s <= 1; s += 2) {
        Vec3 p = ctr;
        p[a] += s * half[a];
        pts[np++] = p;
      }
    pts[np++] = ctr;
    double f[15];
    bool neg = false, pos = false;
    double sum = 0;
    Vec3 gsum;
    for (int i = 0; i < 15; ++i) {
      f[i] = eval(pts[i]);
      (f[i] < 0 ? neg : pos) = true;
      sum += f[i];
      for (int k = 0; k < 3; ++k) gsum[k] += f[i] * (pts[i][k] - ctr[k]);
    }
    const double c = sum / 15.0;
    Vec3 grad;
    for (int k = 0; k < 3; ++k) grad[k] = gsum[k] / (10.0 * half[k] * half[k]);
    double res = 0, fmin = 1e300;
    for (int i = 0; i < 15; ++i) {
      res = std::max(res, std::abs(f[i] - (c + dot(grad, pts[i] - ctr))));
      fmin = std::min(fmin, std::abs(f[i]));
    }
    const double span =
        std::abs(grad.x) * half.x + std::abs(grad.y) * half.y + std::abs(grad.z) * half.z;
    if (depth >= opt.min_depth && !(neg && pos) && std::abs(c) > span + 3.0 * res &&
        fmin > 0.0) {
      if (neg) {
        const double vol = 8.0 * half.x * half.y * half.z;
        out.volume += vol;
        out.moment += vol * ctr;
      }
      return;
    }
    if (res <= opt.rel_tol * span || depth >= opt.max_depth) {
      leaf(lo, hi, ctr, c, grad);
      return;
    }
    for (int bz = 0; bz < 2; ++bz)
      for (int by = 0; by < 2; ++by)
        for (int bx = 0; bx < 2; ++bx) {
          const Vec3 clo = {bx ? ctr.x : lo.x, by ? ctr.y : lo.y, bz ? ctr.z : lo.z};
          const Vec3 chi = {bx ? hi.x : ctr.x, by ? hi.y : ctr.y, bz ? hi.z : ctr.z};
          recurse(clo, chi, depth + 1);
        }
  }
};

}  // namespace

SegmentMoments segment_moments(const ImplicitGeometry& g, const Vec3& base, int axis,
                               double a, double b, const ClipOptions& opt) {
  SegmentMoments empty;
  if (!(b > a)) return empty;
  SegmentWorker w{g, base, axis, opt, 1e-13 * (b - a), {}};
  const double fa = w.eval(a);
  const double fb = w.eval(b);
  w.recurse(a, fa, b, fb, 0);
  std::sort(w.out.crossings.begin(), w.out.crossings.end());
  return w.out;
}

RectMoments rect_moments(const ImplicitGeometry& g, int a0, int a1, const Vec3& lo,
                         const Vec3& hi, const ClipOptions& opt) {
  RectMoments empty;
  if (!(hi[a0] > lo[a0]) || !(hi[a1] > lo[a1])) return empty;
  RectWorker w{g, a0, a1, lo, opt, {}};
  w.recurse(lo[a0], hi[a0], lo[a1], hi[a1], 0);
  return w.out;
}

BoxMoments box_moments(const ImplicitGeometry& g, const Vec3& lo, const Vec3& hi,
                       const ClipOptions& opt) {
  BoxMoments empty;
  for (int a = 0; a < 3; ++a)
    if (!(hi[a] > lo[a])) return empty;
  BoxWorker w{g, opt, {}};
  w.recurse(lo, hi, 0);
  return w.out;
}

}  // namespace cutcell::clip
