#pragma once

#include <vector>

#include "cutcell/geometry.hpp"
#include "cutcell/vec.hpp"

// Low-level measure kernels for the light region {psi < 0} restricted to
// axis-aligned segments, rectangles, and boxes. Moments are evaluated by
// recursive subdivision; a leaf is reached when an affine fit of psi over the
// sample lattice is accurate enough that clipping against the fitted half
// space resolves the interface to a small fraction of the leaf size. The fit
// also yields a purity certificate (no crossing) for early termination away
// from the interface.
//
// The kernels assume the interface is resolved by the sample lattice at the
// maximum subdivision depth; features thinner than that can be missed.
namespace cutcell::clip {

struct ClipOptions {
  double rel_tol = 1e-6;  // target interface position error, relative to leaf size
  int max_depth = 8;
  int min_depth = 2;  // subdivisions before purity certificates are trusted
};

struct SegmentMoments {
  double measure = 0.0;   // length of {psi<0}
  double moment = 0.0;    // first moment of {psi<0} along the axis
  std::vector<double> crossings;  // ascending coordinates where psi changes sign
};

// psi restricted to the segment {p : p[axis] in [a,b], p[other] = base[other]}.
SegmentMoments segment_moments(const ImplicitGeometry& g, const Vec3& base, int axis,
                               double a, double b, const ClipOptions& opt = {});

struct RectMoments {
  double area = 0.0;    // area of {psi<0}
  Vec3 moment;          // first moment of {psi<0} (3D coordinates)
  double line = 0.0;    // length of {psi=0}
  Vec3 line_moment;     // first moment of {psi=0}
};

// psi restricted to the rectangle spanned by axes (a0,a1) at the fixed third
// coordinate carried by lo; lo/hi give opposite corners in 3D coordinates.
RectMoments rect_moments(const ImplicitGeometry& g, int a0, int a1, const Vec3& lo,
                         const Vec3& hi, const ClipOptions& opt = {});

struct BoxMoments {
  double volume = 0.0;  // volume of {psi<0}
  Vec3 moment;          // first moment of {psi<0}
  double area = 0.0;    // area of {psi=0}
  Vec3 area_moment;     // first moment of {psi=0}
};

BoxMoments box_moments(const ImplicitGeometry& g, const Vec3& lo, const Vec3& hi,
                       const ClipOptions& opt = {});

}  // namespace cutcell::clip
