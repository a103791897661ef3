#pragma once

#include <functional>
#include <vector>

#include "cutcell/conditions.hpp"
#include "cutcell/fields.hpp"
#include "cutcell/moments.hpp"

namespace cutcell {

// exact(phase, centroid) -> reference value at that point.
using ExactFieldFn = std::function<double(Phase, const Vec3&)>;
using ExactGradFn = std::function<Vec3(Phase, const Vec3&)>;

// Volume-weighted RMS errors split by cell class: cells cut by the interface,
// the remaining active cells (regular), and their union. Sums run over every
// active phase with compensated accumulation, so the result is independent of
// traversal order to roundoff.
struct ErrorNorms {
  double all = 0.0;
  double reg = 0.0;
  double cut = 0.0;
};

ErrorNorms l2_error(const MomentSet& ms, const ProblemSpec& prob, const FieldState& fs,
                    const ExactFieldFn& exact);

// Same split for the discrete gradient: per cell, each component is the
// composed face gradient (bulk + interfacial part) on the low face of that
// axis, falling back to the high face where the low face carries no staggered
// volume; a cell with neither contributes only its remaining components. The
// reference gradient is evaluated at the phase centroid.
ErrorNorms h1_error(const MomentSet& ms, const ProblemSpec& prob, const FieldState& fs,
                    const ExactFieldFn& exact_unused, const ExactGradFn& exact_grad);

// Pairwise orders p_i = log(e_{i-1}/e_i)/log(h_{i-1}/h_i) (empty first slot
// omitted, so size is levels-1) and the least-squares slope of log e against
// log h over all levels.
struct OrderFit {
  std::vector<double> pairwise;
  double slope = 0.0;
};

OrderFit convergence_orders(const std::vector<double>& h, const std::vector<double>& err);

// Discrete extrema over bulk and interfacial unknowns of active phases, and
// the count of bulk cells whose value leaves [lo, hi].
struct BoundsReport {
  double min = 0.0;
  double max = 0.0;
  long outside = 0;
  long active = 0;
  double ratio() const { return active > 0 ? double(outside) / double(active) : 0.0; }
};

BoundsReport bounds_report(const MomentSet& ms, const ProblemSpec& prob,
                           const FieldState& fs, double lo, double hi);

}  // namespace cutcell
