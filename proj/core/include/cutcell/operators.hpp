#pragma once

#include <vector>

#include "cutcell/moments.hpp"

namespace cutcell {

// Discrete one-phase operators along a single axis. All divergences return
// the volume-scaled form (V times the divergence contribution of that axis),
// so summing the returned arrays over axes gives V*div.
//
// Face flux conventions: Q is indexed by the face arrays of the grid and is a
// flux density in the +axis direction. Gradients live on interior faces with
// positive staggered volume; other entries are zero. Divergences consume
// whatever fluxes they are given, weighting by apertures (bulk form) or the
// centroid cross-sections (total form), including domain-boundary faces.

// A+ Q+ - A- Q-: the transport through the phase part of the cell faces.
std::vector<double> div_bulk(const MomentSet& ms, Phase p, int axis,
                             const std::vector<double>& q);

// (B - A+) Q+ + (A- - B) Q-: the remainder attributed to the interface.
std::vector<double> div_interface(const MomentSet& ms, Phase p, int axis,
                                  const std::vector<double>& q);

// B (Q+ - Q-): the sum of the two forms.
std::vector<double> div_total(const MomentSet& ms, Phase p, int axis,
                              const std::vector<double>& q);

// (B_hi phi_hi - B_lo phi_lo) / W on faces with W > 0.
std::vector<double> grad_bulk(const MomentSet& ms, Phase p, int axis,
                              const std::vector<double>& phi);

// ((A - B_hi) phi_g_hi - (A - B_lo) phi_g_lo) / W on faces with W > 0.
// The coefficient (A - B) vanishes identically for full cells, so interfacial
// values are only read from cut cells.
std::vector<double> grad_interface(const MomentSet& ms, Phase p, int axis,
                                   const std::vector<double>& phi_gamma);

// Q = -K (grad_bulk + grad_interface) with a constant phase diffusivity.
std::vector<double> flux(const MomentSet& ms, Phase p, int axis, double k,
                         const std::vector<double>& phi,
                         const std::vector<double>& phi_gamma);

}  // namespace cutcell
