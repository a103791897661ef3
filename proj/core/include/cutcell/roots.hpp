#pragma once

#include <functional>
#include <vector>

namespace cutcell {

// Bisection on a sign-changing bracket [lo, hi]; runs to floating-point
// interval exhaustion. Throws std::invalid_argument when f(lo) and f(hi)
// do not straddle zero.
double find_root(const std::function<double(double)>& f, double lo, double hi);

// First n positive roots mu_1 < mu_2 < ... of mu*cot(mu) + kappa - 1 = 0,
// isolated one per interval ((i-1)pi, i*pi) using the pole-free form
// mu*cos(mu) + (kappa - 1)*sin(mu). Requires kappa >= 0; for kappa = 1 the
// roots are exactly (2i-1)pi/2.
std::vector<double> radial_robin_eigenvalues(double kappa, int n);

// First n positive zeros of J1, Newton-refined from the large-zero estimate
// (i + 1/4) pi.
std::vector<double> bessel_j1_zeros(int n);

}  // namespace cutcell
