#pragma once

namespace cutcell {

// Bessel functions of the first and second kind, orders 0 and 1, for the
// radial reference solutions. Power series below |x| = 14 (compensated
// double-double accumulation, so the alternating-series cancellation does not
// eat the result), Hankel asymptotic expansion with optimal truncation above.
// Absolute accuracy is ~1e-12 at the switchover and better elsewhere.
// Y0/Y1 require x > 0.
double bessel_j0(double x);
double bessel_j1(double x);
double bessel_y0(double x);
double bessel_y1(double x);

}  // namespace cutcell
