#pragma once

#include <vector>

#include "cutcell/vec.hpp"

namespace cutcell {

// Closed-form and series reference solutions for the benchmark problems.
// Radial solutions take the distance from the shape center; the benchmark
// definitions do the Cartesian wiring. Sources follow the sign convention
// -K lap(phi) = f of the assembled steady operator.

// phi = r^4 cos(3 theta) about the origin; -lap(phi) = -7 r^2 cos(3 theta).
struct CubicHarmonicBlend {
  double value(double x, double y) const;
  Vec3 gradient(double x, double y) const;
  double source(double x, double y) const;
};

// phi = 7/4 - r^2/4 about (cx, cy); -lap(phi) = 1, and on the unit circle
// d_n(phi) + phi = 1 with the outward normal of the disk.
struct ParaboloidField {
  double cx = 0.0;
  double cy = 0.0;
  double value(double x, double y) const;
  Vec3 gradient(double x, double y) const;
};

// Cooling ball of radius R with uniform initial value phi0 and the Robin
// condition d_r(phi) + k phi = 0 at r = R: phi = sum_n C_n exp(-a mu_n^2
// t/R^2) sin(mu_n r/R)/r over the roots mu_n of mu cot(mu) = 1 - kR.
// k = 0 keeps phi = phi0 for all time.
class CoolingBallSeries {
 public:
  CoolingBallSeries(double radius, double diffusivity, double robin_coeff,
                    double phi0, int max_terms = 64);
  double value(double r, double t) const;
  double radius() const { return radius_; }

 private:
  double radius_, diff_, robin_, phi0_;
  std::vector<double> mu_, coeff_;
};

// Two half-lines with equal diffusivity meeting at x_interface, initial step
// (0 left, 1 right), value ratio phi_dark = lambda * phi_light at the
// interface and continuous flux. Similarity profile in
// eta = (x - x_interface) / (2 sqrt(K t)) with amplitude A = -1/(1+lambda):
// light (left) A*(erfc(eta) - 2), dark (right) A*erfc(eta) + 1.
struct StepShareProfile {
  double diffusivity = 1.0;
  double lambda = 1.0;
  double x_interface = 0.0;
  double amplitude() const { return -1.0 / (1.0 + lambda); }
  double value_light(double x, double t) const;
  double value_dark(double x, double t) const;
};

// Disk of radius R0 (dark phase, conductivity k_dark) initially at phi0,
// embedded in an unbounded light medium (k_light) initially at 0; value and
// flux continuous at r = R0. Spectral integrals over radial wavenumber u.
// interface_flow(t) is the total heat leaving the disk per unit time
// (positive while the disk cools).
class DiskExchangeSolution {
 public:
  DiskExchangeSolution(double k_dark, double k_light, double r0, double phi0,
                       double abs_tol = 1e-11);
  double value_inner(double r, double t) const;  // dark, r <= R0
  double value_outer(double r, double t) const;  // light, r >= R0
  double interface_flow(double t) const;
  double radius() const { return r0_; }

 private:
  double aux_y(double u) const;  // combination with Y in the outer factor
  double aux_j(double u) const;  // same with J
  double kd_, kl_, r0_, phi0_, tol_, kratio_;
};

// Ball of radius R0 (light phase, diffusivity d_light) initially at phi0,
// embedded in an unbounded dark medium (d_dark) initially at 0; value and
// flux continuous at r = R0. sigma = sqrt(d_dark/d_light) scales the outer
// wavenumber; the denominator (u cos u + L sin u)^2 + (sigma u sin u)^2 with
// L = sigma^2 - 1 carries the interface matching.
class BallExchangeSolution {
 public:
  BallExchangeSolution(double d_light, double d_dark, double r0, double phi0,
                       double abs_tol = 1e-11);
  double value_inner(double r, double t) const;  // light, r <= R0
  double value_outer(double r, double t) const;  // dark, r >= R0
  double radius() const { return r0_; }

 private:
  double denom(double u) const;
  double dl_, dd_, r0_, phi0_, tol_, sigma_, ell_;
};

}  // namespace cutcell
