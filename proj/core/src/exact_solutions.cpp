#include "cutcell/exact_solutions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cutcell/quadrature.hpp"
#include "cutcell/roots.hpp"
#include "cutcell/special_functions.hpp"

namespace cutcell {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Integration stops where exp(-K u^2 t) is below double noise.
double tail_cutoff(double diffusivity, double t, double r0) {
  return std::sqrt(37.0 * r0 * r0 / (diffusivity * t));
}

// Panel boundaries spaced by the slowest period of an oscillatory factor
// with angular rate `rate` in u.
std::vector<double> oscillation_breaks(double umax, double rate) {
  std::vector<double> pts;
  const double step = kPi / std::max(rate, 1e-3);
  for (double u = step; u < umax; u += step) pts.push_back(u);
  return pts;
}

double checked(const QuadratureResult& q, const char* what) {
  if (!q.converged)
    throw std::runtime_error(std::string("reference integral did not converge: ") + what);
  return q.value;
}

}  // namespace

// ===== star-domain Poisson =====

double CubicHarmonicBlend::value(double x, double y) const {
  const double r = std::hypot(x, y);
  return r * (x * x * x - 3.0 * x * y * y);
}

Vec3 CubicHarmonicBlend::gradient(double x, double y) const {
  const double r = std::hypot(x, y);
  if (r == 0.0) return {0.0, 0.0, 0.0};
  const double g = x * x * x - 3.0 * x * y * y;
  return {g * x / r + r * 3.0 * (x * x - y * y), g * y / r - r * 6.0 * x * y, 0.0};
}

double CubicHarmonicBlend::source(double x, double y) const {
  const double r = std::hypot(x, y);
  if (r == 0.0) return 0.0;
  return -7.0 * (x * x * x - 3.0 * x * y * y) / r;
}

// ===== disk with Robin closure =====

double ParaboloidField::value(double x, double y) const {
  const double dx = x - cx;
  const double dy = y - cy;
  return 1.75 - 0.25 * (dx * dx + dy * dy);
}

Vec3 ParaboloidField::gradient(double x, double y) const {
  return {-0.5 * (x - cx), -0.5 * (y - cy), 0.0};
}

// ===== cooling ball series =====

CoolingBallSeries::CoolingBallSeries(double radius, double diffusivity,
                                     double robin_coeff, double phi0, int max_terms)
    : radius_(radius), diff_(diffusivity), robin_(robin_coeff), phi0_(phi0) {
  if (radius <= 0.0 || diffusivity <= 0.0 || robin_coeff < 0.0)
    throw std::invalid_argument("CoolingBallSeries: bad parameters");
  if (robin_ == 0.0) return;
  const double kr = robin_ * radius_;
  mu_ = radial_robin_eigenvalues(kr, max_terms);
  coeff_.reserve(mu_.size());
  for (double mu : mu_) {
    const double mu2 = mu * mu;
    const double c = (2.0 * kr * radius_ * phi0_ / mu2) * (mu2 + (kr - 1.0) * (kr - 1.0)) /
                     (mu2 + kr * (kr - 1.0)) * std::sin(mu);
    coeff_.push_back(c);
  }
}

double CoolingBallSeries::value(double r, double t) const {
  if (robin_ == 0.0 || t <= 0.0) return phi0_;
  if (r < 0.0 || r > radius_ * (1.0 + 1e-12))
    throw std::invalid_argument("CoolingBallSeries: r outside the ball");
  double sum = 0.0;
  for (size_t n = 0; n < mu_.size(); ++n) {
    const double mu = mu_[n];
    const double decay = std::exp(-diff_ * mu * mu * t / (radius_ * radius_));
    // sin(mu r/R)/r is bounded by mu/R, which also covers r = 0.
    const double bound = std::abs(coeff_[n]) * decay * mu / radius_;
    if (bound < 1e-16 * std::abs(phi0_) && n > 0) break;
    const double radial = r > 0.0 ? std::sin(mu * r / radius_) / r : mu / radius_;
    sum += coeff_[n] * decay * radial;
  }
  return sum;
}

// ===== two half-lines with a value-share interface =====

double StepShareProfile::value_light(double x, double t) const {
  if (t <= 0.0) return 0.0;
  const double eta = (x - x_interface) / (2.0 * std::sqrt(diffusivity * t));
  return amplitude() * (std::erfc(eta) - 2.0);
}

double StepShareProfile::value_dark(double x, double t) const {
  if (t <= 0.0) return 1.0;
  const double eta = (x - x_interface) / (2.0 * std::sqrt(diffusivity * t));
  return amplitude() * std::erfc(eta) + 1.0;
}

// ===== cooling disk in an unbounded medium =====

DiskExchangeSolution::DiskExchangeSolution(double k_dark, double k_light, double r0,
                                           double phi0, double abs_tol)
    : kd_(k_dark), kl_(k_light), r0_(r0), phi0_(phi0), tol_(abs_tol),
      kratio_(std::sqrt(k_dark / k_light)) {
  if (k_dark <= 0.0 || k_light <= 0.0 || r0 <= 0.0)
    throw std::invalid_argument("DiskExchangeSolution: bad parameters");
}

double DiskExchangeSolution::aux_y(double u) const {
  return kd_ * std::sqrt(kl_) * bessel_j1(r0_ * u) * bessel_y0(kratio_ * r0_ * u) -
         kl_ * std::sqrt(kd_) * bessel_j0(r0_ * u) * bessel_y1(kratio_ * r0_ * u);
}

double DiskExchangeSolution::aux_j(double u) const {
  return kd_ * std::sqrt(kl_) * bessel_j1(r0_ * u) * bessel_j0(kratio_ * r0_ * u) -
         kl_ * std::sqrt(kd_) * bessel_j0(r0_ * u) * bessel_j1(kratio_ * r0_ * u);
}

double DiskExchangeSolution::value_inner(double r, double t) const {
  if (t <= 0.0) throw std::invalid_argument("DiskExchangeSolution: t must be positive");
  const double umax = tail_cutoff(kd_, t, 1.0);
  const auto f = [&](double u) {
    const double phi = aux_y(u);
    const double psi = aux_j(u);
    return std::exp(-kd_ * u * u * t) * bessel_j0(u * r) * bessel_j1(u * r0_) /
           (u * u * (phi * phi + psi * psi));
  };
  // abs_tol applies to the returned value, so the raw integral gets it
  // divided by the prefactor (which is tiny for small conductivities).
  const double pf = 4.0 * phi0_ * kd_ * kl_ * kl_ / (kPi * kPi * r0_);
  const auto q = integrate(f, 0.0, umax, oscillation_breaks(umax, r0_ + r),
                           tol_ / std::abs(pf));
  return pf * checked(q, "disk inner");
}

double DiskExchangeSolution::value_outer(double r, double t) const {
  if (t <= 0.0) throw std::invalid_argument("DiskExchangeSolution: t must be positive");
  const double umax = tail_cutoff(kd_, t, 1.0);
  const auto f = [&](double u) {
    const double phi = aux_y(u);
    const double psi = aux_j(u);
    return std::exp(-kd_ * u * u * t) * bessel_j1(u * r0_) *
           (bessel_j0(kratio_ * u * r) * phi - bessel_y0(kratio_ * u * r) * psi) /
           (u * (phi * phi + psi * psi));
  };
  const double pf = 2.0 * phi0_ * kd_ * std::sqrt(kl_) / kPi;
  const auto q = integrate(f, 0.0, umax, oscillation_breaks(umax, r0_ + kratio_ * r),
                           tol_ / std::abs(pf));
  return pf * checked(q, "disk outer");
}

double DiskExchangeSolution::interface_flow(double t) const {
  if (t <= 0.0) throw std::invalid_argument("DiskExchangeSolution: t must be positive");
  const double umax = tail_cutoff(kd_, t, 1.0);
  const auto f = [&](double u) {
    const double phi = aux_y(u);
    const double psi = aux_j(u);
    const double j1 = bessel_j1(u * r0_);
    return std::exp(-kd_ * u * u * t) * j1 * j1 / (u * (phi * phi + psi * psi));
  };
  const double pf = 8.0 * phi0_ * kd_ * kd_ * kl_ * kl_ / kPi;
  const auto q = integrate(f, 0.0, umax, oscillation_breaks(umax, 2.0 * r0_),
                           tol_ / std::abs(pf));
  return pf * checked(q, "disk flow");
}

// ===== cooling ball in an unbounded medium =====

BallExchangeSolution::BallExchangeSolution(double d_light, double d_dark, double r0,
                                           double phi0, double abs_tol)
    : dl_(d_light), dd_(d_dark), r0_(r0), phi0_(phi0), tol_(abs_tol),
      sigma_(std::sqrt(d_dark / d_light)), ell_(d_dark / d_light - 1.0) {
  if (d_light <= 0.0 || d_dark <= 0.0 || r0 <= 0.0)
    throw std::invalid_argument("BallExchangeSolution: bad parameters");
}

double BallExchangeSolution::denom(double u) const {
  const double a = u * std::cos(u) + ell_ * std::sin(u);
  const double b = sigma_ * u * std::sin(u);
  return a * a + b * b;
}

double BallExchangeSolution::value_inner(double r, double t) const {
  if (t <= 0.0) throw std::invalid_argument("BallExchangeSolution: t must be positive");
  const double umax = tail_cutoff(dl_ / (r0_ * r0_), t, 1.0);
  const auto f = [&](double u) {
    const double radial =
        r > 0.0 ? std::sin(u * r / r0_) / r : u / r0_;
    return (std::sin(u) - u * std::cos(u)) * radial / denom(u) *
           std::exp(-dl_ * u * u * t / (r0_ * r0_));
  };
  const double pf = 2.0 * sigma_ * r0_ * phi0_ / kPi;
  const auto q = integrate(f, 0.0, umax, oscillation_breaks(umax, 1.0 + r / r0_),
                           tol_ / std::abs(pf));
  return pf * checked(q, "ball inner");
}

double BallExchangeSolution::value_outer(double r, double t) const {
  if (t <= 0.0) throw std::invalid_argument("BallExchangeSolution: t must be positive");
  const double umax = tail_cutoff(dl_ / (r0_ * r0_), t, 1.0);
  const auto f = [&](double u) {
    const double ph = u * (r - r0_) / (sigma_ * r0_);
    const double shell = (u * std::cos(u) + ell_ * std::sin(u)) * std::sin(ph) +
                         sigma_ * u * std::sin(u) * std::cos(ph);
    return (std::sin(u) - u * std::cos(u)) * shell / (u * denom(u)) *
           std::exp(-dl_ * u * u * t / (r0_ * r0_));
  };
  const double rate = 1.0 + (r - r0_) / (sigma_ * r0_);
  const double pf = 2.0 * r0_ * phi0_ / (kPi * r);
  const auto q = integrate(f, 0.0, umax, oscillation_breaks(umax, rate),
                           tol_ / std::abs(pf));
  return pf * checked(q, "ball outer");
}

}  // namespace cutcell
