#include "cutcell/roots.hpp"

#include <cmath>
#include <stdexcept>

#include "cutcell/special_functions.hpp"

namespace cutcell {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double find_root(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::invalid_argument("find_root: no sign change on bracket");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> radial_robin_eigenvalues(double kappa, int n) {
  if (kappa < 0.0) throw std::invalid_argument("radial_robin_eigenvalues: kappa < 0");
  std::vector<double> mu;
  mu.reserve(n);
  const auto f = [kappa](double m) {
    return m * std::cos(m) + (kappa - 1.0) * std::sin(m);
  };
  for (int i = 1; i <= n; ++i) {
    // Ends of the open interval; nudged inward so sin does not vanish.
    const double lo = (i - 1) * kPi + 1e-9;
    const double hi = i * kPi - 1e-9;
    mu.push_back(find_root(f, lo, hi));
  }
  return mu;
}

std::vector<double> bessel_j1_zeros(int n) {
  std::vector<double> zeros;
  zeros.reserve(n);
  for (int i = 1; i <= n; ++i) {
    double x = (i + 0.25) * kPi;
    for (int it = 0; it < 50; ++it) {
      const double f = bessel_j1(x);
      const double df = bessel_j0(x) - f / x;  // J1' = J0 - J1/x
      const double dx = f / df;
      x -= dx;
      if (std::abs(dx) < 1e-15 * x) break;
    }
    zeros.push_back(x);
  }
  return zeros;
}

}  // namespace cutcell
