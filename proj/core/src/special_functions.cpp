#include "cutcell/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace cutcell {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
constexpr double kSeriesLimit = 14.0;

// Unevaluated double-double value hi + lo. The series terms reach ~3e4 at
// x = 14 while the sums stay O(1), so plain doubles would lose ~1e-11.
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  const DD r = two_sum(s.hi, s.lo);
  return r;
}

DD dd_mul_d(DD a, double b) {
  const double p = a.hi * b;
  const double e = std::fma(a.hi, b, -p) + a.lo * b;
  return two_sum(p, e);
}

DD dd_div_d(DD a, double b) {
  const double q = a.hi / b;
  const double r = std::fma(-q, b, a.hi) + a.lo;
  return two_sum(q, r / b);
}

// J_nu(x) = (x/2)^nu sum_k (-1)^k (x^2/4)^k / (k! (k+nu)!), nu in {0,1}.
double j_series(int nu, double x) {
  const double q = 0.25 * x * x;
  DD term{1.0, 0.0};
  if (nu == 1) term = {0.5 * x, 0.0};
  DD sum = term;
  for (int k = 1; k < 80; ++k) {
    term = dd_mul_d(term, -q);
    term = dd_div_d(term, static_cast<double>(k));
    term = dd_div_d(term, static_cast<double>(k + nu));
    sum = dd_add(sum, term);
    if (std::abs(term.hi) < 1e-20 * (std::abs(sum.hi) + 1e-300)) break;
  }
  return sum.hi + sum.lo;
}

// Y0(x) = (2/pi)[ln(x/2) J0(x)] - (2/pi) sum_k (-1)^k psi(k+1) (x^2/4)^k/(k!)^2
// with psi(1) = -gamma, psi(n+1) = psi(n) + 1/n.
double y0_series(double x) {
  const double q = 0.25 * x * x;
  DD term{1.0, 0.0};
  double psi = -kEulerGamma;
  DD sum = dd_mul_d(term, psi);
  for (int k = 1; k < 80; ++k) {
    term = dd_mul_d(term, -q);
    term = dd_div_d(term, static_cast<double>(k));
    term = dd_div_d(term, static_cast<double>(k));
    psi += 1.0 / k;
    const DD contrib = dd_mul_d(term, psi);
    sum = dd_add(sum, contrib);
    if (std::abs(contrib.hi) < 1e-20 * (std::abs(sum.hi) + 1e-300)) break;
  }
  return (2.0 / kPi) * (std::log(0.5 * x) * j_series(0, x) - (sum.hi + sum.lo));
}

// Y1(x) = (2/pi) ln(x/2) J1(x) - 2/(pi x)
//         - (x/(2 pi)) sum_k (-1)^k [psi(k+1)+psi(k+2)] (x^2/4)^k/(k!(k+1)!).
double y1_series(double x) {
  const double q = 0.25 * x * x;
  DD term{1.0, 0.0};
  double psi1 = -kEulerGamma;        // psi(k+1)
  double psi2 = 1.0 - kEulerGamma;   // psi(k+2)
  DD sum = dd_mul_d(term, psi1 + psi2);
  for (int k = 1; k < 80; ++k) {
    term = dd_mul_d(term, -q);
    term = dd_div_d(term, static_cast<double>(k));
    term = dd_div_d(term, static_cast<double>(k + 1));
    psi1 += 1.0 / k;
    psi2 += 1.0 / (k + 1);
    const DD contrib = dd_mul_d(term, psi1 + psi2);
    sum = dd_add(sum, contrib);
    if (std::abs(contrib.hi) < 1e-20 * (std::abs(sum.hi) + 1e-300)) break;
  }
  return (2.0 / kPi) * std::log(0.5 * x) * j_series(1, x) - 2.0 / (kPi * x) -
         (x / (2.0 * kPi)) * (sum.hi + sum.lo);
}

// Hankel expansion: J = sqrt(2/(pi x))(P cos chi - Q sin chi),
// Y = sqrt(2/(pi x))(P sin chi + Q cos chi), chi = x - (2 nu + 1) pi/4.
// c_k = a_k / x^k with c_k = c_{k-1} (4 nu^2 - (2k-1)^2)/(8 k x); the series
// diverges, so accumulation stops once |c_k| grows (optimal truncation).
void hankel_pq(int nu, double x, double& p, double& q) {
  const double mu = 4.0 * nu * nu;
  double c = 1.0;
  p = c;
  q = 0.0;
  int sign_p = -1;
  int sign_q = 1;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = c * (mu - odd * odd) / (8.0 * k * x);
    if (std::abs(next) >= std::abs(c) && k > 2) break;
    c = next;
    if (k % 2 == 1) {
      q += sign_q * c;
      sign_q = -sign_q;
    } else {
      p += sign_p * c;
      sign_p = -sign_p;
    }
  }
}

void hankel_jy(int nu, double x, double& j, double& y) {
  double p, q;
  hankel_pq(nu, x, p, q);
  const double chi = x - (2.0 * nu + 1.0) * kPi / 4.0;
  const double amp = std::sqrt(2.0 / (kPi * x));
  const double c = std::cos(chi);
  const double s = std::sin(chi);
  j = amp * (p * c - q * s);
  y = amp * (p * s + q * c);
}

}  // namespace

double bessel_j0(double x) {
  x = std::abs(x);
  if (x <= kSeriesLimit) return j_series(0, x);
  double j, y;
  hankel_jy(0, x, j, y);
  return j;
}

double bessel_j1(double x) {
  const double ax = std::abs(x);
  double v;
  if (ax <= kSeriesLimit) {
    v = j_series(1, ax);
  } else {
    double y;
    hankel_jy(1, ax, v, y);
  }
  return x < 0.0 ? -v : v;
}

double bessel_y0(double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_y0 requires x > 0");
  if (x <= kSeriesLimit) return y0_series(x);
  double j, y;
  hankel_jy(0, x, j, y);
  return y;
}

double bessel_y1(double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_y1 requires x > 0");
  if (x <= kSeriesLimit) return y1_series(x);
  double j, y;
  hankel_jy(1, x, j, y);
  return y;
}

}  // namespace cutcell
