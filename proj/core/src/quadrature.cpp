#include "cutcell/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cutcell {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = n == 0 ? p0 : p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const Rule& cached_rule(int n) {
  static std::map<int, Rule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    Rule r;
    gauss_legendre(n, r.nodes, r.weights);
    it = cache.emplace(n, std::move(r)).first;
  }
  return it->second;
}

void gauss_panel(const Rule& rule, const std::function<double(double)>& f, double a,
                 double b, double& value, long& evals) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    ++evals;
  }
  value = half * sum;
}

QuadratureResult adapt(const std::function<double(double)>& f, double a, double b,
                       double tol, int depth) {
  const Rule& g7 = cached_rule(7);
  const Rule& g15 = cached_rule(15);
  QuadratureResult res;
  double coarse = 0.0, fine = 0.0;
  gauss_panel(g7, f, a, b, coarse, res.evaluations);
  gauss_panel(g15, f, a, b, fine, res.evaluations);
  const double err = std::abs(fine - coarse);
  // Roundoff floor: once the two rules agree to a few ulps of the panel
  // magnitude, subdividing cannot improve the estimate.
  const double floor_err = 1e-14 * std::abs(fine);
  if (err <= std::max(tol, floor_err) || depth <= 0) {
    res.value = fine;
    res.error = err;
    res.converged = err <= std::max(tol, floor_err);
    return res;
  }
  const double mid = 0.5 * (a + b);
  QuadratureResult left = adapt(f, a, mid, 0.5 * tol, depth - 1);
  QuadratureResult right = adapt(f, mid, b, 0.5 * tol, depth - 1);
  left += right;
  left.evaluations += res.evaluations;
  return left;
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre needs n >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre(n, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre(n, x, p, dp);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, int max_depth) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate needs abs_tol > 0");
  if (a == b) return {};
  return adapt(f, a, b, abs_tol, max_depth);
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const std::vector<double>& breakpoints, double abs_tol,
                           int max_depth) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate needs abs_tol > 0");
  std::vector<double> pts;
  pts.push_back(a);
  for (double p : breakpoints)
    if (p > a && p < b) pts.push_back(p);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const double total = std::abs(b - a);
  QuadratureResult res;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const double width = pts[i + 1] - pts[i];
    const double tol = std::max(abs_tol * width / total, 1e-2 * abs_tol);
    res += adapt(f, pts[i], pts[i + 1], tol, max_depth);
  }
  return res;
}

}  // namespace cutcell
