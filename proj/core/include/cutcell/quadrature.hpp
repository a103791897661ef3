#pragma once

#include <functional>
#include <vector>

namespace cutcell {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // accumulated |G15 - G7| over accepted panels
  long evaluations = 0;
  bool converged = true;

  QuadratureResult& operator+=(const QuadratureResult& o) {
    value += o.value;
    error += o.error;
    evaluations += o.evaluations;
    converged = converged && o.converged;
    return *this;
  }
};

// Gauss-Legendre nodes/weights on [-1, 1], generated by Newton iteration on
// the three-term recurrence. Nodes ascend; sum of weights is 2.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Adaptive panel integration of f on [a, b]: each panel is accepted when the
// 7- and 15-point Gauss estimates agree to its share of abs_tol, otherwise
// bisected. Depth exhaustion marks the result not converged but still returns
// the best estimate.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, int max_depth = 40);

// Same, with the interval pre-split at the given interior breakpoints
// (unsorted, duplicates and out-of-range entries ignored). Intended for
// oscillatory integrands whose lobe boundaries are known.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const std::vector<double>& breakpoints, double abs_tol,
                           int max_depth = 40);

}  // namespace cutcell
