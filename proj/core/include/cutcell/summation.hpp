#pragma once

#include <cmath>

namespace cutcell {

// Neumaier compensated summation; the error term also tracks cases where the
// addend dominates the running sum.
struct NeumaierSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace cutcell
