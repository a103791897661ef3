#pragma once

#include <Eigen/Dense>

namespace cutcell {

// Backward-Euler interval problem on three cells of width dx covering
// [0, 3dx], the middle cell split at x = dx + lminus into a light part
// (width lminus) and a dark part (width dx - lminus). The field and the
// normal flux are continuous across the split; the end faces carry
// prescribed flux data a and b (in the k*dphi/dx sign convention).
struct ThreeCellConfig {
  double dx = 1.0;
  double lminus = 0.5;
  double k[2] = {1.0, 1.0};  // light, dark
  double c[2] = {1.0, 1.0};
  double dt = 0.1;
  double a = 0.0, b = 0.0;
  double phi_n[4] = {0.0, 0.0, 0.0, 0.0};  // Phi1, Phi2-, Phi2+, Phi3
};

using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

// Hand-assembled system over [Phi1, Phi2-, Phi2+, PhiG-, PhiG+, Phi3].
Mat6 three_cell_matrix(const ThreeCellConfig& cfg);
Vec6 three_cell_rhs(const ThreeCellConfig& cfg);
Vec6 three_cell_solve(const ThreeCellConfig& cfg);

// The same configuration posed to the general block assembler on a 3-cell
// grid, with the staggered volumes overridden to the uncentered spans the
// interval scheme uses (cell center to interface, and face to interface for
// the one-sided interfacial gradients). Result uses the hand ordering.
Vec6 three_cell_general_solve(const ThreeCellConfig& cfg);

}  // namespace cutcell
