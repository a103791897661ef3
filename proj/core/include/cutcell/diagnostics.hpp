#pragma once

#include <array>

#include "cutcell/assembly.hpp"

namespace cutcell {

// Structural report on an assembled system. Notation: D± is the negated
// interfacial self-coupling block (positive semidefinite by construction),
// restricted to the cut cells; the pencil value is the largest eigenvalue of
// (D+)^{-1/2} D- (D+)^{-1/2}; the effective interface operator lambda*D+ - D-
// is the classical sufficient-condition object for eliminating the
// interfacial unknowns, and the margin is
//   alpha - theta*|C|*|Deff^{-1}|*|B|
// with alpha the smallest eigenvalue of the symmetric part of the bulk block
// (mass plus theta times diffusion), |.| spectral norms, C the bulk-to-
// interface coupling [C-; lambda C+] and B the interface-to-bulk coupling
// [B- B+]. A positive margin certifies an invertible bulk Schur complement.
struct SystemDiagnostics {
  std::array<double, 2> lww_asymmetry = {0.0, 0.0};  // |L - L^T| / |L|, max norms
  std::array<double, 2> adjointness = {0.0, 0.0};    // |lgw + lwg^T| / |lwg|
  std::array<double, 2> lww_sym_min_eig = {0.0, 0.0};
  std::array<double, 2> bulk_sym_min_eig = {0.0, 0.0};  // with mass and theta
  bool has_interface_pair = false;  // both phases carry interfacial unknowns
  double lambda_max = 0.0;
  double deff_min_eig = 0.0;
  bool deff_spd = false;
  double schur_margin = 0.0;
};

// Dense eigenvalue work is guarded: systems beyond max_dense unknowns throw
// std::invalid_argument (the report is verification-time only).
SystemDiagnostics invertibility_diagnostics(const AssembledSystem& sys, double lambda,
                                            int max_dense = 20000);

}  // namespace cutcell
