#include <cmath>
#include <stdexcept>

#include "cutcell/diagnostics.hpp"
#include "cutcell/geometry.hpp"
#include "doctest.h"

using namespace cutcell;

namespace {

// Disk strictly inside the box with both phases active and a jump coupling.
// dt <= 0 builds the steady system.
AssembledSystem two_phase_disk(MomentSet& ms, double k_light, double k_dark,
                               double lambda, double dt) {
  auto g = make_uniform_grid(2, {0, 0, 0}, {1, 1, 0}, {8, 8, 1});
  Ball ball({0.47, 0.52, 0.0}, 0.3, 2);
  ms = compute_moments(g, ball);
  ProblemSpec prob;
  for (int p = 0; p < 2; ++p) {
    prob.phase[p].active = true;
    prob.phase[p].capacity = 1.0;
  }
  prob.phase[0].diffusivity = k_light;
  prob.phase[1].diffusivity = k_dark;
  prob.interface_condition = InterfaceJump{lambda, nullptr};
  for (int s = 0; s < 2; ++s) {
    prob.outer[0][s].kind = OuterBCKind::dirichlet;
    prob.outer[0][s].value = constant_fn(0.0);
    prob.outer[1][s].kind = OuterBCKind::dirichlet;
    prob.outer[1][s].value = constant_fn(0.0);
  }
  prob.steady = dt <= 0.0;
  if (!prob.steady) {
    prob.theta = 0.5;
    prob.dt = dt;
    prob.t_final = 10.0 * dt;
  }
  return assemble(ms, prob);
}

}  // namespace

TEST_CASE("two-phase report: structure, pencil, and definiteness switch") {
  MomentSet ms;
  AssembledSystem sys = two_phase_disk(ms, 1.0, 1.0, 1.0, 0.0);
  REQUIRE(sys.dof.n_gamma[0] > 0);
  REQUIRE(sys.dof.n_gamma[1] > 0);

  SystemDiagnostics d = invertibility_diagnostics(sys, 1.0);
  CHECK(d.has_interface_pair);
  CHECK(d.lww_asymmetry[0] <= 1e-13);
  CHECK(d.lww_asymmetry[1] <= 1e-13);
  CHECK(d.adjointness[0] <= 1e-13);
  CHECK(d.adjointness[1] <= 1e-13);
  CHECK(d.lww_sym_min_eig[0] >= -1e-12);
  CHECK(d.lww_sym_min_eig[1] >= -1e-12);
  CHECK(std::isfinite(d.lambda_max));
  CHECK(d.lambda_max > 0.0);

  // Above the pencil threshold the effective operator is definite, below it
  // is not. The switch is the quantity the report exists to expose.
  SystemDiagnostics above = invertibility_diagnostics(sys, 2.0 * d.lambda_max);
  CHECK(above.deff_spd);
  CHECK(above.deff_min_eig > 0.0);
  SystemDiagnostics below = invertibility_diagnostics(sys, 0.5 * d.lambda_max);
  CHECK(!below.deff_spd);
  CHECK(below.deff_min_eig <= 0.0);
}

TEST_CASE("stiff contrast pushes the pencil threshold above one") {
  MomentSet ms;
  // The light phase dominates the interfacial coupling, so eliminating with a
  // small lambda leaves an indefinite effective operator.
  AssembledSystem sys = two_phase_disk(ms, 1e3, 1.0, 1.0, 0.0);
  SystemDiagnostics d = invertibility_diagnostics(sys, 1.0);
  CHECK(d.lambda_max > 1.0);
  CHECK(!d.deff_spd);
}

TEST_CASE("unsteady mass keeps a positive bulk and drives the margin positive") {
  MomentSet ms;
  AssembledSystem sys = two_phase_disk(ms, 1.0, 1.0, 1.0, 1e-2);
  SystemDiagnostics d = invertibility_diagnostics(sys, 1.0);
  CHECK(d.bulk_sym_min_eig[0] > 0.0);
  CHECK(d.bulk_sym_min_eig[1] > 0.0);
  const double lam = 2.0 * d.lambda_max;

  // The margin certificate is only sufficient; shrinking dt grows the bulk
  // coercivity without touching the interfacial blocks, so it must turn
  // positive eventually.
  double margin = -1.0;
  for (double dt = 1e-2; dt >= 1e-12; dt *= 1e-2) {
    AssembledSystem s = two_phase_disk(ms, 1.0, 1.0, 1.0, dt);
    SystemDiagnostics sd = invertibility_diagnostics(s, lam);
    REQUIRE(sd.deff_spd);
    margin = sd.schur_margin;
    if (margin > 0.0) break;
  }
  CHECK(margin > 0.0);
}

TEST_CASE("single-phase report leaves the interface pair empty") {
  auto g = make_uniform_grid(2, {0, 0, 0}, {1, 1, 0}, {8, 8, 1});
  Ball ball({0.47, 0.52, 0.0}, 0.3, 2);
  MomentSet ms = compute_moments(g, ball);
  ProblemSpec prob;
  prob.phase[0].active = true;
  prob.steady = true;
  AssembledSystem sys = assemble(ms, prob);

  SystemDiagnostics d = invertibility_diagnostics(sys, 1.0);
  CHECK(!d.has_interface_pair);
  CHECK(d.lww_asymmetry[0] <= 1e-13);
  CHECK(d.lww_sym_min_eig[0] >= -1e-12);
  CHECK(d.lambda_max == 0.0);
}

TEST_CASE("dense guard rejects oversized systems") {
  MomentSet ms;
  AssembledSystem sys = two_phase_disk(ms, 1.0, 1.0, 1.0, 0.0);
  CHECK_THROWS_AS((void)invertibility_diagnostics(sys, 1.0, sys.dof.total - 1),
                  std::invalid_argument);
}
