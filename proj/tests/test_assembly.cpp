#include <Eigen/SparseLU>
#include <cmath>
#include <random>
#include <stdexcept>

#include "cutcell/assembly.hpp"
#include "cutcell/geometry.hpp"
#include "cutcell/operators.hpp"
#include "doctest.h"

using namespace cutcell;

namespace {

double max_abs(const SpMat& m) {
  double v = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it) v = std::max(v, std::abs(it.value()));
  return v;
}

Eigen::VectorXd solve_lu(const SpMat& a, const Eigen::VectorXd& b) {
  Eigen::SparseLU<SpMat> lu;
  lu.compute(a);
  REQUIRE(lu.info() == Eigen::Success);
  return lu.solve(b);
}

// Disk strictly inside the box: no outer boundary carries light area.
AssembledSystem disk_system(MomentSet& ms, double k_light) {
  auto g = make_uniform_grid(2, {0, 0, 0}, {1, 1, 0}, {8, 8, 1});
  Ball ball({0.47, 0.52, 0.0}, 0.3, 2);
  ms = compute_moments(g, ball);
  ProblemSpec prob;
  prob.phase[0].active = true;
  prob.phase[0].diffusivity = k_light;
  prob.steady = true;
  return assemble(ms, prob);
}

}  // namespace

TEST_CASE("bulk and balance rows reproduce the composed operators") {
  MomentSet ms;
  const double K = 2.3;
  AssembledSystem sys = disk_system(ms, K);
  CHECK(sys.deactivated_faces == 0);
  const int nc = ms.grid.cell_count();

  std::mt19937 rng(90210);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd x(sys.dof.total);
  for (int i = 0; i < sys.dof.total; ++i) x[i] = u(rng);

  std::vector<double> phi(nc, 0.0), gam(nc, 0.0);
  for (int c = 0; c < nc; ++c) {
    if (sys.dof.bulk[0][c] >= 0) phi[c] = x[sys.dof.bulk[0][c]];
    if (sys.dof.gamma[0][c] >= 0) gam[c] = x[sys.dof.gamma[0][c]];
  }

  std::vector<double> vtot(nc, 0.0), vgam(nc, 0.0);
  for (int axis = 0; axis < 2; ++axis) {
    auto q = flux(ms, Phase::light, axis, K, phi, gam);
    auto dt = div_total(ms, Phase::light, axis, q);
    auto dg = div_interface(ms, Phase::light, axis, q);
    for (int c = 0; c < nc; ++c) {
      vtot[c] += dt[c];
      vgam[c] += dg[c];
    }
  }

  Eigen::VectorXd yb = (sys.lww[0] + sys.lwg[0]) * x;
  Eigen::VectorXd yg = (sys.lgw[0] + sys.lgg[0]) * x;
  double scale = std::max(yb.cwiseAbs().maxCoeff(), yg.cwiseAbs().maxCoeff());
  for (int c = 0; c < nc; ++c) {
    const int bd = sys.dof.bulk[0][c];
    if (bd >= 0) CHECK(std::abs(yb[bd] - vtot[c]) <= 1e-13 * scale);
    const int gd = sys.dof.gamma[0][c];
    if (gd >= 0) CHECK(std::abs(yg[gd] - vgam[c]) <= 1e-13 * scale);
  }
}

TEST_CASE("bulk block is symmetric and adjoint to the interfacial one") {
  MomentSet ms;
  AssembledSystem sys = disk_system(ms, 1.7);

  SpMat sym = sys.lww[0] - SpMat(sys.lww[0].transpose());
  CHECK(max_abs(sym) <= 1e-13 * max_abs(sys.lww[0]));

  SpMat adj = sys.lgw[0] + SpMat(sys.lwg[0].transpose());
  CHECK(max_abs(sys.lwg[0]) > 0.0);
  CHECK(max_abs(adj) <= 1e-13 * max_abs(sys.lwg[0]));
}

TEST_CASE("constant states carry no flux") {
  MomentSet ms;
  AssembledSystem sys = disk_system(ms, 3.1);
  Eigen::VectorXd x = Eigen::VectorXd::Constant(sys.dof.total, 7.5);
  double scale = 7.5 * max_abs(sys.lww[0]);
  Eigen::VectorXd yb = (sys.lww[0] + sys.lwg[0]) * x;
  Eigen::VectorXd yg = (sys.lgw[0] + sys.lgg[0]) * x;
  CHECK(yb.cwiseAbs().maxCoeff() <= 1e-14 * scale);
  CHECK(yg.cwiseAbs().maxCoeff() <= 1e-14 * scale);
}

TEST_CASE("steady interval with pinned interface reproduces the linear profile") {
  auto g = make_uniform_grid(1, {0, 0, 0}, {1, 0, 0}, {10, 1, 1});
  HalfSpace geom({1, 0, 0}, {0.61, 0, 0});  // light is x < 0.61
  auto ms = compute_moments(g, geom);

  ProblemSpec prob;
  prob.phase[0].active = true;
  prob.phase[0].diffusivity = 2.0;
  prob.outer[0][0] = {OuterBCKind::dirichlet, constant_fn(1.0), 0.0};
  prob.interface_condition = InterfaceDirichlet{constant_fn(3.0)};
  prob.steady = true;

  auto sys = assemble(ms, prob);
  Eigen::VectorXd x = solve_lu(sys.matrix, assemble_rhs(sys, 0.0, Eigen::VectorXd::Zero(sys.dof.total)));

  const double slope = (3.0 - 1.0) / 0.61;
  for (int c = 0; c < g.cell_count(); ++c) {
    const int bd = sys.dof.bulk[0][c];
    if (bd < 0) continue;
    const double exact = 1.0 + slope * ms.centroid[0][c].x;
    CHECK(x[bd] == doctest::Approx(exact).epsilon(1e-11));
  }
  const int gd = sys.dof.gamma[0][g.cell_index(6, 0, 0)];
  REQUIRE(gd >= 0);
  CHECK(x[gd] == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("steady interval with a jump reproduces the matched linear profiles") {
  auto g = make_uniform_grid(1, {0, 0, 0}, {1, 0, 0}, {10, 1, 1});
  HalfSpace geom({1, 0, 0}, {0.61, 0, 0});
  auto ms = compute_moments(g, geom);

  // phi-(x) = a x on the light side, phi+(x) = b + c x on the dark side with
  // phi+ = 2 phi- and K- a = K+ c at x = 0.61, phi-(0) = 0, phi+(1) = 1.
  const double kl = 2.0, kd = 0.5, lam = 2.0;
  const double a = 1.0 / 2.78, c2 = 4.0 * a, b = -1.22 * a;

  ProblemSpec prob;
  prob.phase[0] = {true, kl, 1.0, nullptr, nullptr};
  prob.phase[1] = {true, kd, 1.0, nullptr, nullptr};
  prob.outer[0][0] = {OuterBCKind::dirichlet, constant_fn(0.0), 0.0};
  prob.outer[0][1] = {OuterBCKind::dirichlet, constant_fn(1.0), 0.0};
  prob.interface_condition = InterfaceJump{lam, nullptr};
  prob.steady = true;

  auto sys = assemble(ms, prob);
  CHECK(sys.dof.total == 13);
  Eigen::VectorXd x = solve_lu(sys.matrix, assemble_rhs(sys, 0.0, Eigen::VectorXd::Zero(sys.dof.total)));

  for (int c = 0; c < g.cell_count(); ++c) {
    const int bl = sys.dof.bulk[0][c];
    if (bl >= 0) CHECK(x[bl] == doctest::Approx(a * ms.centroid[0][c].x).epsilon(1e-11));
    const int bd = sys.dof.bulk[1][c];
    if (bd >= 0) CHECK(x[bd] == doctest::Approx(b + c2 * ms.centroid[1][c].x).epsilon(1e-11));
  }
  const int cut = g.cell_index(6, 0, 0);
  const int gl = sys.dof.gamma[0][cut], gd = sys.dof.gamma[1][cut];
  REQUIRE(gl >= 0);
  REQUIRE(gd >= 0);
  CHECK(x[gl] == doctest::Approx(a * 0.61).epsilon(1e-11));
  CHECK(x[gd] == doctest::Approx(lam * a * 0.61).epsilon(1e-11));
  CHECK(x[gd] == doctest::Approx(lam * x[gl]).epsilon(1e-12));
}

TEST_CASE("one implicit step preserves a constant state") {
  auto g = make_uniform_grid(2, {0, 0, 0}, {1, 1, 0}, {6, 6, 1});
  Ball ball({0.5, 0.5, 0.0}, 0.28, 2);
  auto ms = compute_moments(g, ball);

  ProblemSpec prob;
  prob.phase[0].active = true;
  prob.phase[0].diffusivity = 1.0;
  prob.phase[0].capacity = 2.0;
  prob.phase[0].initial = constant_fn(5.0);
  prob.interface_condition = InterfaceDirichlet{constant_fn(5.0)};
  prob.steady = false;
  prob.theta = 0.5;
  prob.dt = 0.01;
  prob.t_final = 0.01;

  auto sys = assemble(ms, prob);
  for (int c = 0; c < g.cell_count(); ++c) {
    const int bd = sys.dof.bulk[0][c];
    if (bd >= 0)
      CHECK(sys.mass[bd] == doctest::Approx(2.0 * ms.volume[0][c] / 0.01).epsilon(1e-14));
  }

  Eigen::VectorXd x0 = initial_vector(sys);
  Eigen::VectorXd x1 = solve_lu(sys.matrix, assemble_rhs(sys, 0.5 * 0.01, x0));
  for (int i = 0; i < sys.dof.total; ++i) CHECK(x1[i] == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("inconsistent problems are rejected") {
  auto g = make_uniform_grid(1, {0, 0, 0}, {1, 0, 0}, {4, 1, 1});
  HalfSpace geom({1, 0, 0}, {0.55, 0, 0});
  auto ms = compute_moments(g, geom);

  ProblemSpec ok;
  ok.phase[0].active = true;
  ok.outer[0][0] = {OuterBCKind::dirichlet, constant_fn(0.0), 0.0};
  validate(ok, ms);  // light touches only the low end

  ProblemSpec open = ok;
  open.outer[0][0] = {};
  CHECK_THROWS_AS(validate(open, ms), std::invalid_argument);

  ProblemSpec twophase = ok;
  twophase.phase[1].active = true;
  twophase.outer[0][1] = {OuterBCKind::dirichlet, constant_fn(0.0), 0.0};
  CHECK_THROWS_AS(validate(twophase, ms), std::invalid_argument);  // needs jump
  twophase.interface_condition = InterfaceJump{2.0, nullptr};
  validate(twophase, ms);
  twophase.phase[1].active = false;
  CHECK_THROWS_AS(validate(twophase, ms), std::invalid_argument);  // jump needs both

  ProblemSpec unsteady = ok;
  unsteady.steady = false;
  unsteady.dt = 0.0;
  unsteady.t_final = 1.0;
  CHECK_THROWS_AS(validate(unsteady, ms), std::invalid_argument);

  ProblemSpec badtheta = ok;
  badtheta.theta = 1.5;
  CHECK_THROWS_AS(validate(badtheta, ms), std::invalid_argument);
}
