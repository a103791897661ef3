#include <cmath>
#include <cstring>
#include <stdexcept>

#include "cutcell/geometry.hpp"
#include "cutcell/solver.hpp"
#include "cutcell/summation.hpp"
#include "doctest.h"

using namespace cutcell;

namespace {

// Circle strictly inside the box, both phases active, flux-free outer
// boundary. The only transport is across the interface.
AssembledSystem enclosed_pair(MomentSet& ms, double lambda, double theta, double dt,
                              double t_final) {
  auto g = make_uniform_grid(2, {0, 0, 0}, {1, 1, 0}, {16, 16, 1});
  Ball ball({0.47, 0.52, 0.0}, 0.31, 2);
  ms = compute_moments(g, ball);
  ProblemSpec prob;
  for (int p = 0; p < 2; ++p) prob.phase[p].active = true;
  prob.phase[0].diffusivity = 0.7;
  prob.phase[1].diffusivity = 1.3;
  prob.phase[0].initial = constant_fn(0.0);
  prob.phase[1].initial = [](const Vec3& x, double) { return 1.0 + 0.2 * x[0]; };
  prob.interface_condition = InterfaceJump{lambda, nullptr};
  for (int axis = 0; axis < 2; ++axis)
    for (int s = 0; s < 2; ++s) {
      prob.outer[axis][s].kind = OuterBCKind::neumann;
      prob.outer[axis][s].value = constant_fn(0.0);
    }
  prob.steady = false;
  prob.theta = theta;
  prob.dt = dt;
  prob.t_final = t_final;
  return assemble(ms, prob);
}

}  // namespace

TEST_CASE("snapped_dt divides the horizon exactly") {
  CHECK(snapped_dt(1.0, 0.3) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(snapped_dt(1.0, 0.5) == 0.5);
  CHECK(snapped_dt(1.0, 1.7) == 1.0);
  CHECK(snapped_dt(0.1, 0.25 * 0.125 * 0.125) == doctest::Approx(0.1 / 26).epsilon(1e-15));
  const double dt = snapped_dt(0.7, 0.013);
  CHECK(std::abs(std::round(0.7 / dt) * dt - 0.7) <= 1e-15);
  CHECK(dt <= 0.013 * (1.0 + 1e-12));
  CHECK_THROWS_AS((void)snapped_dt(0.0, 0.1), std::invalid_argument);
}

TEST_CASE("factorization reuse and refactorization give bit-identical solves") {
  MomentSet ms;
  AssembledSystem sys = enclosed_pair(ms, 2.0, 1.0, 0.01, 0.05);
  const Eigen::VectorXd x0 = initial_vector(sys);
  const Eigen::VectorXd b = assemble_rhs(sys, 0.01, x0);

  LinearSolver s1(sys.matrix);
  const Eigen::VectorXd xa = s1.solve(b);
  const Eigen::VectorXd xb = s1.solve(b);
  LinearSolver s2(sys.matrix);
  const Eigen::VectorXd xc = s2.solve(b);
  REQUIRE(xa.size() == xb.size());
  CHECK(std::memcmp(xa.data(), xb.data(), sizeof(double) * xa.size()) == 0);
  CHECK(std::memcmp(xa.data(), xc.data(), sizeof(double) * xa.size()) == 0);
  CHECK(s1.last_residual() <= 1e-10);

  const UnsteadyResult r1 = run_unsteady(sys);
  const UnsteadyResult r2 = run_unsteady(sys);
  CHECK(std::memcmp(r1.x.data(), r2.x.data(), sizeof(double) * r1.x.size()) == 0);
}

TEST_CASE("iterative path agrees with the direct path") {
  MomentSet ms;
  AssembledSystem sys = enclosed_pair(ms, 2.0, 1.0, 0.01, 0.05);
  const Eigen::VectorXd x0 = initial_vector(sys);
  const Eigen::VectorXd b = assemble_rhs(sys, 0.01, x0);
  LinearSolver direct(sys.matrix);
  SolverOptions io;
  io.kind = LinearSolverKind::bicgstab_ilut;
  io.residual_tol = 1e-8;
  LinearSolver iterative(sys.matrix, io);
  const Eigen::VectorXd xd = direct.solve(b);
  const Eigen::VectorXd xi = iterative.solve(b);
  CHECK((xd - xi).lpNorm<Eigen::Infinity>() <=
        1e-8 * (xd.lpNorm<Eigen::Infinity>() + 1.0));
}

TEST_CASE("constant state is a fixed point of the stepping") {
  MomentSet ms;
  AssembledSystem sys = enclosed_pair(ms, 1.0, 0.5, 0.02, 0.2);
  sys.prob.phase[0].initial = constant_fn(4.0);
  sys.prob.phase[1].initial = constant_fn(4.0);
  AssembledSystem fresh = assemble(*sys.ms, sys.prob);
  const UnsteadyResult res = run_unsteady(fresh);
  // The constant solves the step equations exactly; what remains is
  // factorization roundoff through the conditioning of the cut system.
  for (int p = 0; p < 2; ++p)
    for (std::size_t c = 0; c < fresh.dof.bulk[p].size(); ++c) {
      const int d = fresh.dof.bulk[p][c];
      if (d >= 0) CHECK(std::abs(res.x[d] - 4.0) <= 1e-10);
    }
  // Interfacial values of a continuous constant state coincide with it.
  for (int p = 0; p < 2; ++p)
    for (std::size_t c = 0; c < fresh.dof.gamma[p].size(); ++c) {
      const int d = fresh.dof.gamma[p][c];
      if (d >= 0) CHECK(std::abs(res.x[d] - 4.0) <= 1e-10);
    }
}

TEST_CASE("content is conserved and per-phase changes match the transfer series") {
  MomentSet ms;
  const double dt = 0.005, tf = 0.05, theta = 0.5;
  AssembledSystem sys = enclosed_pair(ms, 1.0, theta, dt, tf);
  const UnsteadyResult res = run_unsteady(sys);
  REQUIRE(res.times.size() == 11);
  REQUIRE(res.exchange[0].size() == 10);

  const double i0 = res.content.front();
  for (double v : res.content) CHECK(std::abs(v - i0) <= 5e-15 * std::abs(i0));

  // Per-phase balance: C dI_p = -dt * transfer_p, exact to rounding because
  // the bulk rows are re-balanced after each solve.
  Eigen::VectorXd x = initial_vector(sys);
  auto content_of = [&](int p, const Eigen::VectorXd& v) {
    NeumaierSum s;
    for (std::size_t c = 0; c < sys.dof.bulk[p].size(); ++c) {
      const int d = sys.dof.bulk[p][c];
      if (d >= 0) s.add(sys.prob.phase[p].capacity * ms.volume[p][c] * v[d]);
    }
    return s.value();
  };
  std::array<std::vector<double>, 2> series;
  StepObserver observer = [&](int, double, const Eigen::VectorXd& v) {
    for (int p = 0; p < 2; ++p) series[p].push_back(content_of(p, v));
  };
  const UnsteadyResult res2 = run_unsteady(sys, {}, observer);
  std::array<double, 2> prev = {content_of(0, x), content_of(1, x)};
  const double scale = std::abs(i0) + 1.0;
  for (std::size_t n = 0; n < res2.exchange[0].size(); ++n) {
    for (int p = 0; p < 2; ++p) {
      const double change = series[p][n] - prev[p];
      CHECK(std::abs(change + dt * res2.exchange[p][n]) <= 1e-12 * scale);
      prev[p] = series[p][n];
    }
    // Flux continuity across the interface: transfers cancel pairwise.
    CHECK(std::abs(res2.exchange[0][n] + res2.exchange[1][n]) <= 1e-10 * scale);
  }
}

TEST_CASE("a flux-free steady system with compatible data solves to zero") {
  auto g = make_uniform_grid(2, {0, 0, 0}, {1, 1, 0}, {8, 8, 1});
  Ball ball({0.47, 0.52, 0.0}, 0.3, 2);
  MomentSet ms = compute_moments(g, ball);
  ProblemSpec prob;
  prob.phase[0].active = true;
  prob.interface_condition = InterfaceRobin{1.0, nullptr};
  for (int axis = 0; axis < 2; ++axis)
    for (int s = 0; s < 2; ++s) {
      prob.outer[axis][s].kind = OuterBCKind::neumann;
      prob.outer[axis][s].value = constant_fn(0.0);
    }
  prob.steady = true;
  AssembledSystem sys = assemble(ms, prob);
  const Eigen::VectorXd x = solve_steady(sys);
  CHECK(x.lpNorm<Eigen::Infinity>() <= 1e-12);
}

TEST_CASE("a singular factorization is surfaced as an error") {
  SpMat a(2, 2);
  a.insert(0, 0) = 1.0;
  a.insert(1, 1) = 0.0;
  a.makeCompressed();
  CHECK_THROWS_AS(LinearSolver{a}, std::runtime_error);
}
