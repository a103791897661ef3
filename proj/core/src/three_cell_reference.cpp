#include "cutcell/three_cell_reference.hpp"

#include <Eigen/SparseLU>
#include <stdexcept>

#include "cutcell/assembly.hpp"
#include "cutcell/geometry.hpp"

namespace cutcell {

namespace {

struct Coeffs {
  double m1, m2, m3, m4;
  double a1, a2, a3, a4;
  double lplus;
};

Coeffs coeffs(const ThreeCellConfig& cfg) {
  if (!(cfg.lminus > 0.0 && cfg.lminus < cfg.dx))
    throw std::invalid_argument("interface must lie inside the middle cell");
  Coeffs c;
  c.lplus = cfg.dx - cfg.lminus;
  c.m1 = cfg.c[0] * cfg.dx;
  c.m2 = cfg.c[0] * cfg.lminus;
  c.m3 = cfg.c[1] * c.lplus;
  c.m4 = cfg.c[1] * cfg.dx;
  c.a1 = cfg.k[0] / (0.5 * cfg.dx + cfg.lminus);
  c.a2 = cfg.k[0] / cfg.lminus;
  c.a3 = cfg.k[1] / c.lplus;
  c.a4 = cfg.k[1] / (c.lplus + 0.5 * cfg.dx);
  return c;
}

}  // namespace

Mat6 three_cell_matrix(const ThreeCellConfig& cfg) {
  const Coeffs c = coeffs(cfg);
  const double dt = cfg.dt;
  Mat6 m = Mat6::Zero();
  m(0, 0) = c.m1 + dt * c.a1;
  m(0, 1) = -dt * c.a1;
  m(1, 0) = -dt * c.a1;
  m(1, 1) = c.m2 + dt * (c.a1 + c.a2);
  m(1, 3) = -dt * c.a2;
  m(2, 2) = c.m3 + dt * (c.a3 + c.a4);
  m(2, 4) = -dt * c.a3;
  m(2, 5) = -dt * c.a4;
  m(3, 3) = 1.0;
  m(3, 4) = -1.0;
  m(4, 1) = -c.a2;
  m(4, 2) = -c.a3;
  m(4, 3) = c.a2;
  m(4, 4) = c.a3;
  m(5, 2) = -dt * c.a4;
  m(5, 5) = c.m4 + dt * c.a4;
  return m;
}

Vec6 three_cell_rhs(const ThreeCellConfig& cfg) {
  const Coeffs c = coeffs(cfg);
  Vec6 b = Vec6::Zero();
  // End data enter the balances with opposite signs: the left face loses
  // dt*a, the right face gains dt*b.
  b[0] = c.m1 * cfg.phi_n[0] - cfg.dt * cfg.a;
  b[1] = c.m2 * cfg.phi_n[1];
  b[2] = c.m3 * cfg.phi_n[2];
  b[5] = c.m4 * cfg.phi_n[3] + cfg.dt * cfg.b;
  return b;
}

Vec6 three_cell_solve(const ThreeCellConfig& cfg) {
  return three_cell_matrix(cfg).fullPivLu().solve(three_cell_rhs(cfg));
}

Vec6 three_cell_general_solve(const ThreeCellConfig& cfg) {
  const Coeffs c = coeffs(cfg);
  const double dx = cfg.dx;
  auto g = make_uniform_grid(1, {0, 0, 0}, {3.0 * dx, 0, 0}, {3, 1, 1});
  HalfSpace geom({1, 0, 0}, {dx + cfg.lminus, 0, 0});
  MomentSet ms = compute_moments(g, geom);

  // Uncentered staggered spans of the interval scheme.
  ms.stagger[0][0] = {0.0, 0.5 * dx + cfg.lminus, cfg.lminus, 0.0};
  ms.stagger[1][0] = {0.0, c.lplus, c.lplus + 0.5 * dx, 0.0};

  ProblemSpec prob;
  for (int p = 0; p < 2; ++p) {
    prob.phase[p].active = true;
    prob.phase[p].diffusivity = cfg.k[p];
    prob.phase[p].capacity = cfg.c[p];
  }
  prob.interface_condition = InterfaceJump{1.0, nullptr};
  // The end data a, b are +x flux densities in the k*dphi/dx convention;
  // outward flux of q = -k*grad(phi) is +a on the low side and -b on the
  // high side.
  prob.outer[0][0] = {OuterBCKind::neumann, constant_fn(cfg.a), 0.0};
  prob.outer[0][1] = {OuterBCKind::neumann, constant_fn(-cfg.b), 0.0};
  prob.steady = false;
  prob.theta = 1.0;
  prob.dt = cfg.dt;
  prob.t_final = cfg.dt;

  AssembledSystem sys = assemble(ms, prob);
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(sys.dof.total);
  const int c1 = g.cell_index(0, 0, 0), c2 = g.cell_index(1, 0, 0),
            c3 = g.cell_index(2, 0, 0);
  x0[sys.dof.bulk[0][c1]] = cfg.phi_n[0];
  x0[sys.dof.bulk[0][c2]] = cfg.phi_n[1];
  x0[sys.dof.bulk[1][c2]] = cfg.phi_n[2];
  x0[sys.dof.bulk[1][c3]] = cfg.phi_n[3];

  Eigen::SparseLU<SpMat> lu;
  lu.compute(sys.matrix);
  if (lu.info() != Eigen::Success) throw std::runtime_error("factorization failed");
  Eigen::VectorXd x = lu.solve(assemble_rhs(sys, cfg.dt, x0));

  Vec6 out;
  out[0] = x[sys.dof.bulk[0][c1]];
  out[1] = x[sys.dof.bulk[0][c2]];
  out[2] = x[sys.dof.bulk[1][c2]];
  out[3] = x[sys.dof.gamma[0][c2]];
  out[4] = x[sys.dof.gamma[1][c2]];
  out[5] = x[sys.dof.bulk[1][c3]];
  return out;
}

}  // namespace cutcell
