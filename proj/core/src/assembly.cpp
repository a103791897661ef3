#include "cutcell/assembly.hpp"

#include <array>
#include <stdexcept>
#include <variant>
#include <vector>

namespace cutcell {

namespace {

using Trip = Eigen::Triplet<double>;

double eff_theta(const ProblemSpec& p) { return p.steady ? 1.0 : p.theta; }

void add(std::vector<Trip>& t, int row, int col, double v) {
  if (v != 0.0) t.emplace_back(row, col, v);
}

}  // namespace

DofMap build_dofmap(const MomentSet& ms, const ProblemSpec& prob) {
  const int nc = ms.grid.cell_count();
  DofMap d;
  for (int p = 0; p < 2; ++p) {
    d.bulk[p].assign(nc, -1);
    d.gamma[p].assign(nc, -1);
  }
  int next = 0;
  for (int p = 0; p < 2; ++p) {
    d.bulk_offset[p] = next;
    if (prob.phase[p].active)
      for (int c = 0; c < nc; ++c)
        if (ms.volume[p][c] > 0.0) d.bulk[p][c] = next++;
    d.n_bulk[p] = next - d.bulk_offset[p];
  }
  for (int p = 0; p < 2; ++p) {
    d.gamma_offset[p] = next;
    if (prob.phase[p].active)
      for (int c = 0; c < nc; ++c)
        if (ms.kind[c] == CellKind::cut) d.gamma[p][c] = next++;
    d.n_gamma[p] = next - d.gamma_offset[p];
  }
  d.total = next;
  return d;
}

AssembledSystem assemble(const MomentSet& ms, const ProblemSpec& prob) {
  validate(prob, ms);
  AssembledSystem sys;
  sys.ms = &ms;
  sys.prob = prob;
  sys.dof = build_dofmap(ms, prob);
  const DofMap& dof = sys.dof;
  const CartesianGrid& g = ms.grid;
  const int N = dof.total;
  const double th = eff_theta(prob);

  std::array<std::vector<Trip>, 2> tww, twg, tgw, tgg;

  for (int p = 0; p < 2; ++p) {
    if (!prob.phase[p].active) continue;
    const double K = prob.phase[p].diffusivity;
    for (int axis = 0; axis < g.dim; ++axis) {
      const auto& Af = ms.aperture[p][axis];
      const auto& Wf = ms.stagger[p][axis];
      const auto& Bl = ms.line[p][axis];
      std::array<int, 3> nf = {g.n[0], g.n[1], g.n[2]};
      nf[axis] += 1;
      for (int k = 0; k < nf[2]; ++k)
        for (int j = 0; j < nf[1]; ++j)
          for (int i = 0; i < nf[0]; ++i) {
            std::array<int, 3> fc = {i, j, k};
            const int f = g.face_index(axis, i, j, k);
            const int side = fc[axis] == 0 ? 0 : (fc[axis] == g.n[axis] ? 1 : -1);
            if (side >= 0) {
              // Domain-boundary face: close the flux one-sidedly from the
              // adjacent cell and the boundary data,
              //   Q = alpha_c*phi_c + alpha_g*g(x,t).
              const double A = Af[f];
              if (A <= 0.0) continue;
              std::array<int, 3> cc = fc;
              if (side == 1) cc[axis] -= 1;
              const int c = g.cell_index(cc[0], cc[1], cc[2]);
              const OuterBC& bc = prob.outer[axis][side];
              const double Bc = Bl[c];
              const double xf = g.edges[axis][fc[axis]];
              const double d = side == 0 ? ms.centroid[p][c][axis] - xf
                                         : xf - ms.centroid[p][c][axis];
              if (!(d > 0.0)) throw std::runtime_error("degenerate boundary closure");
              const double s_out = side == 0 ? -1.0 : 1.0;
              double alpha_c = 0.0, alpha_g = 0.0;
              switch (bc.kind) {
                case OuterBCKind::dirichlet:
                  alpha_c = s_out * K / d;
                  alpha_g = -s_out * K / d;
                  break;
                case OuterBCKind::neumann:
                  alpha_g = s_out;
                  break;
                case OuterBCKind::robin: {
                  const double den = 1.0 + bc.beta * d;
                  alpha_c = s_out * K * bc.beta / den;
                  alpha_g = -s_out * K / den;
                  break;
                }
                case OuterBCKind::none:
                  throw std::runtime_error("open boundary face reached assembly");
              }
              const Vec3 point =
                  ms.boundary_centroid[p][axis][side][ms.transverse_index(axis, c)];
              const double wtot = side == 0 ? -Bc : Bc;
              const double wgam = side == 0 ? A - Bc : Bc - A;
              const int bd = dof.bulk[p][c];
              if (bd >= 0 && wtot != 0.0) {
                add(tww[p], bd, bd, wtot * alpha_c);
                if (bc.value && alpha_g != 0.0)
                  sys.rhs_entries.push_back({bd, -wtot * alpha_g, bc.value, point});
              }
              const int gd = dof.gamma[p][c];
              if (gd >= 0 && wgam != 0.0) {
                add(tgw[p], gd, bd, wgam * alpha_c);
                if (bc.value && alpha_g != 0.0)
                  sys.rhs_entries.push_back({gd, -wgam * alpha_g, bc.value, point});
              }
              sys.closures.push_back({p, axis, f, c, alpha_c, alpha_g, bc.value, point});
              continue;
            }

            const double W = Wf[f];
            if (W <= 0.0) continue;
            std::array<int, 3> cl = fc;
            cl[axis] -= 1;
            const int lo = g.cell_index(cl[0], cl[1], cl[2]);
            const int hi = g.cell_index(fc[0], fc[1], fc[2]);
            const double A = Af[f];
            const double Blo = Bl[lo], Bhi = Bl[hi];
            const double cglo = A - Blo, cghi = A - Bhi;
            const int gdlo = dof.gamma[p][lo], gdhi = dof.gamma[p][hi];
            // A face whose interfacial coefficient points at a cell without an
            // interfacial unknown has no legal stencil and carries no flux.
            if ((cglo != 0.0 && gdlo < 0) || (cghi != 0.0 && gdhi < 0)) {
              ++sys.deactivated_faces;
              continue;
            }
            const int bdlo = dof.bulk[p][lo], bdhi = dof.bulk[p][hi];
            // Q = -K [Bhi*phi_hi - Blo*phi_lo + cghi*g_hi - cglo*g_lo] / W
            const double qb_lo = K * Blo / W, qb_hi = -K * Bhi / W;
            const double qg_lo = K * cglo / W, qg_hi = -K * cghi / W;
            const struct {
              int bulk, gam;
              double wtot, wgam;
            } rows[2] = {
                {bdlo, gdlo, Blo, Blo - A},
                {bdhi, gdhi, -Bhi, A - Bhi},
            };
            for (const auto& rw : rows) {
              if (rw.bulk >= 0 && rw.wtot != 0.0) {
                add(tww[p], rw.bulk, bdlo, rw.wtot * qb_lo);
                add(tww[p], rw.bulk, bdhi, rw.wtot * qb_hi);
                add(twg[p], rw.bulk, gdlo, rw.wtot * qg_lo);
                add(twg[p], rw.bulk, gdhi, rw.wtot * qg_hi);
              }
              if (rw.gam >= 0 && rw.wgam != 0.0) {
                add(tgw[p], rw.gam, bdlo, rw.wgam * qb_lo);
                add(tgw[p], rw.gam, bdhi, rw.wgam * qb_hi);
                add(tgg[p], rw.gam, gdlo, rw.wgam * qg_lo);
                add(tgg[p], rw.gam, gdhi, rw.wgam * qg_hi);
              }
            }
          }
    }
  }

  sys.mass = Eigen::VectorXd::Zero(N);
  for (int p = 0; p < 2; ++p) {
    if (!prob.phase[p].active) continue;
    for (int c = 0; c < g.cell_count(); ++c) {
      const int bd = dof.bulk[p][c];
      if (bd < 0) continue;
      const double V = ms.volume[p][c];
      if (!prob.steady) sys.mass[bd] = prob.phase[p].capacity * V / prob.dt;
      if (prob.phase[p].source)
        sys.rhs_entries.push_back({bd, V, prob.phase[p].source, ms.centroid[p][c]});
    }
  }

  const bool jumpc = std::holds_alternative<InterfaceJump>(prob.interface_condition);
  const bool robinc = std::holds_alternative<InterfaceRobin>(prob.interface_condition);
  const int pstar = prob.phase[0].active ? 0 : 1;

  std::vector<Trip> textra;
  if (jumpc) {
    const auto& ic = std::get<InterfaceJump>(prob.interface_condition);
    for (int c = 0; c < g.cell_count(); ++c) {
      const int gl = dof.gamma[0][c], gdk = dof.gamma[1][c];
      if (gl < 0) continue;
      textra.emplace_back(gdk, gdk, 1.0);
      add(textra, gdk, gl, -ic.lambda);
      if (ic.jump) sys.rhs_entries.push_back({gdk, 1.0, ic.jump, ms.gamma_centroid[c]});
    }
  } else if (robinc) {
    const auto& ic = std::get<InterfaceRobin>(prob.interface_condition);
    const double K = prob.phase[pstar].diffusivity;
    for (int c = 0; c < g.cell_count(); ++c) {
      const int gr = dof.gamma[pstar][c];
      if (gr < 0) continue;
      const double gm = ms.gamma_measure[c];
      add(textra, gr, gr, -K * ic.beta * gm);
      if (ic.rhs) sys.rhs_entries.push_back({gr, -K * gm, ic.rhs, ms.gamma_centroid[c]});
    }
  } else {
    const auto& ic = std::get<InterfaceDirichlet>(prob.interface_condition);
    for (int c = 0; c < g.cell_count(); ++c) {
      const int gr = dof.gamma[pstar][c];
      if (gr < 0) continue;
      textra.emplace_back(gr, gr, 1.0);
      if (ic.value) sys.rhs_entries.push_back({gr, 1.0, ic.value, ms.gamma_centroid[c]});
    }
  }

  for (int p = 0; p < 2; ++p) {
    sys.lww[p].resize(N, N);
    sys.lww[p].setFromTriplets(tww[p].begin(), tww[p].end());
    sys.lwg[p].resize(N, N);
    sys.lwg[p].setFromTriplets(twg[p].begin(), twg[p].end());
    sys.lgw[p].resize(N, N);
    sys.lgw[p].setFromTriplets(tgw[p].begin(), tgw[p].end());
    sys.lgg[p].resize(N, N);
    sys.lgg[p].setFromTriplets(tgg[p].begin(), tgg[p].end());
  }

  // The interfacial flux balance of a cut cell sums both phases into one row,
  // hosted on the light interfacial slot for the jump coupling and on the
  // active phase's slot otherwise; the dark slot then carries the jump row.
  const int row_shift = dof.gamma_offset[0] - dof.gamma_offset[1];
  std::vector<Trip> timp;
  for (int p = 0; p < 2; ++p)
    for (const auto& t : tww[p]) timp.push_back(t);
  if (jumpc) {
    for (const auto& t : tgw[0]) timp.push_back(t);
    for (const auto& t : tgw[1]) timp.emplace_back(t.row() + row_shift, t.col(), t.value());
  } else if (robinc) {
    for (const auto& t : tgw[pstar]) timp.push_back(t);
  }
  sys.implicit_part.resize(N, N);
  sys.implicit_part.setFromTriplets(timp.begin(), timp.end());

  std::vector<Trip> tmat;
  for (const auto& t : timp) tmat.emplace_back(t.row(), t.col(), th * t.value());
  for (int i = 0; i < N; ++i)
    if (sys.mass[i] != 0.0) tmat.emplace_back(i, i, sys.mass[i]);
  for (int p = 0; p < 2; ++p)
    for (const auto& t : twg[p]) tmat.push_back(t);
  if (jumpc) {
    for (const auto& t : tgg[0]) tmat.push_back(t);
    for (const auto& t : tgg[1]) tmat.emplace_back(t.row() + row_shift, t.col(), t.value());
  } else if (robinc) {
    for (const auto& t : tgg[pstar]) tmat.push_back(t);
  }
  for (const auto& t : textra) tmat.push_back(t);
  sys.matrix.resize(N, N);
  sys.matrix.setFromTriplets(tmat.begin(), tmat.end());

  return sys;
}

Eigen::VectorXd assemble_rhs(const AssembledSystem& sys, double t_mid,
                             const Eigen::VectorXd& x_prev) {
  const int N = sys.dof.total;
  Eigen::VectorXd b = Eigen::VectorXd::Zero(N);
  const double th = eff_theta(sys.prob);
  if (!sys.prob.steady) {
    b += sys.mass.cwiseProduct(x_prev);
    if (th < 1.0) b -= (1.0 - th) * (sys.implicit_part * x_prev);
  }
  for (const auto& e : sys.rhs_entries) b[e.row] += e.weight * e.fn(e.point, t_mid);
  return b;
}

Eigen::VectorXd initial_vector(const AssembledSystem& sys) {
  const MomentSet& ms = *sys.ms;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(sys.dof.total);
  for (int p = 0; p < 2; ++p) {
    if (!sys.prob.phase[p].active || !sys.prob.phase[p].initial) continue;
    for (int c = 0; c < ms.grid.cell_count(); ++c) {
      const int bd = sys.dof.bulk[p][c];
      if (bd >= 0) x[bd] = sys.prob.phase[p].initial(ms.centroid[p][c], 0.0);
    }
  }
  return x;
}

FieldState to_state(const AssembledSystem& sys, const Eigen::VectorXd& x, double time) {
  FieldState fs = make_state(*sys.ms, time);
  const int nc = sys.ms->grid.cell_count();
  for (int p = 0; p < 2; ++p)
    for (int c = 0; c < nc; ++c) {
      const int bd = sys.dof.bulk[p][c];
      if (bd >= 0) fs.bulk[p][c] = x[bd];
      const int gd = sys.dof.gamma[p][c];
      if (gd >= 0) fs.gamma[p][c] = x[gd];
    }
  return fs;
}

Eigen::VectorXd from_state(const AssembledSystem& sys, const FieldState& fs) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(sys.dof.total);
  const int nc = sys.ms->grid.cell_count();
  for (int p = 0; p < 2; ++p)
    for (int c = 0; c < nc; ++c) {
      const int bd = sys.dof.bulk[p][c];
      if (bd >= 0) x[bd] = fs.bulk[p][c];
      const int gd = sys.dof.gamma[p][c];
      if (gd >= 0) x[gd] = fs.gamma[p][c];
    }
  return x;
}

}  // namespace cutcell
