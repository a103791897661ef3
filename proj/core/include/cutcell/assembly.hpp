#pragma once

#include <Eigen/Sparse>
#include <array>
#include <vector>

#include "cutcell/conditions.hpp"
#include "cutcell/fields.hpp"
#include "cutcell/moments.hpp"

namespace cutcell {

// Unknown ordering: bulk light, bulk dark, interfacial light, interfacial
// dark; lexicographic by cell index within each block. A bulk unknown exists
// where an active phase has volume; an interfacial unknown exists on every
// cut cell of an active phase.
struct DofMap {
  std::array<std::vector<int>, 2> bulk;   // [phase][cell] -> dof or -1
  std::array<std::vector<int>, 2> gamma;  // [phase][cell] -> dof or -1
  std::array<int, 2> n_bulk = {0, 0};
  std::array<int, 2> n_gamma = {0, 0};
  std::array<int, 2> bulk_offset = {0, 0};
  std::array<int, 2> gamma_offset = {0, 0};
  int total = 0;
};

DofMap build_dofmap(const MomentSet& ms, const ProblemSpec& prob);

using SpMat = Eigen::SparseMatrix<double>;

// Time-independent data evaluated into the right-hand side each step.
struct RhsEntry {
  int row;
  double weight;
  ScalarFn fn;  // rhs[row] += weight * fn(point, t)
  Vec3 point;
};

// One-sided closure of a domain-boundary face flux:
// Q_face = alpha_c * phi_cell + alpha_g * g(point, t).
struct BoundaryClosure {
  int phase, axis, face, cell;
  double alpha_c, alpha_g;
  ScalarFn g;
  Vec3 point;
};

// The assembled theta-scheme. All matrices are square over the global dof
// count; per-phase operator blocks keep their natural row placement (bulk
// rows for lww/lwg, the phase's interfacial rows for lgw/lgg) and carry no
// theta or dt factors. `matrix` is the system actually solved:
//
//   bulk rows:    [CV/dt + theta*lww] phi_new + lwg phi_g = rhs
//   balance rows: theta*(sum_p lgw) phi_new + (sum_p lgg) phi_g
//                 (- K beta |Gamma| phi_g, Robin)          = rhs
//   jump rows:    phi_g_dark - lambda phi_g_light          = rhs
//
// with rhs assembled by assemble_rhs from the previous state and the data
// functions at the intermediate time t + theta*dt.
struct AssembledSystem {
  DofMap dof;
  const MomentSet* ms = nullptr;
  ProblemSpec prob;

  std::array<SpMat, 2> lww, lwg, lgw, lgg;
  SpMat implicit_part;  // rows carrying theta-split operator terms
  SpMat matrix;
  Eigen::VectorXd mass;  // CV/dt on bulk rows, 0 elsewhere (0 for steady)

  std::vector<RhsEntry> rhs_entries;  // sources, bc data, interface data
  std::vector<BoundaryClosure> closures;
  int deactivated_faces = 0;  // flux faces dropped for lack of a legal stencil
};

AssembledSystem assemble(const MomentSet& ms, const ProblemSpec& prob);

// b(t_mid, x_prev) = mass.*x_prev - (1-theta)*implicit_part*x_prev + data(t_mid).
// For steady problems pass x_prev = zero vector and the evaluation time.
Eigen::VectorXd assemble_rhs(const AssembledSystem& sys, double t_mid,
                             const Eigen::VectorXd& x_prev);

// Bulk slots get the phase initial values at phase centroids; interfacial
// slots start at zero (they are determined by the first solve).
Eigen::VectorXd initial_vector(const AssembledSystem& sys);

FieldState to_state(const AssembledSystem& sys, const Eigen::VectorXd& x, double time);
Eigen::VectorXd from_state(const AssembledSystem& sys, const FieldState& fs);

}  // namespace cutcell
