#pragma once

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "cutcell/assembly.hpp"

namespace cutcell {

enum class LinearSolverKind { direct_lu, bicgstab_ilut };

struct SolverOptions {
  LinearSolverKind kind = LinearSolverKind::direct_lu;
  double residual_tol = 1e-10;  // relative residual accepted after refinement
  int refine_passes = 1;        // extra backsolves on the direct path
  int max_iterations = 4000;    // Krylov cap
  double krylov_tol = 1e-12;
};

// Factorizes once and serves repeated right-hand sides. Solves are stateless:
// the same matrix and rhs give bit-identical results, whether the
// factorization is reused or rebuilt. Throws std::runtime_error when the
// factorization fails or the relative residual exceeds residual_tol.
class LinearSolver {
 public:
  LinearSolver(const SpMat& a, const SolverOptions& opt = {});
  ~LinearSolver();
  LinearSolver(LinearSolver&&) noexcept;
  LinearSolver& operator=(LinearSolver&&) noexcept;

  Eigen::VectorXd solve(const Eigen::VectorXd& b);
  double last_residual() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl;
};

// Largest step not exceeding dt_target that divides t_final exactly.
double snapped_dt(double t_final, double dt_target);

// Discrete content sum_p C_p sum_c V_c Phi_c over active phases (compensated
// summation).
double phase_content(const AssembledSystem& sys, const Eigen::VectorXd& x);

// Phase-outward interfacial transfer: the sum over cut cells of the
// interfacial divergence rows of phase p, evaluated on a state vector whose
// bulk slots hold the time level the fluxes are wanted at.
double interfacial_transfer(const AssembledSystem& sys, int p, const Eigen::VectorXd& x);

Eigen::VectorXd solve_steady(const AssembledSystem& sys, double t = 0.0,
                             const SolverOptions& opt = {});

struct UnsteadyResult {
  Eigen::VectorXd x;            // final state vector
  std::vector<double> times;    // step boundaries, times[0] = 0
  std::vector<double> content;  // aligned with times
  std::vector<double> exchange_times;           // t_n + theta*dt per step
  std::array<std::vector<double>, 2> exchange;  // per phase, per step
};

using StepObserver = std::function<void(int step, double t, const Eigen::VectorXd& x)>;

// Marches the assembled theta scheme to t_final. After each solve the bulk
// rows are re-balanced in increment form (the residual is folded back through
// the mass diagonal), which keeps the discrete content exact to rounding for
// flux-free problems.
UnsteadyResult run_unsteady(const AssembledSystem& sys, const SolverOptions& opt = {},
                            const StepObserver& observer = {});

}  // namespace cutcell
