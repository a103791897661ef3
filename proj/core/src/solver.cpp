#include "cutcell/solver.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseLU>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cutcell/summation.hpp"

namespace cutcell {

// ===== linear solver =====

struct LinearSolver::Impl {
  SolverOptions opt;
  SpMat a;  // kept for residual evaluation and refinement
  double matrix_scale = 0.0;
  double residual = 0.0;

  Eigen::SparseLU<SpMat> lu;
  Eigen::BiCGSTAB<SpMat, Eigen::IncompleteLUT<double>> krylov;
};

namespace {

double max_abs_coeffs(const SpMat& m) {
  double v = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it)
      v = std::max(v, std::abs(it.value()));
  return v;
}

}  // namespace

LinearSolver::LinearSolver(const SpMat& a, const SolverOptions& opt)
    : impl(new Impl) {
  impl->opt = opt;
  impl->a = a;
  impl->a.makeCompressed();
  impl->matrix_scale = max_abs_coeffs(impl->a);
  if (opt.kind == LinearSolverKind::direct_lu) {
    impl->lu.compute(impl->a);
    if (impl->lu.info() != Eigen::Success)
      throw std::runtime_error("sparse factorization failed (" + impl->lu.lastErrorMessage() +
                               "); see invertibility_diagnostics for the structural report");
  } else {
    impl->krylov.setTolerance(opt.krylov_tol);
    impl->krylov.setMaxIterations(opt.max_iterations);
    impl->krylov.compute(impl->a);
    if (impl->krylov.info() != Eigen::Success)
      throw std::runtime_error("incomplete factorization failed");
  }
}

LinearSolver::~LinearSolver() = default;
LinearSolver::LinearSolver(LinearSolver&&) noexcept = default;
LinearSolver& LinearSolver::operator=(LinearSolver&&) noexcept = default;

Eigen::VectorXd LinearSolver::solve(const Eigen::VectorXd& b) {
  Eigen::VectorXd x;
  if (impl->opt.kind == LinearSolverKind::direct_lu) {
    x = impl->lu.solve(b);
    for (int pass = 0; pass < impl->opt.refine_passes; ++pass) {
      Eigen::VectorXd r = b - impl->a * x;
      x += impl->lu.solve(r);
    }
  } else {
    x = impl->krylov.solve(b);
    if (impl->krylov.info() != Eigen::Success)
      throw std::runtime_error("iterative solve stalled after " +
                               std::to_string(impl->krylov.iterations()) + " iterations");
  }
  const Eigen::VectorXd r = b - impl->a * x;
  const double scale =
      b.lpNorm<Eigen::Infinity>() + impl->matrix_scale * x.lpNorm<Eigen::Infinity>();
  impl->residual = scale > 0.0 ? r.lpNorm<Eigen::Infinity>() / scale : 0.0;
  if (!(impl->residual <= impl->opt.residual_tol))
    throw std::runtime_error("linear solve residual " + std::to_string(impl->residual) +
                             " exceeds tolerance; the system may be singular or "
                             "ill-conditioned (see invertibility_diagnostics)");
  return x;
}

double LinearSolver::last_residual() const { return impl->residual; }

// ===== time stepping =====

double snapped_dt(double t_final, double dt_target) {
  if (!(t_final > 0.0) || !(dt_target > 0.0))
    throw std::invalid_argument("snapped_dt needs positive times");
  // The guard keeps an exact divisor from being pushed to the next step count.
  long n = static_cast<long>(std::ceil(t_final / dt_target * (1.0 - 1e-12)));
  if (n < 1) n = 1;
  return t_final / static_cast<double>(n);
}

double phase_content(const AssembledSystem& sys, const Eigen::VectorXd& x) {
  NeumaierSum s;
  for (int p = 0; p < 2; ++p) {
    if (!sys.prob.phase[p].active) continue;
    const double cap = sys.prob.phase[p].capacity;
    for (std::size_t c = 0; c < sys.dof.bulk[p].size(); ++c) {
      const int d = sys.dof.bulk[p][c];
      if (d >= 0) s.add(cap * sys.ms->volume[p][c] * x[d]);
    }
  }
  return s.value();
}

double interfacial_transfer(const AssembledSystem& sys, int p, const Eigen::VectorXd& x) {
  if (!sys.prob.phase[p].active) return 0.0;
  const Eigen::VectorXd y = sys.lgw[p] * x + sys.lgg[p] * x;
  NeumaierSum s;
  const int lo = sys.dof.gamma_offset[p];
  for (int i = 0; i < sys.dof.n_gamma[p]; ++i) s.add(y[lo + i]);
  return s.value();
}

Eigen::VectorXd solve_steady(const AssembledSystem& sys, double t, const SolverOptions& opt) {
  LinearSolver solver(sys.matrix, opt);
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(sys.dof.total);
  return solver.solve(assemble_rhs(sys, t, zero));
}

UnsteadyResult run_unsteady(const AssembledSystem& sys, const SolverOptions& opt,
                            const StepObserver& observer) {
  const ProblemSpec& prob = sys.prob;
  if (prob.steady) throw std::invalid_argument("run_unsteady needs an unsteady problem");
  const double nreal = prob.t_final / prob.dt;
  const long nsteps = std::lround(nreal);
  if (nsteps < 1 || std::abs(nreal - static_cast<double>(nsteps)) > 1e-9 * nreal)
    throw std::invalid_argument("dt does not divide t_final; use snapped_dt");

  LinearSolver solver(sys.matrix, opt);

  UnsteadyResult res;
  Eigen::VectorXd x = initial_vector(sys);
  res.times.reserve(nsteps + 1);
  res.content.reserve(nsteps + 1);
  res.times.push_back(0.0);
  res.content.push_back(phase_content(sys, x));

  Eigen::VectorXd xmid(sys.dof.total);
  for (long step = 0; step < nsteps; ++step) {
    const double t0 = static_cast<double>(step) * prob.dt;
    const double t1 = static_cast<double>(step + 1) * prob.dt;
    const double tmid = t0 + prob.theta * prob.dt;

    const Eigen::VectorXd b = assemble_rhs(sys, tmid, x);
    Eigen::VectorXd x1 = solver.solve(b);

    // Fold the remaining bulk-row residual back through the mass diagonal so
    // each cell balance holds to the last bit.
    const Eigen::VectorXd r = b - sys.matrix * x1;
    for (int i = 0; i < sys.dof.total; ++i)
      if (sys.mass[i] > 0.0) x1[i] += r[i] / sys.mass[i];

    // Interfacial transfer is evaluated at the flux time level: bulk slots at
    // n+theta, interfacial slots at the value the step solved for.
    xmid = x1;
    for (int p = 0; p < 2; ++p)
      for (std::size_t c = 0; c < sys.dof.bulk[p].size(); ++c) {
        const int d = sys.dof.bulk[p][c];
        if (d >= 0) xmid[d] = prob.theta * x1[d] + (1.0 - prob.theta) * x[d];
      }
    res.exchange_times.push_back(tmid);
    for (int p = 0; p < 2; ++p)
      if (prob.phase[p].active) res.exchange[p].push_back(interfacial_transfer(sys, p, xmid));

    x.swap(x1);
    res.times.push_back(t1);
    res.content.push_back(phase_content(sys, x));
    if (observer) observer(static_cast<int>(step), t1, x);
  }

  res.x = std::move(x);
  return res;
}

}  // namespace cutcell
