#include "cutcell/diagnostics.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cutcell {

namespace {

double max_abs(const SpMat& m) {
  double v = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it) v = std::max(v, std::abs(it.value()));
  return v;
}

Eigen::MatrixXd dense_block(const SpMat& m, int row0, int nrows, int col0, int ncols) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(nrows, ncols);
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it) {
      const int r = static_cast<int>(it.row()) - row0;
      const int c = static_cast<int>(it.col()) - col0;
      if (r >= 0 && r < nrows && c >= 0 && c < ncols) d(r, c) = it.value();
    }
  return d;
}

double min_sym_eig(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()));
  return es.eigenvalues().minCoeff();
}

// Spectral norm via the small Gram matrix (the interfacial rank is small).
double spectral_norm_tall(const Eigen::MatrixXd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  const Eigen::MatrixXd gram = m.cols() <= m.rows()
                                   ? Eigen::MatrixXd(m.transpose() * m)
                                   : Eigen::MatrixXd(m * m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

}  // namespace

SystemDiagnostics invertibility_diagnostics(const AssembledSystem& sys, double lambda,
                                            int max_dense) {
  if (sys.dof.total > max_dense)
    throw std::invalid_argument("diagnostics limited to small systems");

  SystemDiagnostics rep;
  const DofMap& dof = sys.dof;
  const double th = sys.prob.steady ? 1.0 : sys.prob.theta;

  for (int p = 0; p < 2; ++p) {
    if (!sys.prob.phase[p].active) continue;
    const double lscale = max_abs(sys.lww[p]);
    if (lscale > 0.0)
      rep.lww_asymmetry[p] = max_abs(sys.lww[p] - SpMat(sys.lww[p].transpose())) / lscale;
    const double cscale = max_abs(sys.lwg[p]);
    if (cscale > 0.0)
      rep.adjointness[p] = max_abs(sys.lgw[p] + SpMat(sys.lwg[p].transpose())) / cscale;

    Eigen::MatrixXd lb =
        dense_block(sys.lww[p], dof.bulk_offset[p], dof.n_bulk[p], dof.bulk_offset[p],
                    dof.n_bulk[p]);
    rep.lww_sym_min_eig[p] = min_sym_eig(lb);
    Eigen::MatrixXd ab = th * lb;
    for (int i = 0; i < dof.n_bulk[p]; ++i) ab(i, i) += sys.mass[dof.bulk_offset[p] + i];
    rep.bulk_sym_min_eig[p] = min_sym_eig(ab);
  }

  rep.has_interface_pair = sys.prob.two_phase() && dof.n_gamma[0] > 0;
  if (!rep.has_interface_pair) return rep;

  const int m = dof.n_gamma[0];
  const int nbt = dof.n_bulk[0] + dof.n_bulk[1];
  Eigen::MatrixXd dm =
      -dense_block(sys.lgg[0], dof.gamma_offset[0], m, dof.gamma_offset[0], m);
  Eigen::MatrixXd dp =
      -dense_block(sys.lgg[1], dof.gamma_offset[1], m, dof.gamma_offset[1], m);
  dm = 0.5 * (dm + dm.transpose()).eval();
  dp = 0.5 * (dp + dp.transpose()).eval();

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> pencil(dm, dp);
  rep.lambda_max = pencil.info() == Eigen::Success
                       ? pencil.eigenvalues().maxCoeff()
                       : std::numeric_limits<double>::quiet_NaN();

  const Eigen::MatrixXd deff = lambda * dp - dm;
  rep.deff_min_eig = min_sym_eig(deff);
  rep.deff_spd = rep.deff_min_eig > 0.0;

  const double alpha = std::min(rep.bulk_sym_min_eig[0], rep.bulk_sym_min_eig[1]);
  if (rep.deff_spd) {
    Eigen::MatrixXd cmb = dense_block(sys.lwg[0], 0, nbt, dof.gamma_offset[0], m) +
                          lambda * dense_block(sys.lwg[1], 0, nbt, dof.gamma_offset[1], m);
    Eigen::MatrixXd bmb = dense_block(sys.lgw[0], dof.gamma_offset[0], m, 0, nbt) +
                          dense_block(sys.lgw[1], dof.gamma_offset[1], m, 0, nbt);
    const double cn = spectral_norm_tall(cmb);
    const double bn = spectral_norm_tall(bmb);
    rep.schur_margin = alpha - th * cn * bn / rep.deff_min_eig;
  } else {
    rep.schur_margin = -std::numeric_limits<double>::infinity();
  }
  return rep;
}

}  // namespace cutcell
