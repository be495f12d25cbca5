#include "klab/eig.hpp"

namespace klab {

SpectrumReport hermitian_eig(const Mat& a, const ToleranceConfig& cfg) {
  require_square(a, "hermitian_eig");
  require_finite(a, "hermitian_eig");
  cfg.validate();
  if (!is_hermitian(a, cfg))
    throw NotHermitianError("hermitian_eig: input is not Hermitian within residual_tol");

  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (a + a.adjoint()));
  if (es.info() != Eigen::Success)
    throw NumericalError("hermitian_eig: eigensolver did not converge");

  SpectrumReport rep;
  rep.eigenvalues = es.eigenvalues();
  rep.basis = es.eigenvectors();
  rep.cluster_tol = cfg.cluster_tol;

  const int n = static_cast<int>(a.rows());
  const double gap = cfg.cluster_tol * std::max(1.0, frob(a));

  // Greedy absolute-gap clustering on the sorted eigenvalues.
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || rep.eigenvalues(i) - rep.eigenvalues(i - 1) > gap) {
      SpectrumCluster c;
      c.first = start;
      c.multiplicity = i - start;
      c.value = rep.eigenvalues.segment(start, c.multiplicity).mean();
      rep.clusters.push_back(c);
      start = i;
    }
  }

  // Re-orthonormalize inside each degenerate cluster; the solver's columns
  // are kept as-is otherwise (no canonicalization).
  for (const auto& c : rep.clusters) {
    if (c.multiplicity < 2) continue;
    Eigen::HouseholderQR<Mat> qr(rep.basis.middleCols(c.first, c.multiplicity));
    Mat q = qr.householderQ() * Mat::Identity(n, c.multiplicity);
    rep.basis.middleCols(c.first, c.multiplicity) = q;
  }

  return rep;
}

}  // namespace klab
