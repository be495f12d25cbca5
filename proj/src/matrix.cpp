#include "klab/matrix.hpp"

namespace klab {

cplx hs_inner(const Mat& a, const Mat& b) {
  require_same_dim(a, b, "hs_inner");
  return (a.adjoint() * b).trace();
}

bool validate(const Mat& a, MatrixKind kind, const ToleranceConfig& cfg) {
  if (a.rows() != a.cols() || a.rows() == 0 || !a.allFinite()) return false;
  switch (kind) {
    case MatrixKind::Hermitian:
      return (a - a.adjoint()).norm() <= cfg.residual_tol * std::max(1.0, frob(a));
    case MatrixKind::Unitary:
      return (a.adjoint() * a - Mat::Identity(a.rows(), a.cols())).norm() <= cfg.residual_tol;
  }
  return false;
}

}  // namespace klab
