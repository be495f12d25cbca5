#include "klab/antilinear.hpp"

namespace klab {

AntiunitaryOp standard_conjugation(int dim) {
  if (dim <= 0) throw DimensionError("standard_conjugation: dim must be positive");
  return {Mat::Identity(dim, dim)};
}

Vec apply(const AntiunitaryOp& t, const Vec& v) {
  if (t.m.cols() != v.size()) throw DimensionError("apply: dimension mismatch");
  return t.m * v.conjugate();
}

Mat compose(const AntiunitaryOp& t1, const AntiunitaryOp& t2) {
  require_same_dim(t1.m, t2.m, "compose");
  return t1.m * t2.m.conjugate();
}

Mat square(const AntiunitaryOp& t) { return t.m * t.m.conjugate(); }

InvolutionClass classify_involution(const AntiunitaryOp& t, const ToleranceConfig& cfg) {
  const Mat s = square(t);
  const int n = static_cast<int>(s.rows());
  const cplx mean_diag = s.trace() / static_cast<double>(n);
  const double mag = std::abs(mean_diag);
  if (mag < 0.5) return {};  // nowhere near a unimodular scalar
  double theta = std::arg(mean_diag);
  // Antiunitary involutions only square to +I or -I; snap or reject.
  if (std::abs(theta) <= 1e-6)
    theta = 0.0;
  else if (std::abs(std::abs(theta) - M_PI) <= 1e-6)
    theta = M_PI;
  else
    return {};
  const cplx phase = std::polar(1.0, theta);
  if ((s - phase * Mat::Identity(n, n)).norm() > cfg.residual_tol * std::max(1.0, frob(s)))
    return {};
  return {true, theta};
}

AntiunitaryOp conjugation_in_basis(const SpectrumReport& spec) {
  const Mat& v = spec.basis;
  if (v.rows() == 0) throw InvalidSpectrumError("conjugation_in_basis: empty spectrum");
  ToleranceConfig cfg;
  cfg.residual_tol = 1e-8;  // loose unitarity sanity check on the basis
  if (!is_unitary(v, cfg))
    throw InvalidSpectrumError("conjugation_in_basis: basis_matrix is not unitary");
  return {v * v.transpose()};
}

Mat decompose(const AntiunitaryOp& t, const AntiunitaryOp& k_ref, const ToleranceConfig& cfg) {
  require_same_dim(t.m, k_ref.m, "decompose");
  const int n = k_ref.dim();
  if ((square(k_ref) - Mat::Identity(n, n)).norm() > cfg.residual_tol * std::sqrt(double(n)) * 10.0)
    throw InvalidReferenceError("decompose: reference is not a +1 involution");
  return compose(t, k_ref);
}

bool commutes_with(const AntiunitaryOp& t, const Mat& h, const ToleranceConfig& cfg) {
  require_same_dim(t.m, h, "commutes_with");
  // conj(h) = h^T for Hermitian h
  return (t.m * h.transpose() - h * t.m).norm() <= cfg.residual_tol * std::max(1.0, frob(h));
}

bool anticommutes_with(const AntiunitaryOp& t, const Mat& s, const ToleranceConfig& cfg) {
  require_same_dim(t.m, s, "anticommutes_with");
  return (t.m * s.conjugate() + s * t.m).norm() <= cfg.residual_tol * std::max(1.0, frob(s));
}

}  // namespace klab
