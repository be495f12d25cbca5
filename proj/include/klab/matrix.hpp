#pragma once

#include <Eigen/Dense>
#include <complex>

#include "klab/errors.hpp"
#include "klab/tolerance.hpp"

namespace klab {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline double frob(const Mat& a) { return a.norm(); }

inline void require_square(const Mat& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw DimensionError(std::string(what) + ": matrix must be square and nonempty");
}

inline void require_finite(const Mat& a, const char* what) {
  if (!a.allFinite())
    throw FormatError(std::string(what) + ": matrix has non-finite entries");
}

inline void require_same_dim(const Mat& a, const Mat& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(what) + ": dimension mismatch");
}

// Hilbert-Schmidt inner product trace(a^dag b). Conjugate-symmetric and
// positive-definite; the geometry under which algebra bases are orthonormal.
cplx hs_inner(const Mat& a, const Mat& b);

enum class MatrixKind { Hermitian, Unitary };

bool validate(const Mat& a, MatrixKind kind, const ToleranceConfig& cfg = {});

inline bool is_hermitian(const Mat& a, const ToleranceConfig& cfg = {}) {
  return validate(a, MatrixKind::Hermitian, cfg);
}
inline bool is_unitary(const Mat& a, const ToleranceConfig& cfg = {}) {
  return validate(a, MatrixKind::Unitary, cfg);
}

}  // namespace klab
