#include "klab/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace klab::kernels {

namespace {

// Writes block column q of I (x) A - A^T (x) I into out. Block (p, q) is
// delta_pq * A - A(q, p) * I.
inline void fill_commutator_block_col(const Mat& a, Mat& out, Eigen::Index q) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index p = 0; p < n; ++p) {
    auto blk = out.block(p * n, q * n, n, n);
    if (p == q)
      blk = a;
    else
      blk.setZero();
    const cplx aqp = a(q, p);
    for (Eigen::Index i = 0; i < n; ++i) blk(i, i) -= aqp;
  }
}

inline void fill_anti_block_col(const Mat& s, Mat& out, Eigen::Index q) {
  const Eigen::Index n = s.rows();
  for (Eigen::Index p = 0; p < n; ++p) {
    auto blk = out.block(p * n, q * n, n, n);
    if (p == q)
      blk = s;
    else
      blk.setZero();
    // conj(s)^T block (p, q) coefficient is conj(s(q, p)).
    const cplx c = std::conj(s(q, p));
    for (Eigen::Index i = 0; i < n; ++i) blk(i, i) += c;
  }
}

}  // namespace

Mat commutator_superop_serial(const Mat& a) {
  require_square(a, "commutator_superop");
  const Eigen::Index n = a.rows();
  Mat out(n * n, n * n);
  for (Eigen::Index q = 0; q < n; ++q) fill_commutator_block_col(a, out, q);
  return out;
}

Mat commutator_superop(const Mat& a) {
  require_square(a, "commutator_superop");
  const Eigen::Index n = a.rows();
  Mat out(n * n, n * n);
#pragma omp parallel for schedule(static)
  for (Eigen::Index q = 0; q < n; ++q) fill_commutator_block_col(a, out, q);
  return out;
}

Mat anti_intertwiner_superop_serial(const Mat& s) {
  require_square(s, "anti_intertwiner_superop");
  const Eigen::Index n = s.rows();
  Mat out(n * n, n * n);
  for (Eigen::Index q = 0; q < n; ++q) fill_anti_block_col(s, out, q);
  return out;
}

Mat anti_intertwiner_superop(const Mat& s) {
  require_square(s, "anti_intertwiner_superop");
  const Eigen::Index n = s.rows();
  Mat out(n * n, n * n);
#pragma omp parallel for schedule(static)
  for (Eigen::Index q = 0; q < n; ++q) fill_anti_block_col(s, out, q);
  return out;
}

}  // namespace klab::kernels
