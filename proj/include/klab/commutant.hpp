#pragma once

#include <span>
#include <vector>

#include "klab/matrix.hpp"
#include "klab/tolerance.hpp"

namespace klab {

// Hilbert-Schmidt-orthonormal basis of an operator algebra (a commutant or
// bicommutant), obtained from the right singular vectors of the stacked
// commutator superoperator.
struct AlgebraBasis {
  int dim_space = 0;               // matrix side length n
  std::vector<Mat> elements;       // HS-orthonormal
  bool rank_gap_warning = false;   // some singular value sat near the rank cut

  int dimension() const { return static_cast<int>(elements.size()); }
};

struct DegeneracyCertificate {
  int commutant_dim = 0;
  int bicommutant_dim = 0;
  bool degenerate = false;
  bool rank_gap_warning = false;
  ToleranceConfig tolerances;
  double generator_norm = 0.0;
};

// HS-orthonormal basis of the nullspace of a stacked superoperator acting
// on vec'd n x n matrices (right singular vectors past the rank cut).
AlgebraBasis superop_nullspace(const Mat& stacked, int n, const ToleranceConfig& cfg = {});

// {X : A_i X = X A_i for all i}. Accepts arbitrary (non-Hermitian) generators.
AlgebraBasis commutant_basis(std::span<const Mat> generators, const ToleranceConfig& cfg = {});

// Commutant of the commutant.
AlgebraBasis bicommutant_basis(std::span<const Mat> generators, const ToleranceConfig& cfg = {});

// dim{H}' vs dim{H}'' for Hermitian H; degenerate iff they differ. The
// engine dims are cross-checked against the spectral profile (sum m_i^2,
// cluster count); disagreement sets rank_gap_warning. The zero matrix is
// accepted and reports (n^2, 1, degenerate) for n >= 2.
DegeneracyCertificate degeneracy_certificate(const Mat& h, const ToleranceConfig& cfg = {});

}  // namespace klab
