#include "klab/commutant.hpp"

#include <Eigen/SVD>

#include "klab/eig.hpp"
#include "klab/kernels.hpp"

namespace klab {

namespace {

Mat unvec(const Vec& x, int n) {
  return Eigen::Map<const Mat>(x.data(), n, n);
}

}  // namespace

// Columns of V past the numerical rank are orthonormal in vec space, i.e.
// HS-orthonormal as matrices.
AlgebraBasis superop_nullspace(const Mat& stacked, int n, const ToleranceConfig& cfg) {
  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double cut = cfg.rank_rel_tol * smax;

  int rank = 0;
  bool warning = false;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++rank;
    if (smax > 0.0 && sv(i) > cut / 10.0 && sv(i) <= cut * 10.0) warning = true;
  }

  AlgebraBasis basis;
  basis.dim_space = n;
  basis.rank_gap_warning = warning;
  const int cols = static_cast<int>(stacked.cols());
  for (int j = rank; j < cols; ++j)
    basis.elements.push_back(unvec(svd.matrixV().col(j), n));
  return basis;
}

namespace {

Mat stack_commutator_superops(std::span<const Mat> generators) {
  if (generators.empty())
    throw EmptyGeneratorError("commutant_basis: empty generator list");
  const int n = static_cast<int>(generators.front().rows());
  for (const Mat& g : generators) {
    require_square(g, "commutant_basis");
    require_finite(g, "commutant_basis");
    if (g.rows() != n) throw DimensionError("commutant_basis: mixed generator dimensions");
  }
  const int k = static_cast<int>(generators.size());
  Mat stacked(static_cast<Eigen::Index>(k) * n * n, n * n);
  for (int i = 0; i < k; ++i)
    stacked.middleRows(static_cast<Eigen::Index>(i) * n * n, n * n) =
        kernels::commutator_superop(generators[static_cast<size_t>(i)]);
  return stacked;
}

}  // namespace

AlgebraBasis commutant_basis(std::span<const Mat> generators, const ToleranceConfig& cfg) {
  cfg.validate();
  const Mat stacked = stack_commutator_superops(generators);
  const int n = static_cast<int>(generators.front().rows());
  return superop_nullspace(stacked, n, cfg);
}

AlgebraBasis bicommutant_basis(std::span<const Mat> generators, const ToleranceConfig& cfg) {
  AlgebraBasis comm = commutant_basis(generators, cfg);
  AlgebraBasis bicomm = commutant_basis(comm.elements, cfg);
  bicomm.rank_gap_warning = bicomm.rank_gap_warning || comm.rank_gap_warning;
  return bicomm;
}

DegeneracyCertificate degeneracy_certificate(const Mat& h, const ToleranceConfig& cfg) {
  cfg.validate();
  require_square(h, "degeneracy_certificate");
  require_finite(h, "degeneracy_certificate");
  if (!is_hermitian(h, cfg))
    throw NotHermitianError("degeneracy_certificate: input is not Hermitian");

  const std::vector<Mat> gens{h};
  AlgebraBasis comm = commutant_basis(gens, cfg);
  AlgebraBasis bicomm = commutant_basis(comm.elements, cfg);

  DegeneracyCertificate cert;
  cert.commutant_dim = comm.dimension();
  cert.bicommutant_dim = bicomm.dimension();
  cert.degenerate = cert.commutant_dim != cert.bicommutant_dim;
  cert.rank_gap_warning = comm.rank_gap_warning || bicomm.rank_gap_warning;
  cert.tolerances = cfg;
  cert.generator_norm = frob(h);

  // Spectral cross-check: sum of squared multiplicities and cluster count.
  const SpectrumReport spec = hermitian_eig(h, cfg);
  int sum_m2 = 0;
  for (const auto& c : spec.clusters) sum_m2 += c.multiplicity * c.multiplicity;
  const int r = static_cast<int>(spec.clusters.size());
  if (sum_m2 != cert.commutant_dim || r != cert.bicommutant_dim)
    cert.rank_gap_warning = true;

  return cert;
}

}  // namespace klab
