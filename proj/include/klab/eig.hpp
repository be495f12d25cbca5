#pragma once

#include <vector>

#include "klab/matrix.hpp"
#include "klab/tolerance.hpp"

namespace klab {

struct SpectrumCluster {
  double value;       // mean eigenvalue of the cluster
  int multiplicity;
  int first;          // first column of this cluster in basis
};

// Clustered Hermitian eigendecomposition. basis columns are grouped by
// cluster, orthonormal overall; eigenvalues sorted ascending.
struct SpectrumReport {
  std::vector<SpectrumCluster> clusters;
  Eigen::VectorXd eigenvalues;
  Mat basis;
  double cluster_tol = 0.0;

  int dim() const { return static_cast<int>(basis.rows()); }
  Mat cluster_block(int c) const {
    return basis.middleCols(clusters[static_cast<size_t>(c)].first,
                            clusters[static_cast<size_t>(c)].multiplicity);
  }
  std::vector<int> multiplicities() const {
    std::vector<int> m;
    m.reserve(clusters.size());
    for (const auto& c : clusters) m.push_back(c.multiplicity);
    return m;
  }
};

SpectrumReport hermitian_eig(const Mat& a, const ToleranceConfig& cfg = {});

}  // namespace klab
