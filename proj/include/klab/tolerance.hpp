#pragma once

#include "klab/errors.hpp"

namespace klab {

// Numerical thresholds shared across all modules.
//   cluster_tol  — eigenvalue gap below which two eigenvalues are "the same"
//                  (relative to max(1, ||A||_F))
//   rank_rel_tol — singular values below rank_rel_tol * s_max count as zero
//   residual_tol — residual bound for validity predicates (Hermitian, unitary)
struct ToleranceConfig {
  double cluster_tol = 1e-8;
  double rank_rel_tol = 1e-10;
  double residual_tol = 1e-10;

  void validate() const {
    if (!(cluster_tol > 0.0) || !(rank_rel_tol > 0.0) || !(residual_tol > 0.0))
      throw SpecError("tolerances must be strictly positive");
    if (cluster_tol > 1.0 || rank_rel_tol > 1.0)
      throw SpecError("cluster_tol and rank_rel_tol must be <= 1");
  }
};

}  // namespace klab
