#include "klab/spin.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "klab/commutant.hpp"
#include "klab/eig.hpp"
#include "klab/kernels.hpp"

namespace klab {

std::array<Mat, 3> pauli() {
  Mat s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0);
  s3 << 1, 0, 0, -1;
  return {s1, s2, s3};
}

SpinRep spin_rep(int n_particles) {
  if (n_particles < 1 || n_particles > 10)
    throw SpecError("spin_rep: n_particles must be in [1, 10]");

  const auto sigma = pauli();
  SpinRep rep;
  rep.n_particles = n_particles;
  rep.dim = 1 << n_particles;
  for (int slot = 0; slot < n_particles; ++slot) {
    const int left = 1 << slot;
    const int right = 1 << (n_particles - 1 - slot);
    for (int axis = 0; axis < 3; ++axis) {
      Mat g = Eigen::kroneckerProduct(
                  Mat::Identity(left, left),
                  Eigen::kroneckerProduct(sigma[static_cast<size_t>(axis)],
                                          Mat::Identity(right, right))
                      .eval())
                  .eval();
      rep.generators.push_back(std::move(g));
    }
  }
  return rep;
}

const char* to_string(InvolutionSquare s) {
  switch (s) {
    case InvolutionSquare::Plus: return "+1";
    case InvolutionSquare::Minus: return "-1";
    case InvolutionSquare::Mixed: return "mixed";
    case InvolutionSquare::Empty: return "empty";
  }
  return "?";
}

IntertwinerSolution solve_time_reversal(const SpinRep& rep, const ToleranceConfig& cfg,
                                        int particle_cap) {
  cfg.validate();
  if (rep.generators.empty() || rep.dim <= 0)
    throw SpecError("solve_time_reversal: empty representation");
  if (rep.n_particles > particle_cap)
    throw SpecError("solve_time_reversal: representation exceeds the particle cap");

  const int n = rep.dim;
  const int k = static_cast<int>(rep.generators.size());
  Mat stacked(static_cast<Eigen::Index>(k) * n * n, n * n);
  for (int i = 0; i < k; ++i)
    stacked.middleRows(static_cast<Eigen::Index>(i) * n * n, n * n) =
        kernels::anti_intertwiner_superop(rep.generators[static_cast<size_t>(i)]);

  AlgebraBasis null = superop_nullspace(stacked, n, cfg);

  IntertwinerSolution sol;
  sol.basis = std::move(null.elements);
  sol.solution_dim = static_cast<int>(sol.basis.size());
  if (sol.solution_dim == 0) {
    sol.involution_square = InvolutionSquare::Empty;
    return sol;
  }

  if (sol.solution_dim == 1) {
    // Normalize: unitary scale, first nonzero entry positive-real.
    Mat& m = sol.basis.front();
    m *= std::sqrt(double(n)) / frob(m);
    for (Eigen::Index j = 0; j < m.size(); ++j) {
      const cplx e = m(j % n, j / n);
      if (std::abs(e) > 1e-12) {
        m *= std::conj(e) / std::abs(e);
        break;
      }
    }
  }

  bool plus = false, minus = false, other = false;
  for (const Mat& m : sol.basis) {
    const double nm = frob(m);
    if (nm == 0.0) continue;
    Mat sq = (m * m.conjugate()) / (nm * nm / double(n));  // unitary-normalized square
    if ((sq - Mat::Identity(n, n)).norm() <= 1e-8)
      plus = true;
    else if ((sq + Mat::Identity(n, n)).norm() <= 1e-8)
      minus = true;
    else
      other = true;
  }
  if (plus && !minus && !other)
    sol.involution_square = InvolutionSquare::Plus;
  else if (minus && !plus && !other)
    sol.involution_square = InvolutionSquare::Minus;
  else
    sol.involution_square = InvolutionSquare::Mixed;
  return sol;
}

bool irreducibility_check(std::span<const Mat> matrices, const ToleranceConfig& cfg) {
  return commutant_basis(matrices, cfg).dimension() == 1;
}

cplx schur_scalar_extract(const AntiunitaryOp& t_tilde, const AntiunitaryOp& t,
                          const SpinRep& rep, const ToleranceConfig& cfg) {
  for (const Mat& s : rep.generators) {
    if (!anticommutes_with(t_tilde, s, cfg))
      throw SpecError("schur_scalar_extract: t_tilde does not reverse all generators");
    if (!anticommutes_with(t, s, cfg))
      throw SpecError("schur_scalar_extract: t does not reverse all generators");
  }
  const Mat c = compose(t_tilde, t);  // should equal -k I
  const int n = static_cast<int>(c.rows());
  const cplx k = -c.trace() / double(n);
  if ((c + k * Mat::Identity(n, n)).norm() > 1e-8 * std::max(1.0, frob(c)))
    throw NotScalarError("schur_scalar_extract: composition is not scalar");
  return k;
}

bool rotation_commutation_check(const SpinRep& rep, const AntiunitaryOp& t,
                                const std::array<double, 3>& angles,
                                const ToleranceConfig& cfg) {
  if (t.dim() != rep.dim)
    throw DimensionError("rotation_commutation_check: dimension mismatch");

  int slot = -1;
  for (int p = 0; p < rep.n_particles; ++p) {
    bool all = true;
    for (int axis = 0; axis < 3; ++axis)
      all = all && anticommutes_with(t, rep.generator(p, axis), cfg);
    if (all) {
      slot = p;
      break;
    }
  }
  if (slot < 0)
    throw SpecError("rotation_commutation_check: t anticommutes with no slot's generators");

  Mat a = Mat::Zero(rep.dim, rep.dim);
  for (int axis = 0; axis < 3; ++axis)
    a += angles[static_cast<size_t>(axis)] * rep.generator(slot, axis);
  const SpectrumReport spec = hermitian_eig(a, cfg);
  Vec d(rep.dim);
  for (int j = 0; j < rep.dim; ++j) d(j) = std::polar(1.0, spec.eigenvalues(j));
  const Mat r = spec.basis * d.asDiagonal() * spec.basis.adjoint();  // exp(i a)

  return (t.m * r.conjugate() - r * t.m).norm() <=
         100.0 * cfg.residual_tol * std::max(1.0, frob(r));
}

}  // namespace klab
