#include "klab/kramers.hpp"

#include "klab/rng.hpp"

namespace klab {

const char* to_string(SymmetryClass s) {
  switch (s) {
    case SymmetryClass::Fermionic: return "fermionic";
    case SymmetryClass::Bosonic: return "bosonic";
    case SymmetryClass::None: return "none";
  }
  return "?";
}

AntiunitaryOp canonical_fermionic_t(int dim) {
  if (dim <= 0 || dim % 2 != 0)
    throw SpecError("canonical_fermionic_t: fermionic T requires positive even dim");
  Mat m = Mat::Zero(dim, dim);
  for (int b = 0; b < dim / 2; ++b) {
    m(2 * b, 2 * b + 1) = cplx(0.0, -1.0);
    m(2 * b + 1, 2 * b) = cplx(0.0, 1.0);
  }
  return {m};
}

EnsembleSpec make_ensemble_spec(int dim, SymmetryClass symmetry, std::uint64_t seed,
                                int trials, std::optional<AntiunitaryOp> t,
                                const ToleranceConfig& cfg) {
  if (dim <= 0) throw SpecError("ensemble: dim must be positive");
  if (trials <= 0) throw SpecError("ensemble: trials must be positive");

  EnsembleSpec spec;
  spec.dim = dim;
  spec.symmetry = symmetry;
  spec.seed = seed;
  spec.trials = trials;

  if (symmetry == SymmetryClass::None) {
    if (t) throw SpecError("ensemble: symmetry class 'none' takes no time-reversal operator");
    return spec;
  }

  if (symmetry == SymmetryClass::Fermionic && dim % 2 != 0)
    throw SpecError("ensemble: fermionic symmetry requires even dim (T^2 = -I needs it)");

  spec.t = t ? *t
             : (symmetry == SymmetryClass::Fermionic ? canonical_fermionic_t(dim)
                                                     : standard_conjugation(dim));
  if (spec.t.dim() != dim) throw SpecError("ensemble: T dimension does not match dim");
  if (!is_unitary(spec.t.m, cfg)) throw SpecError("ensemble: T linear part is not unitary");

  const InvolutionClass inv = classify_involution(spec.t, cfg);
  const double want = symmetry == SymmetryClass::Fermionic ? M_PI : 0.0;
  if (!inv.is_involution || inv.phase != want)
    throw SpecError("ensemble: T does not square to the declared phase");
  return spec;
}

Mat symmetrize(const Mat& h0, const AntiunitaryOp& t, const ToleranceConfig& cfg) {
  require_same_dim(h0, t.m, "symmetrize");
  if (!is_hermitian(h0, cfg)) throw NotHermitianError("symmetrize: h0 is not Hermitian");
  return 0.5 * (h0 + t.m * h0.conjugate() * t.m.adjoint());
}

Mat sample_tri_hamiltonian(const EnsembleSpec& spec, int trial_index) {
  if (spec.dim <= 0) throw SpecError("sample_tri_hamiltonian: invalid spec");
  if (trial_index < 0) throw SpecError("sample_tri_hamiltonian: negative trial index");
  TrialRng rng(spec.seed, static_cast<std::uint64_t>(trial_index));

  for (int attempt = 0; attempt < 8; ++attempt) {
    Mat h = rng.hermitian_gaussian(spec.dim);
    if (spec.symmetry != SymmetryClass::None) h = symmetrize(h, spec.t);
    if (frob(h) > 1e-10) return h;
  }
  throw SpecError("sample_tri_hamiltonian: symmetrization annihilated 8 consecutive draws");
}

namespace {

void check_kramers_hypotheses(const Mat& h, const AntiunitaryOp& t,
                              const ToleranceConfig& cfg) {
  require_same_dim(h, t.m, "kramers_verify");
  if (!is_hermitian(h, cfg))
    throw NotHermitianError("kramers_verify: H is not Hermitian");
  const InvolutionClass inv = classify_involution(t, cfg);
  if (!inv.is_involution || inv.phase != M_PI)
    throw HypothesisError("fermion condition", "kramers_verify: T^2 != -I");
  if (!commutes_with(t, h, cfg))
    throw HypothesisError("T-invariance", "kramers_verify: [T, H] != 0");
}

}  // namespace

KramersReport kramers_verify_pointwise(const Mat& h, const AntiunitaryOp& t,
                                       const ToleranceConfig& cfg) {
  check_kramers_hypotheses(h, t, cfg);

  KramersReport rep;
  rep.spectrum = hermitian_eig(h, cfg);
  rep.all_even = true;
  for (const auto& c : rep.spectrum.clusters)
    if (c.multiplicity % 2 != 0) rep.all_even = false;

  const int n = rep.spectrum.dim();
  for (int j = 0; j < n; ++j) {
    const Vec psi = rep.spectrum.basis.col(j);
    const double lambda = rep.spectrum.eigenvalues(j);
    const Vec tpsi = apply(t, psi);

    KramersPairing p;
    p.index = j;
    p.t_psi_coeffs = rep.spectrum.basis.adjoint() * tpsi;
    p.overlap = std::abs(psi.dot(tpsi));
    p.residual = (h * tpsi - lambda * tpsi).norm();
    rep.max_overlap = std::max(rep.max_overlap, p.overlap);
    rep.max_residual = std::max(rep.max_residual, p.residual);
    rep.pairings.push_back(std::move(p));
  }

  rep.certificate = degeneracy_certificate(h, cfg);
  return rep;
}

DegeneracyCertificate kramers_verify_algebraic(const Mat& h, const AntiunitaryOp& t,
                                               const ToleranceConfig& cfg) {
  check_kramers_hypotheses(h, t, cfg);
  if (frob(h) <= cfg.residual_tol)
    throw ZeroOperatorError("kramers_verify_algebraic: H is the zero operator");
  return degeneracy_certificate(h, cfg);
}

EnsembleSummary bosonic_control(const EnsembleSpec& spec, const ToleranceConfig& cfg) {
  if (spec.symmetry != SymmetryClass::Bosonic)
    throw SpecError("bosonic_control: spec must be bosonic");

  EnsembleSummary sum;
  sum.trials = spec.trials;
  std::vector<bool> degen(static_cast<size_t>(spec.trials));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < spec.trials; ++i) {
    const Mat h = sample_tri_hamiltonian(spec, i);
    degen[static_cast<size_t>(i)] = degeneracy_certificate(h, cfg).degenerate;
  }
  for (bool d : degen) (d ? sum.degenerate_count : sum.nondegenerate_count)++;
  sum.nondegenerate_fraction = double(sum.nondegenerate_count) / double(sum.trials);
  sum.degenerate_fraction = double(sum.degenerate_count) / double(sum.trials);
  return sum;
}

Mat cluster_diagonal_unitary(const SpectrumReport& spec_report, const DiagonalPhase& g) {
  if (g.phases.size() != spec_report.clusters.size())
    throw DimensionError("cluster_diagonal_unitary: one phase per cluster required");
  for (double p : g.phases)
    if (!std::isfinite(p))
      throw FormatError("cluster_diagonal_unitary: phases must be finite reals");

  const int n = spec_report.dim();
  Vec d(n);
  for (size_t c = 0; c < spec_report.clusters.size(); ++c) {
    const auto& cl = spec_report.clusters[c];
    for (int j = 0; j < cl.multiplicity; ++j)
      d(cl.first + j) = std::polar(1.0, g.phases[c]);
  }
  return spec_report.basis * d.asDiagonal() * spec_report.basis.adjoint();
}

bool phase_conjugation_check(const SpectrumReport& spec_report, const DiagonalPhase& g,
                             const ToleranceConfig& cfg) {
  (void)cfg;
  const Mat u = cluster_diagonal_unitary(spec_report, g);
  const AntiunitaryOp kh = conjugation_in_basis(spec_report);
  // K_H U K_H^{-1} as a linear map: W conj(U) conj(W), W = V V^T.
  const Mat lhs = kh.m * u.conjugate() * kh.m.conjugate();
  return (lhs - u.adjoint()).cwiseAbs().maxCoeff() <= 1e-12;
}

}  // namespace klab
