#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "klab/antilinear.hpp"
#include "klab/commutant.hpp"
#include "klab/eig.hpp"

namespace klab {

enum class SymmetryClass { Fermionic, Bosonic, None };

const char* to_string(SymmetryClass s);

// Canonical fermionic time reversal at even dim 2k: m = I_k (x) sigma_2,
// T^2 = -I.
AntiunitaryOp canonical_fermionic_t(int dim);

struct EnsembleSpec {
  int dim = 0;
  SymmetryClass symmetry = SymmetryClass::None;
  AntiunitaryOp t;  // unused for None
  std::uint64_t seed = 0;
  int trials = 0;
};

// Validated constructor; the default T is canonical fermionic / K (bosonic).
EnsembleSpec make_ensemble_spec(int dim, SymmetryClass symmetry, std::uint64_t seed,
                                int trials, std::optional<AntiunitaryOp> t = std::nullopt,
                                const ToleranceConfig& cfg = {});

// T-average (h0 + M conj(h0) M^dag)/2; Hermitian and T-invariant by
// construction, a projection onto the symmetric subspace.
Mat symmetrize(const Mat& h0, const AntiunitaryOp& t, const ToleranceConfig& cfg = {});

// Seeded Hermitian draw with the spec's symmetry imposed; deterministic in
// (seed, trial_index). Retries up to 8 fresh draws if symmetrization
// annihilates the matrix, then throws SpecError.
Mat sample_tri_hamiltonian(const EnsembleSpec& spec, int trial_index);

struct KramersPairing {
  int index = 0;        // eigenvector column
  Vec t_psi_coeffs;     // T psi expanded in the full eigenbasis
  double overlap = 0.0;     // |<psi, T psi>|
  double residual = 0.0;    // ||H T psi - lambda T psi||
};

struct KramersReport {
  SpectrumReport spectrum;
  std::vector<KramersPairing> pairings;
  bool all_even = false;
  double max_overlap = 0.0;
  double max_residual = 0.0;
  DegeneracyCertificate certificate;
};

// Eigenvector-level Kramers checks: requires T^2 = -I and [T, H] = 0
// (HypothesisError naming the failed premise otherwise).
KramersReport kramers_verify_pointwise(const Mat& h, const AntiunitaryOp& t,
                                       const ToleranceConfig& cfg = {});

// Algebraic check: same hypotheses plus nonzero H; the certificate must
// come out degenerate under them.
DegeneracyCertificate kramers_verify_algebraic(const Mat& h, const AntiunitaryOp& t,
                                               const ToleranceConfig& cfg = {});

struct EnsembleSummary {
  int trials = 0;
  int degenerate_count = 0;
  int nondegenerate_count = 0;
  double nondegenerate_fraction = 0.0;
  double degenerate_fraction = 0.0;
};

// Control experiment: bosonic (T^2 = +I) ensembles generically stay
// non-degenerate.
EnsembleSummary bosonic_control(const EnsembleSpec& spec, const ToleranceConfig& cfg = {});

// One real phase per eigenvalue cluster of a reference spectrum; the
// finite-dimensional form of a real function g of H.
struct DiagonalPhase {
  std::vector<double> phases;
};

// Builds U = V diag(e^{i g}) V^dag (g constant on clusters) and checks
// K_H U K_H^{-1} = U^dag. Holds for every real g.
bool phase_conjugation_check(const SpectrumReport& spec_report, const DiagonalPhase& g,
                             const ToleranceConfig& cfg = {});

// Cluster-diagonal unimodular unitary from phases, used by the check above
// and by the contrapositive-witness construction.
Mat cluster_diagonal_unitary(const SpectrumReport& spec_report, const DiagonalPhase& g);

}  // namespace klab
