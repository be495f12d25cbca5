#pragma once

#include "klab/eig.hpp"
#include "klab/matrix.hpp"

namespace klab {

// Antiunitary operator T = M K: a unitary linear part followed by entrywise
// conjugation in the standard basis. Action: v -> m * conj(v).
struct AntiunitaryOp {
  Mat m;

  int dim() const { return static_cast<int>(m.rows()); }
};

// K itself: m = I.
AntiunitaryOp standard_conjugation(int dim);

Vec apply(const AntiunitaryOp& t, const Vec& v);

// Composition of two antiunitaries is linear: (M1 K)(M2 K) = M1 conj(M2).
Mat compose(const AntiunitaryOp& t1, const AntiunitaryOp& t2);

Mat square(const AntiunitaryOp& t);

struct InvolutionClass {
  bool is_involution = false;
  double phase = 0.0;  // 0 or pi when is_involution
};

// T^2 = e^{i theta} I test. Valid antiunitary involutions only admit
// theta in {0, pi}; the phase is snapped to those within 1e-6, anything
// else is NotInvolution.
InvolutionClass classify_involution(const AntiunitaryOp& t, const ToleranceConfig& cfg = {});

// K_H: the antiunitary conjugating coordinates in the eigenbasis V of a
// Hermitian H, m = V V^T. Satisfies K_H^2 = I and [K_H, H] = 0 for any
// eigenbasis choice, degenerate H included.
AntiunitaryOp conjugation_in_basis(const SpectrumReport& spec);

// T = U K_ref with U unitary; requires square(k_ref) = +I.
Mat decompose(const AntiunitaryOp& t, const AntiunitaryOp& k_ref,
              const ToleranceConfig& cfg = {});

// [T, H] = 0 test: || m conj(h) - h m || <= residual_tol * max(1, ||h||).
// Uses conj(h) = h^T for Hermitian h.
bool commutes_with(const AntiunitaryOp& t, const Mat& h, const ToleranceConfig& cfg = {});

// M conj(s) + s M = 0 test, the generator-reversal condition.
bool anticommutes_with(const AntiunitaryOp& t, const Mat& s, const ToleranceConfig& cfg = {});

}  // namespace klab
