#pragma once

#include "klab/matrix.hpp"

namespace klab::kernels {

// vec() is column-major throughout: vec(AX - XA) = (I (x) A - A^T (x) I) vec(X).
// Serial variants are the reference implementations the OpenMP ones are
// tested against; both produce bit-identical output.

Mat commutator_superop_serial(const Mat& a);
Mat commutator_superop(const Mat& a);

// vec(s M + M conj(s)) = (I (x) s + conj(s)^T (x) I) vec(M) — the
// anticommutation ("anti-Sylvester") block used by the time-reversal
// intertwiner solver.
Mat anti_intertwiner_superop_serial(const Mat& s);
Mat anti_intertwiner_superop(const Mat& s);

}  // namespace klab::kernels
