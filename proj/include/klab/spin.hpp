#pragma once

#include <array>
#include <span>
#include <vector>

#include "klab/antilinear.hpp"
#include "klab/matrix.hpp"

namespace klab {

// The three Pauli matrices with exact entries.
std::array<Mat, 3> pauli();

// Slot-local tensor generators: for each particle i and axis k, sigma_k on
// slot i and identity elsewhere. Order is slot-major, axis-minor.
struct SpinRep {
  int n_particles = 0;
  int dim = 0;
  std::vector<Mat> generators;

  const Mat& generator(int particle, int axis) const {
    return generators[static_cast<size_t>(3 * particle + axis)];
  }
};

SpinRep spin_rep(int n_particles);

enum class InvolutionSquare { Plus, Minus, Mixed, Empty };

const char* to_string(InvolutionSquare s);

// Solutions T = M K of the generator-reversal condition
// M conj(sigma) = -sigma M for every generator. basis spans the solution
// space; when it is one-dimensional, M is scaled to unitary with the first
// nonzero entry positive-real.
struct IntertwinerSolution {
  std::vector<Mat> basis;
  int solution_dim = 0;
  InvolutionSquare involution_square = InvolutionSquare::Empty;
};

IntertwinerSolution solve_time_reversal(const SpinRep& rep, const ToleranceConfig& cfg = {},
                                        int particle_cap = 4);

// Schur test: irreducible iff the joint commutant is scalars.
bool irreducibility_check(std::span<const Mat> matrices, const ToleranceConfig& cfg = {});

// Given two antiunitaries that both reverse every generator, their
// composition is scalar -k I; returns k.
cplx schur_scalar_extract(const AntiunitaryOp& t_tilde, const AntiunitaryOp& t,
                          const SpinRep& rep, const ToleranceConfig& cfg = {});

// For T anticommuting with one slot's generators, T commutes with the slot
// rotations R = exp(i theta . sigma): M conj(R) = R M.
bool rotation_commutation_check(const SpinRep& rep, const AntiunitaryOp& t,
                                const std::array<double, 3>& angles,
                                const ToleranceConfig& cfg = {});

}  // namespace klab
