#pragma once

#include <cstdint>
#include <random>

#include "klab/matrix.hpp"

namespace klab {

// Deterministic, platform-portable random stream. mt19937_64 has a
// standard-mandated output sequence; uniforms are built from explicit
// 53-bit conversions and normals from Box-Muller, so sampled matrices are
// byte-identical everywhere. One stream per (seed, stream_id) pair.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t stream_id)
      : eng_(mix(seed ^ mix(stream_id + 0x9e3779b97f4a7c15ULL))) {}

  double uniform() {  // in [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * M_PI * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

  cplx cnormal() { return {normal(), normal()}; }

  // (G + G^dag)/2 with iid standard complex Gaussian entries (GUE-type).
  Mat hermitian_gaussian(int dim) {
    Mat g(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) g(i, j) = cnormal();
    return 0.5 * (g + g.adjoint());
  }

  Mat real_symmetric_gaussian(int dim) {
    Mat g(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) g(i, j) = normal();
    return 0.5 * (g + g.transpose());
  }

  // Haar-like unitary: QR of a complex Gaussian with the R diagonal phase
  // absorbed, deterministic for a given stream.
  Mat unitary(int dim) {
    Mat g(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) g(i, j) = cnormal();
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
      const cplx d = r(j, j);
      const double ad = std::abs(d);
      q.col(j) *= (ad > 0.0) ? d / ad : cplx(1.0, 0.0);
    }
    return q;
  }

  Vec cvector(int dim) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = cnormal();
    return v;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {  // splitmix64 finalizer
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace klab
