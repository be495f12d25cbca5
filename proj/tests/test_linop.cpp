#include <doctest.h>

#include "klab/eig.hpp"
#include "klab/matrix.hpp"
#include "test_util.hpp"

using namespace klab;
using namespace klab::testutil;

namespace {

// Independent spectral oracle for n <= 4: characteristic polynomial via
// Faddeev-LeVerrier, roots via Durand-Kerner, distinct-root count by
// absolute-gap clustering.
std::vector<cplx> char_poly_coeffs(const Mat& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<cplx> c(static_cast<size_t>(n) + 1);
  c[static_cast<size_t>(n)] = 1.0;
  Mat m = Mat::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m + c[static_cast<size_t>(n - k + 1)] * Mat::Identity(n, n);
    c[static_cast<size_t>(n - k)] = -(a * m).trace() / double(k);
  }
  return c;  // c[0] + c[1] x + ... + c[n] x^n
}

std::vector<cplx> poly_roots(const std::vector<cplx>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<cplx> r(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] = std::pow(cplx(0.4, 0.9), i);
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0.0;
    for (int i = 0; i < n; ++i) {
      cplx p = c[static_cast<size_t>(n)];
      for (int k = n - 1; k >= 0; --k) p = p * r[static_cast<size_t>(i)] + c[static_cast<size_t>(k)];
      cplx denom = c[static_cast<size_t>(n)];
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= r[static_cast<size_t>(i)] - r[static_cast<size_t>(j)];
      const cplx step = p / denom;
      r[static_cast<size_t>(i)] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  return r;
}

int distinct_real_roots(const Mat& a, double gap) {
  auto roots = poly_roots(char_poly_coeffs(a));
  std::vector<double> vals;
  for (const cplx& z : roots) vals.push_back(z.real());
  std::sort(vals.begin(), vals.end());
  int count = 1;
  for (size_t i = 1; i < vals.size(); ++i)
    if (vals[i] - vals[i - 1] > gap) ++count;
  return count;
}

}  // namespace

TEST_CASE("hs_inner on small fixtures") {
  const Mat i2 = Mat::Identity(2, 2);
  CHECK(std::abs(hs_inner(i2, i2) - cplx(2.0)) < 1e-15);
  CHECK(std::abs(hs_inner(sigma(1), sigma(2))) < 1e-15);
  CHECK(std::abs(hs_inner(sigma(2), sigma(2)) - cplx(2.0)) < 1e-15);
}

TEST_CASE("hs_inner conjugate symmetry and positivity") {
  TrialRng rng(7, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const Mat a = rng.hermitian_gaussian(4) + cplx(0, 1) * rng.hermitian_gaussian(4);
    const Mat b = rng.hermitian_gaussian(4);
    CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-10);
    const double self = hs_inner(a, a).real();
    CHECK(self >= a.squaredNorm() - 1e-10);
    CHECK(std::abs(hs_inner(a, a).imag()) < 1e-10);
  }
  CHECK(hs_inner(Mat::Zero(3, 3), Mat::Zero(3, 3)) == cplx(0.0));
}

TEST_CASE("hs_inner dimension mismatch") {
  CHECK_THROWS_AS(hs_inner(Mat::Identity(2, 2), Mat::Identity(3, 3)), DimensionError);
}

TEST_CASE("validate predicates") {
  CHECK(validate(sigma(2), MatrixKind::Hermitian));
  CHECK(validate(sigma(2), MatrixKind::Unitary));
  CHECK_FALSE(validate(dmat({1, 2}), MatrixKind::Unitary));
  CHECK(validate(dmat({1, 2}), MatrixKind::Hermitian));
  Mat a(2, 2);
  a << cplx(0, 1), 0, 0, 0;
  CHECK_FALSE(validate(a, MatrixKind::Hermitian));
}

TEST_CASE("hermitian_eig on diagonal fixtures") {
  auto rep = hermitian_eig(dmat({1, 2, 3}));
  REQUIRE(rep.clusters.size() == 3);
  CHECK(rep.multiplicities() == std::vector<int>{1, 1, 1});
  CHECK(rep.eigenvalues(0) == doctest::Approx(1.0));

  auto rep2 = hermitian_eig(dmat({5, 5, 7}));
  REQUIRE(rep2.clusters.size() == 2);
  CHECK(rep2.clusters[0].value == doctest::Approx(5.0));
  CHECK(rep2.clusters[0].multiplicity == 2);
  CHECK(rep2.clusters[1].multiplicity == 1);
}

TEST_CASE("hermitian_eig clusters near-equal eigenvalues") {
  Mat a = dmat({1.0, 1.0, 2.0});
  a(1, 1) += 1e-12;
  auto rep = hermitian_eig(a);
  CHECK(rep.clusters.size() == 2);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  Mat a(2, 2);
  a << 0, 1, 0, 0;
  CHECK_THROWS_AS(hermitian_eig(a), NotHermitianError);
}

TEST_CASE("hermitian_eig random matrices have simple spectra") {
  TrialRng rng(11, 3);
  const Mat a = rng.hermitian_gaussian(6);
  auto rep = hermitian_eig(a);
  CHECK(rep.clusters.size() == 6);
  for (const auto& c : rep.clusters) CHECK(c.multiplicity == 1);
}

TEST_CASE("hermitian_eig cluster count matches characteristic-polynomial oracle") {
  ToleranceConfig cfg;
  for (std::uint64_t s = 0; s < 8; ++s) {
    TrialRng rng(100 + s, 0);
    const int n = 2 + static_cast<int>(s % 3);
    const Mat a = rng.hermitian_gaussian(n);
    auto rep = hermitian_eig(a, cfg);
    CHECK(static_cast<int>(rep.clusters.size()) ==
          distinct_real_roots(a, cfg.cluster_tol * std::max(1.0, frob(a))));
  }
  // planted degenerate cases
  for (std::uint64_t s = 0; s < 8; ++s) {
    const Mat a = planted_hermitian({2, 1}, 200 + s);
    auto rep = hermitian_eig(a);
    CHECK(static_cast<int>(rep.clusters.size()) == 2);
    CHECK(distinct_real_roots(a, 1e-6) == 2);
  }
}

TEST_CASE("spectrum report invariants") {
  ToleranceConfig cfg;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Mat a = planted_hermitian({2, 2, 1}, 300 + s);
    auto rep = hermitian_eig(a, cfg);
    const int n = rep.dim();

    int total = 0;
    for (const auto& c : rep.clusters) total += c.multiplicity;
    CHECK(total == n);

    for (size_t c = 1; c < rep.clusters.size(); ++c)
      CHECK(rep.clusters[c].value - rep.clusters[c - 1].value >
            cfg.cluster_tol * std::max(1.0, frob(a)));

    CHECK((rep.basis.adjoint() * rep.basis - Mat::Identity(n, n)).norm() <=
          10 * cfg.residual_tol);

    const Mat lambda = rep.eigenvalues.cast<cplx>().asDiagonal();
    CHECK((a * rep.basis - rep.basis * lambda).norm() <=
          10 * cfg.residual_tol * std::max(1.0, frob(a)));
    CHECK((a - rep.basis * lambda * rep.basis.adjoint()).norm() <=
          10 * cfg.residual_tol * std::max(1.0, frob(a)));

    for (const auto& c : rep.clusters)
      for (int j = 0; j < c.multiplicity; ++j) {
        const Vec v = rep.basis.col(c.first + j);
        CHECK((a * v - c.value * v).norm() <= 1e-8 * std::max(1.0, frob(a)));
      }
  }
}
