#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "klab/eig.hpp"
#include "klab/error.hpp"
#include "klab/matrix.hpp"
#include "klab/rng.hpp"

using namespace klab;
using namespace klab::mat;

namespace {

CMat random_mat(std::size_t r, std::size_t c, std::uint64_t seed) {
  SplitMix64 rng(seed);
  CMat m(r, c);
  for (cd& x : m.a) x = cd(rng.gaussian(), rng.gaussian());
  return m;
}

CMat random_hermitian(std::size_t d, std::uint64_t seed) {
  CMat m = random_mat(d, d, seed);
  CMat h = scale(add(m, adjoint(m)), 0.5);
  return h;
}

// Householder-ish random unitary: exp of a skew-Hermitian via eig.
CMat random_unitary(std::size_t d, std::uint64_t seed) {
  CMat h = random_hermitian(d, seed);
  EigResult e = hermitian_eig(h);
  CMat ph = zero(d, d);
  for (std::size_t i = 0; i < d; ++i)
    ph.at(i, i) = std::polar(1.0, e.values[i]);
  return mul(mul(e.vectors, ph), adjoint(e.vectors));
}

}  // namespace

TEST_CASE("basic algebra") {
  CMat a = random_mat(3, 4, 1);
  CMat b = random_mat(4, 2, 2);
  CMat ab = mul(a, b);
  CHECK(ab.rows == 3);
  CHECK(ab.cols == 2);
  CHECK(max_abs_diff(adjoint(adjoint(a)), a) == 0.0);
  CHECK(max_abs_diff(mul(identity(3), a), a) < 1e-14);
  CHECK(max_abs_diff(add(a, scale(a, -1.0)), zero(3, 4)) == 0.0);
  CHECK_THROWS_AS(mul(a, a), domain_error);
  CHECK_THROWS_AS(add(a, b), domain_error);

  // (AB)* = B*A*
  CHECK(max_abs_diff(adjoint(ab), mul(adjoint(b), adjoint(a))) < 1e-12);

  cd tr = trace(mul(a, adjoint(a)));
  CHECK(tr.imag() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(tr.real() > 0);
}

TEST_CASE("kron layout matches blockwise definition") {
  CMat a = random_mat(2, 3, 5);
  CMat b = random_mat(3, 2, 6);
  CMat k = kron(a, b);
  REQUIRE(k.rows == 6);
  REQUIRE(k.cols == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 2; ++q)
          CHECK(std::abs(k.at(i * 3 + p, j * 2 + q) - a.at(i, j) * b.at(p, q)) <
                1e-14);
  // Mixed-product property on square factors.
  CMat u = random_mat(2, 2, 7), v = random_mat(2, 2, 8);
  CMat w = random_mat(2, 2, 9), x = random_mat(2, 2, 10);
  CHECK(max_abs_diff(mul(kron(u, w), kron(v, x)), kron(mul(u, v), mul(w, x))) <
        1e-12);
}

TEST_CASE("norm kinds parse and print") {
  CHECK(NormKind::parse("frobenius").kind == NormKind::Kind::frobenius);
  CHECK(NormKind::parse("operator").kind == NormKind::Kind::op);
  NormKind s = NormKind::parse("schatten:4");
  CHECK(s.kind == NormKind::Kind::schatten);
  CHECK(s.p == 4.0);
  CHECK(NormKind::parse("schatten:2.5").p == 2.5);
  CHECK(s.name() == "schatten:4");
  CHECK(NormKind::frobenius().name() == "frobenius");
  CHECK(NormKind::op().name() == "operator");
  CHECK_THROWS_AS(NormKind::parse("euclid"), domain_error);
  CHECK_THROWS_AS(NormKind::parse("schatten:0.5"), domain_error);
  CHECK_THROWS_AS(NormKind::parse("schatten:"), domain_error);
}

TEST_CASE("norms on known matrices") {
  CMat d = zero(2, 2);
  d.at(0, 0) = 3.0;
  d.at(1, 1) = cd(0.0, -4.0);
  // dimension-normalized frobenius: sqrt((9+16)/2)
  CHECK(fro_norm(d) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-12));
  CHECK(fro_norm_raw(d) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(matrix_norm(d, NormKind::op()) == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(matrix_norm(d, NormKind::schatten(2)) ==
        doctest::Approx(std::sqrt(12.5)).epsilon(1e-10));
  // schatten-1 of diag(3, 4i): (3+4)/2
  CHECK(matrix_norm(d, NormKind::schatten(1)) ==
        doctest::Approx(3.5).epsilon(1e-10));
  CHECK(matrix_norm(identity(5), NormKind::frobenius()) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("unitary invariance of the normalized frobenius norm") {
  CMat a = random_mat(6, 6, 21);
  CMat u = random_unitary(6, 22);
  CHECK(is_isometry(u, 1e-9));
  CHECK(fro_norm(mul(u, a)) == doctest::Approx(fro_norm(a)).epsilon(1e-10));
  CHECK(fro_norm(mul(a, u)) == doctest::Approx(fro_norm(a)).epsilon(1e-10));
}

TEST_CASE("hermitian eigendecomposition reconstructs the input") {
  for (std::size_t d : {1u, 2u, 3u, 8u, 16u}) {
    CMat h = random_hermitian(d, 100 + d);
    EigResult e = hermitian_eig(h);
    REQUIRE(e.values.size() == d);
    for (std::size_t i = 1; i < d; ++i) CHECK(e.values[i - 1] <= e.values[i]);
    CHECK(is_isometry(e.vectors, 1e-10));
    CMat lam = zero(d, d);
    for (std::size_t i = 0; i < d; ++i) lam.at(i, i) = e.values[i];
    CHECK(max_abs_diff(mul(mul(e.vectors, lam), adjoint(e.vectors)), h) <
          1e-10);
  }
}

TEST_CASE("eigenvalues of a hand-built spectrum are recovered") {
  std::vector<double> spec = {-2.0, -0.5, 0.0, 1.0, 3.25};
  CMat u = random_unitary(5, 77);
  CMat lam = zero(5, 5);
  for (std::size_t i = 0; i < 5; ++i) lam.at(i, i) = spec[i];
  EigResult e = hermitian_eig(mul(mul(u, lam), adjoint(u)));
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(e.values[i] == doctest::Approx(spec[i]).epsilon(1e-9));
}

TEST_CASE("singular values") {
  CMat a = random_mat(5, 5, 31);
  auto sv = singular_values(a);
  REQUIRE(sv.size() == 5);
  for (std::size_t i = 1; i < sv.size(); ++i) CHECK(sv[i - 1] >= sv[i]);
  // Check against sqrt(eig(A*A)).
  EigResult e = hermitian_eig(mul(adjoint(a), a));
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(sv[i] ==
          doctest::Approx(std::sqrt(std::max(0.0, e.values[4 - i])))
              .epsilon(1e-9));
  // Unitary: all singular values 1.
  for (double s : singular_values(random_unitary(4, 32)))
    CHECK(s == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("isometry detection on rectangular frames") {
  CMat u = random_unitary(6, 41);
  CMat frame(6, 3);  // first three columns of a unitary
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 3; ++j) frame.at(i, j) = u.at(i, j);
  CHECK(is_isometry(frame, 1e-10));
  frame.at(0, 0) += 0.1;
  CHECK_FALSE(is_isometry(frame, 1e-6));
}

TEST_CASE("schatten norms interpolate toward the operator norm") {
  CMat a = random_hermitian(8, 55);
  double op = matrix_norm(a, NormKind::op());
  double s64 = matrix_norm(a, NormKind::schatten(64));
  // d^(1/64) < 1.04 at d = 8, so the two agree within 5%.
  CHECK(s64 <= op * 1.0 + 1e-9);
  CHECK(s64 >= op * std::pow(8.0, -1.0 / 64.0) - 1e-9);
}
