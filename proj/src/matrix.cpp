#include "klab/matrix.hpp"

#include <cmath>
#include <cstdio>

#include "klab/eig.hpp"
#include "klab/error.hpp"

namespace klab::mat {

CMat identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMat zero(std::size_t r, std::size_t c) { return CMat(r, c); }

CMat mul(const CMat& A, const CMat& B) {
  if (A.cols != B.rows)
    throw domain_error("matrix product dimension mismatch: " +
                       std::to_string(A.cols) + " vs " +
                       std::to_string(B.rows));
  CMat C(A.rows, B.cols);
  kernels::active().matmul(A.rows, A.cols, B.cols, A.a.data(), B.a.data(),
                           C.a.data());
  return C;
}

namespace {

void check_same_shape(const CMat& A, const CMat& B, const char* op) {
  if (A.rows != B.rows || A.cols != B.cols)
    throw domain_error(std::string(op) + " needs equal shapes");
}

}  // namespace

CMat add(const CMat& A, const CMat& B) {
  check_same_shape(A, B, "add");
  CMat C = A;
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] += B.a[i];
  return C;
}

CMat sub(const CMat& A, const CMat& B) {
  check_same_shape(A, B, "sub");
  CMat C = A;
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
  return C;
}

CMat scale(const CMat& A, cd s) {
  CMat C = A;
  for (cd& v : C.a) v *= s;
  return C;
}

CMat adjoint(const CMat& A) {
  CMat C(A.cols, A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j)
      C.at(j, i) = std::conj(A.at(i, j));
  return C;
}

CMat kron(const CMat& A, const CMat& B) {
  CMat C(A.rows * B.rows, A.cols * B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) {
      cd a = A.at(i, j);
      if (a == cd{}) continue;
      for (std::size_t p = 0; p < B.rows; ++p)
        for (std::size_t q = 0; q < B.cols; ++q)
          C.at(i * B.rows + p, j * B.cols + q) = a * B.at(p, q);
    }
  return C;
}

cd trace(const CMat& A) {
  cd t = 0.0;
  for (std::size_t i = 0; i < std::min(A.rows, A.cols); ++i) t += A.at(i, i);
  return t;
}

double fro_norm_raw(const CMat& A) {
  return std::sqrt(kernels::active().sumsq(A.a.data(), A.a.size()));
}

double fro_norm(const CMat& A) {
  if (!A.square()) throw domain_error("fro_norm needs a square matrix");
  return std::sqrt(kernels::active().sumsq(A.a.data(), A.a.size()) /
                   static_cast<double>(A.rows));
}

double max_abs_diff(const CMat& A, const CMat& B) {
  check_same_shape(A, B, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < A.a.size(); ++i)
    m = std::max(m, std::abs(A.a[i] - B.a[i]));
  return m;
}

NormKind NormKind::parse(const std::string& text) {
  if (text == "frobenius") return frobenius();
  if (text == "operator") return op();
  if (text.rfind("schatten:", 0) == 0) {
    double p = 0.0;
    try {
      p = std::stod(text.substr(9));
    } catch (const std::exception&) {
      throw domain_error("bad schatten exponent in '" + text + "'");
    }
    if (!(p >= 1.0))
      throw domain_error("schatten norm needs p >= 1, got " + text.substr(9));
    return schatten(p);
  }
  throw domain_error(
      "unknown norm '" + text +
      "' (expected frobenius, operator, or schatten:<p>)");
}

std::string NormKind::name() const {
  switch (kind) {
    case Kind::frobenius:
      return "frobenius";
    case Kind::op:
      return "operator";
    case Kind::schatten: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "schatten:%g", p);
      return buf;
    }
  }
  return "?";
}

double matrix_norm(const CMat& A, const NormKind& kind) {
  if (!A.square()) throw domain_error("matrix_norm needs a square matrix");
  switch (kind.kind) {
    case NormKind::Kind::frobenius:
      return fro_norm(A);
    case NormKind::Kind::op: {
      auto sv = singular_values(A);
      return sv.empty() ? 0.0 : sv.front();
    }
    case NormKind::Kind::schatten: {
      auto sv = singular_values(A);
      double sum = 0.0;
      for (double s : sv) sum += std::pow(s, kind.p);
      return std::pow(sum / static_cast<double>(A.rows), 1.0 / kind.p);
    }
  }
  return 0.0;
}

bool is_isometry(const CMat& U, double tol) {
  CMat G = sub(mul(adjoint(U), U), identity(U.cols));
  auto eig = hermitian_eig(G);
  double m = 0.0;
  for (double v : eig.values) m = std::max(m, std::abs(v));
  return m <= tol;
}

}  // namespace klab::mat
