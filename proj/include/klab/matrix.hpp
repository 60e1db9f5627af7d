#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "klab/kernels.hpp"

namespace klab::mat {

using cd = std::complex<double>;

// Dense row-major complex matrix. Square almost everywhere; rectangular
// only for isometries (m x d with m >= d).
struct CMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cd> a;

  CMat() = default;
  CMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  cd& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const cd& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool square() const { return rows == cols; }
  std::size_t dim() const { return rows; }
};

CMat identity(std::size_t n);
CMat zero(std::size_t r, std::size_t c);

CMat mul(const CMat& A, const CMat& B);
CMat add(const CMat& A, const CMat& B);
CMat sub(const CMat& A, const CMat& B);
CMat scale(const CMat& A, cd s);
CMat adjoint(const CMat& A);
CMat kron(const CMat& A, const CMat& B);
cd trace(const CMat& A);

// Frobenius norm normalized by dimension: sqrt(tr(A*A)/d). Square only.
double fro_norm(const CMat& A);
// Unnormalized Frobenius norm (any shape).
double fro_norm_raw(const CMat& A);

double max_abs_diff(const CMat& A, const CMat& B);

struct NormKind {
  enum class Kind { frobenius, op, schatten } kind = Kind::frobenius;
  double p = 2.0;  // schatten only; p >= 1

  static NormKind frobenius() { return {Kind::frobenius, 2.0}; }
  static NormKind op() { return {Kind::op, 0.0}; }
  static NormKind schatten(double p) { return {Kind::schatten, p}; }
  // "frobenius" | "operator" | "schatten:<p>"
  static NormKind parse(const std::string& text);
  std::string name() const;
};

// frobenius: sqrt(tr(A*A)/d); operator: largest singular value;
// schatten(p): (tr((A*A)^{p/2})/d)^{1/p}. Square matrices only.
double matrix_norm(const CMat& A, const NormKind& kind);

// ||U*U - 1|| <= tol in operator norm (U may be rectangular m x d).
bool is_isometry(const CMat& U, double tol);

}  // namespace klab::mat
