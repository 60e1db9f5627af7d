#include "klab/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "klab/error.hpp"

namespace klab::mat {

namespace {

double offdiag_mass(const CMat& H) {
  double s = 0.0;
  for (std::size_t i = 0; i < H.rows; ++i)
    for (std::size_t j = 0; j < H.cols; ++j)
      if (i != j) s += std::norm(H.at(i, j));
  return std::sqrt(s);
}

}  // namespace

EigResult hermitian_eig(const CMat& A) {
  if (!A.square()) throw domain_error("hermitian_eig needs a square matrix");
  std::size_t d = A.rows;

  // Symmetrize once; callers pass matrices Hermitian up to rounding.
  CMat H(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      H.at(i, j) = 0.5 * (A.at(i, j) + std::conj(A.at(j, i)));

  CMat V = identity(d);
  double scale = fro_norm_raw(H);
  double stop = 1e-14 * std::max(scale, 1e-300);

  for (int sweep = 0; sweep < 30 && offdiag_mass(H) > stop; ++sweep) {
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        cd beta = H.at(p, q);
        double ab = std::abs(beta);
        if (ab <= stop / static_cast<double>(d)) continue;

        // Unitary G on coordinates (p,q): columns (wc, s) and (-ws, c)
        // with w = beta/|beta|, annihilating H_pq.
        cd w = beta / ab;
        double alpha = H.at(p, p).real();
        double gamma = H.at(q, q).real();
        double tau = (alpha - gamma) / (2.0 * ab);
        double sgn = tau < 0.0 ? -1.0 : 1.0;
        double t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        cd wc = w * c;
        cd ws = w * s;

        for (std::size_t r = 0; r < d; ++r) {  // H <- H G
          cd hp = H.at(r, p), hq = H.at(r, q);
          H.at(r, p) = hp * wc + hq * s;
          H.at(r, q) = -hp * ws + hq * c;
        }
        for (std::size_t r = 0; r < d; ++r) {  // H <- G* H
          cd hp = H.at(p, r), hq = H.at(q, r);
          H.at(p, r) = std::conj(wc) * hp + s * hq;
          H.at(q, r) = -std::conj(ws) * hp + c * hq;
        }
        H.at(p, q) = 0.0;
        H.at(q, p) = 0.0;
        for (std::size_t r = 0; r < d; ++r) {  // V <- V G
          cd vp = V.at(r, p), vq = V.at(r, q);
          V.at(r, p) = vp * wc + vq * s;
          V.at(r, q) = -vp * ws + vq * c;
        }
      }
    }
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return H.at(i, i).real() < H.at(j, j).real();
  });

  EigResult out;
  out.values.resize(d);
  out.vectors = CMat(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    out.values[k] = H.at(order[k], order[k]).real();
    for (std::size_t r = 0; r < d; ++r)
      out.vectors.at(r, k) = V.at(r, order[k]);
  }
  return out;
}

std::vector<double> singular_values(const CMat& A) {
  CMat H = mul(adjoint(A), A);
  auto eig = hermitian_eig(H);
  std::vector<double> sv(eig.values.size());
  for (std::size_t i = 0; i < sv.size(); ++i)
    sv[i] = std::sqrt(std::max(0.0, eig.values[eig.values.size() - 1 - i]));
  return sv;
}

}  // namespace klab::mat
