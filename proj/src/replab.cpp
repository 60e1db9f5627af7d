#include "klab/replab.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "klab/eig.hpp"
#include "klab/error.hpp"
#include "klab/rng.hpp"

namespace klab::rep {

using clifford::CNormalForm;
using mat::adjoint;
using mat::CMat;
using mat::cd;
using mat::identity;
using mat::mul;
using mat::sub;
using words::Gen;
using words::Word;

namespace {

CMat mat_pow(const CMat& M, const Int& e) {
  if (e < 0) return mat_pow(adjoint(M), Int(-e));
  CMat acc = identity(M.rows);
  CMat base = M;
  Int k = e;
  while (k > 0) {
    if (boost::multiprecision::bit_test(k, 0)) acc = mul(acc, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return acc;
}

const CMat& image_of(const UnitaryMap& phi, const words::Sym& sym) {
  switch (sym.gen) {
    case Gen::J:
      return phi.J;
    case Gen::T:
      if (!phi.has_t()) throw domain_error("map has no image for t");
      return phi.t;
    case Gen::Z:
      if (!phi.has_z()) throw domain_error("map has no image for z");
      return phi.z;
    case Gen::X: {
      std::size_t slot;
      if (phi.group.ctx == words::Ctx::Cn) {
        if (sym.index < 1 || sym.index > phi.group.n)
          throw domain_error("map has no image for x" + sym.index.str());
        slot = static_cast<std::size_t>(sym.index.convert_to<int>() - 1);
      } else {
        if (sym.index != 0)
          throw domain_error("map has no image for x" + sym.index.str());
        slot = 0;
      }
      if (slot >= phi.xs.size())
        throw domain_error("map has no image for x" + sym.index.str());
      return phi.xs[slot];
    }
  }
  throw domain_error("unreachable generator kind");
}

}  // namespace

CMat evaluate(const UnitaryMap& phi, const Word& w) {
  CMat acc = identity(phi.d);
  for (const auto& run : w.runs())
    acc = mul(acc, mat_pow(image_of(phi, run.sym), run.exp));
  return acc;
}

namespace {

CMat pauli_x() {
  CMat m(2, 2);
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  return m;
}

CMat pauli_y() {
  CMat m(2, 2);
  m.at(0, 1) = cd(0.0, -1.0);
  m.at(1, 0) = cd(0.0, 1.0);
  return m;
}

CMat pauli_z() {
  CMat m(2, 2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = -1.0;
  return m;
}

// Site-j factor of the m-site chain: Z on the first j-1 sites, `mid` at
// site j, identity beyond.
CMat chain(int m, int j, const CMat& mid) {
  CMat acc(1, 1);
  acc.at(0, 0) = 1.0;
  for (int site = 1; site <= m; ++site) {
    if (site < j)
      acc = mat::kron(acc, pauli_z());
    else if (site == j)
      acc = mat::kron(acc, mid);
    else
      acc = mat::kron(acc, identity(2));
  }
  return acc;
}

}  // namespace

UnitaryMap exact_clifford_rep(int n) {
  if (n < 1 || n > 14)
    throw domain_error("exact_clifford_rep requires 1 <= n <= 14");
  int m = n / 2;
  std::size_t d = std::size_t{1} << m;

  UnitaryMap phi;
  phi.group = words::cn_alphabet(n);
  phi.d = d;
  phi.J = mat::scale(identity(d), -1.0);
  phi.xs.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    if (i == 2 * m + 1) {
      phi.xs.push_back(chain(m, m + 1, identity(1)));  // full diagonal chain
    } else if (i % 2 == 1) {
      phi.xs.push_back(chain(m, (i + 1) / 2, pauli_x()));
    } else {
      phi.xs.push_back(chain(m, i / 2, pauli_y()));
    }
  }
  return phi;
}

UnitaryMap faithful_clifford_rep(int n) {
  if (n < 1 || n > 13)
    throw domain_error("faithful_clifford_rep requires 1 <= n <= 13");
  if (n % 2 == 0) return exact_clifford_rep(n);
  UnitaryMap big = exact_clifford_rep(n + 1);
  big.group = words::cn_alphabet(n);
  big.xs.pop_back();
  return big;
}

std::vector<Word> c_relators(int n) {
  if (n < 1) throw domain_error("c_relators requires n >= 1");
  const auto A = words::cn_alphabet(n);
  std::vector<Word> rel;

  Word jj(A);
  jj.push(words::sym_j(), 2);
  rel.push_back(jj);

  for (int i = 1; i <= n; ++i) {
    Word xx(A);
    xx.push(words::sym_x(i), 2);
    rel.push_back(xx);

    Word xj(A);  // [x_i, J]
    xj.push(words::sym_x(i), 1);
    xj.push(words::sym_j(), 1);
    xj.push(words::sym_x(i), -1);
    xj.push(words::sym_j(), -1);
    rel.push_back(xj);
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Word w(A);  // [x_i, x_j] J^-1
      w.push(words::sym_x(i), 1);
      w.push(words::sym_x(j), 1);
      w.push(words::sym_x(i), -1);
      w.push(words::sym_x(j), -1);
      w.push(words::sym_j(), -1);
      rel.push_back(std::move(w));
    }
  }
  return rel;
}

double relation_defect(const UnitaryMap& phi, const NormKind& kind) {
  if (phi.group.ctx != words::Ctx::Cn)
    throw domain_error("relation_defect needs a C_n map");
  CMat one = identity(phi.d);
  double worst = 0.0;
  for (const Word& r : c_relators(phi.group.n))
    worst = std::max(worst, mat::matrix_norm(sub(evaluate(phi, r), one), kind));
  return worst;
}

namespace {

CMat seeded_hermitian(std::size_t d, SplitMix64& rng) {
  CMat H(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    H.at(i, i) = rng.gaussian();
    for (std::size_t j = i + 1; j < d; ++j) {
      cd v(rng.gaussian() * M_SQRT1_2, rng.gaussian() * M_SQRT1_2);
      H.at(i, j) = v;
      H.at(j, i) = std::conj(v);
    }
  }
  double norm = mat::fro_norm(H);
  if (norm > 0.0) H = mat::scale(H, 1.0 / norm);
  return H;
}

// exp(i scale H) for Hermitian H.
CMat unitary_exp(const CMat& H, double scale) {
  auto eig = mat::hermitian_eig(H);
  std::size_t d = H.rows;
  CMat E(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    cd phase = std::exp(cd(0.0, scale * eig.values[k]));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        E.at(i, j) += eig.vectors.at(i, k) * phase *
                      std::conj(eig.vectors.at(j, k));
  }
  return E;
}

}  // namespace

UnitaryMap perturb(const UnitaryMap& phi, double magnitude,
                   std::uint64_t seed) {
  if (magnitude < 0.0) throw domain_error("perturb needs magnitude >= 0");
  if (magnitude == 0.0) return phi;
  SplitMix64 rng(seed);
  UnitaryMap out = phi;
  auto kick = [&](CMat& U) {
    U = mul(unitary_exp(seeded_hermitian(U.rows, rng), magnitude), U);
  };
  kick(out.J);
  for (CMat& x : out.xs) kick(x);
  if (out.has_t()) kick(out.t);
  if (out.has_z()) kick(out.z);
  return out;
}

const CMat& HomTable::at(const CNormalForm& g) const {
  return e[clifford::element_index(g, n)];
}

HomTable lift_to_table(const UnitaryMap& phi) {
  if (phi.group.ctx != words::Ctx::Cn)
    throw domain_error("lift_to_table needs a C_n map");
  int n = phi.group.n;
  HomTable t;
  t.n = n;
  t.d = phi.d;
  auto elements = clifford::enumerate_group(n);
  t.e.reserve(elements.size());
  for (const CNormalForm& g : elements) {
    CMat m = identity(phi.d);
    if (g.b) m = phi.J;
    for (const Int& i : g.indices)
      m = mul(m, phi.xs[static_cast<std::size_t>(i.convert_to<int>() - 1)]);
    t.e.push_back(std::move(m));
  }
  return t;
}

double hom_defect(const HomTable& psi, const NormKind& kind) {
  if (psi.n > 6)
    throw domain_error("hom_defect is quadratic in the group order; n <= 6");
  auto elements = clifford::enumerate_group(psi.n);
  double worst = 0.0;
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      auto ab = clifford::c_multiply(elements[a], elements[b]).first;
      CMat lhs = psi.e[clifford::element_index(ab, psi.n)];
      CMat rhs = mul(psi.e[a], psi.e[b]);
      worst = std::max(worst, mat::matrix_norm(sub(lhs, rhs), kind));
    }
  }
  return worst;
}

double j_defect(const HomTable& psi, const NormKind& kind) {
  CNormalForm j;
  j.b = 1;
  return mat::matrix_norm(
      sub(psi.at(j), identity(psi.d)), kind);
}

namespace {

// Modified Gram-Schmidt on the columns, in place; U is m x d with m >= d.
void orthonormalize_columns(CMat& U) {
  std::size_t m = U.rows, d = U.cols;
  for (std::size_t j = 0; j < d; ++j) {
    std::size_t fallback = 0;
    while (true) {
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < j; ++i) {
          cd dot = 0.0;
          for (std::size_t r = 0; r < m; ++r)
            dot += std::conj(U.at(r, i)) * U.at(r, j);
          for (std::size_t r = 0; r < m; ++r) U.at(r, j) -= dot * U.at(r, i);
        }
      }
      double norm = 0.0;
      for (std::size_t r = 0; r < m; ++r) norm += std::norm(U.at(r, j));
      norm = std::sqrt(norm);
      if (norm >= 1e-12) {
        for (std::size_t r = 0; r < m; ++r) U.at(r, j) /= norm;
        break;
      }
      // Degenerate column: try basis vectors in turn; with j < d <= m
      // columns spanned so far, one of them must survive projection.
      if (fallback >= m)
        throw domain_error("orthonormalization lost a column");
      for (std::size_t r = 0; r < m; ++r)
        U.at(r, j) = (r == fallback) ? 1.0 : 0.0;
      ++fallback;
    }
  }
}

// Isometry factor of the polar decomposition of M (m x d, m >= d).
CMat polar_isometry(const CMat& M) {
  CMat G = mul(adjoint(M), M);
  auto eig = mat::hermitian_eig(G);
  std::size_t d = M.cols;
  double lmax = eig.values.empty() ? 0.0 : eig.values.back();
  CMat P(d, d);  // G^{-1/2}
  for (std::size_t k = 0; k < d; ++k) {
    double lambda = std::max(eig.values[k], 1e-14 * std::max(lmax, 1.0));
    double inv = 1.0 / std::sqrt(lambda);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        P.at(i, j) += eig.vectors.at(i, k) * inv *
                      std::conj(eig.vectors.at(j, k));
  }
  CMat U = mul(M, P);
  orthonormalize_columns(U);
  return U;
}

struct Candidate {
  HomTable gamma;
  std::size_t m;
};

// Direct sum of `copies` irrep blocks and `chars` trivial characters.
Candidate make_candidate(const HomTable& irrep, std::size_t copies,
                         std::size_t chars) {
  std::size_t q = irrep.d;
  Candidate c;
  c.m = copies * q + chars;
  c.gamma.n = irrep.n;
  c.gamma.d = c.m;
  c.gamma.e.reserve(irrep.e.size());
  for (const CMat& block : irrep.e) {
    CMat g(c.m, c.m);
    for (std::size_t k = 0; k < copies; ++k)
      for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
          g.at(k * q + i, k * q + j) = block.at(i, j);
    for (std::size_t k = copies * q; k < c.m; ++k) g.at(k, k) = 1.0;
    c.gamma.e.push_back(std::move(g));
  }
  return c;
}

double fit_distance(const HomTable& psi, const HomTable& gamma,
                    const CMat& U) {
  double worst = 0.0;
  CMat Ustar = adjoint(U);
  for (std::size_t g = 0; g < psi.e.size(); ++g) {
    CMat compressed = mul(Ustar, mul(gamma.e[g], U));
    worst = std::max(worst, mat::fro_norm(sub(psi.e[g], compressed)));
  }
  return worst;
}

}  // namespace

FitResult fit_exact_rep(const HomTable& psi, double tolerance) {
  double eps = hom_defect(psi, NormKind::frobenius());
  if (eps >= 1.0 / 16.0)
    throw domain_error("fit_exact_rep needs defect < 1/16, measured " +
                       std::to_string(eps));

  std::size_t d = psi.d;
  auto m_max = static_cast<std::size_t>(
      std::ceil(static_cast<double>(d) / (1.0 - 4.0 * eps * eps)));
  HomTable irrep = lift_to_table(exact_clifford_rep(psi.n));
  std::size_t q = irrep.d;
  std::size_t N = psi.e.size();

  FitResult best;
  best.epsilon = eps;
  bool have_best = false;

  for (std::size_t copies = 0; copies * q <= m_max; ++copies) {
    for (std::size_t m = std::max(d, copies * q); m <= m_max; ++m) {
      Candidate cand = make_candidate(irrep, copies, m - copies * q);

      // Initial U: top eigenvector of the Hermitian part of the averaging
      // operator T = (1/|G|) sum_g gamma(g) (x) conj(psi(g)), reshaped.
      CMat T(m * d, m * d);
      for (std::size_t g = 0; g < N; ++g) {
        CMat psig_conj = psi.e[g];
        for (cd& v : psig_conj.a) v = std::conj(v);
        T = mat::add(T, mat::kron(cand.gamma.e[g], psig_conj));
      }
      T = mat::scale(T, 1.0 / static_cast<double>(N));
      auto eig = mat::hermitian_eig(
          mat::scale(mat::add(T, adjoint(T)), 0.5));
      CMat U(m, d);
      std::size_t topcol = m * d - 1;
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c2 = 0; c2 < d; ++c2)
          U.at(r, c2) = eig.vectors.at(r * d + c2, topcol);
      U = polar_isometry(U);

      // Alternating Procrustes: U <- polar(sum_g gamma(g) U psi(g)*).
      double stop = std::max(tolerance * 1e-2, 1e-13);
      int iters = 0;
      double prev = 1e300;
      for (; iters < 25; ++iters) {
        CMat M(m, d);
        for (std::size_t g = 0; g < N; ++g)
          M = mat::add(M, mul(cand.gamma.e[g], mul(U, adjoint(psi.e[g]))));
        U = polar_isometry(M);
        double dist = fit_distance(psi, cand.gamma, U);
        if (prev - dist < stop) {
          prev = dist;
          break;
        }
        prev = dist;
      }
      double dist = fit_distance(psi, cand.gamma, U);

      if (!have_best || dist < best.distance) {
        have_best = true;
        best.gamma = std::move(cand.gamma);
        best.U = std::move(U);
        best.m = m;
        best.distance = dist;
        best.iterations = iters;
      }
    }
  }
  if (!have_best) throw domain_error("fit window is empty");
  return best;
}

bool compression_inequality_check(const CMat& A, const CMat& U) {
  if (!mat::is_isometry(U, 1e-9))
    throw domain_error("compression_inequality_check needs an isometry");
  std::size_t m = U.rows, d = U.cols;
  if (A.rows != m || A.cols != m)
    throw domain_error("A must be m x m for an m x d isometry");
  double lhs = mat::fro_norm(mul(adjoint(U), mul(A, U)));
  double rhs = std::sqrt(static_cast<double>(m) / static_cast<double>(d)) *
               mat::fro_norm(A);
  return lhs <= rhs + 1e-9;
}

Verdict min_dimension_check(const Int& d, const Int& n, double epsilon,
                            double deltaJ) {
  if (n < 1) throw domain_error("min_dimension_check requires n >= 1");
  Verdict v;
  v.hypothesis = deltaJ > 42.0 * epsilon;
  Int exponent = n / 2 - 1;
  if (exponent <= 0) {
    v.bound = 1;
  } else {
    if (exponent > (Int(1) << 22))
      throw domain_error("2^" + exponent.str() + " is too large to hold");
    v.bound = pow2(exponent.convert_to<std::uint64_t>());
  }
  v.consistent = !v.hypothesis || d >= v.bound;
  return v;
}

HlpResult hlp_lower_bound(const HlpParams& p) {
  if (!(p.delta > 0.0) || !(p.epsilon > 0.0) || !(p.C4 > 0.0) ||
      !(p.kappa > 0.0))
    throw domain_error("hlp_lower_bound needs positive delta, epsilon, C4, "
                       "kappa");

  HlpResult r;
  long double expo = 1.0L / (2.0L + static_cast<long double>(p.kappa));
  r.alpha = static_cast<double>(expo);
  r.C = static_cast<double>(
      std::log(2.0L) /
      (2.0L * std::pow(84.0L * static_cast<long double>(p.C4), expo)));
  r.Cprime = std::pow(2.0, -2.5);

  long double log_ratio = std::log(static_cast<long double>(p.delta)) -
                          std::log(84.0L * static_cast<long double>(p.C4) *
                                   static_cast<long double>(p.epsilon));
  if (log_ratio < 0.0L) {
    r.n = 0;
  } else {
    long double nf = std::exp(log_ratio * expo);
    if (nf < 9.2e18L) {
      auto n = static_cast<std::uint64_t>(nf);
      // Exact-ish floor: nudge across the boundary in the log domain.
      while (n > 0 &&
             std::log(static_cast<long double>(n)) * (1.0L / expo) > log_ratio)
        --n;
      while (std::log(static_cast<long double>(n + 1)) * (1.0L / expo) <=
             log_ratio)
        ++n;
      r.n = n;
    } else {
      r.n = Int(static_cast<double>(nf));
    }
  }

  if (r.n < 2) {
    r.d_min = 1;
    r.d_min_materialized = true;
    r.log2_d_min = 0.0;
  } else {
    Int exponent = r.n / 2 - 1;
    r.log2_d_min = static_cast<double>(exponent.convert_to<long double>());
    if (exponent <= (Int(1) << 22)) {
      r.d_min = pow2(exponent.convert_to<std::uint64_t>());
      r.d_min_materialized = true;
    }
  }

  // log2 of Cprime * exp(C (delta/eps)^alpha):
  long double da =
      std::exp(expo * (std::log(static_cast<long double>(p.delta)) -
                       std::log(static_cast<long double>(p.epsilon))));
  long double rhs_log2 =
      -2.5L + static_cast<long double>(r.C) * da / std::log(2.0L);
  r.guarantee = static_cast<long double>(r.log2_d_min) >= rhs_log2;
  return r;
}

bool verify_derivation(const Word& w, const Derivation& d) {
  Word prod(w.alphabet());
  for (const auto& step : d.steps) {
    if (step.relator >= d.relators.size()) return false;
    if (step.sign != 1 && step.sign != -1) return false;
    Word r = d.relators[step.relator];
    if (step.sign == -1) r = words::invert(r);
    Word factor = words::concat(
        words::concat(step.conjugator, r), words::invert(step.conjugator));
    prod = words::concat(prod, factor);
  }
  return words::free_reduce(prod) == words::free_reduce(w);
}

double defect_bound_from_derivation(const Word& w, const Derivation& d,
                                    double epsilon) {
  if (epsilon < 0.0)
    throw domain_error("defect_bound_from_derivation needs epsilon >= 0");
  if (!verify_derivation(w, d))
    throw domain_error("derivation does not rewrite the word to the identity");
  return static_cast<double>(d.steps.size()) * epsilon;
}

SearchReport compressed_rep_search(int n, std::size_t d,
                                   std::uint64_t iterations,
                                   std::uint64_t seed) {
  if (n < 2 || n > 8)
    throw domain_error("compressed_rep_search requires 2 <= n <= 8");
  std::size_t q = std::size_t{1} << (n / 2);
  if (d < 1 || d >= q)
    throw domain_error(
        "compressed_rep_search probes dimensions below the irrep, d < " +
        std::to_string(q));

  auto elements = clifford::enumerate_group(n);
  std::size_t N = elements.size();

  // Product and inverse tables over element indices.
  std::vector<std::vector<std::size_t>> prod(N, std::vector<std::size_t>(N));
  std::vector<std::size_t> inv(N);
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = 0; b < N; ++b) {
      auto ab = clifford::c_multiply(elements[a], elements[b]).first;
      prod[a][b] = clifford::element_index(ab, n);
      if (prod[a][b] == 0) inv[a] = b;
    }
  }

  std::vector<CMat> psi(N, identity(d));
  std::vector<double> pair_defect(N * N, 0.0);

  auto pair_value = [&](std::size_t a, std::size_t b) {
    return mat::fro_norm(sub(psi[prod[a][b]], mul(psi[a], psi[b])));
  };
  auto refresh_pairs_touching = [&](std::size_t g) {
    for (std::size_t a = 0; a < N; ++a) {
      pair_defect[g * N + a] = pair_value(g, a);
      pair_defect[a * N + g] = pair_value(a, g);
      std::size_t b = prod[inv[a]][g];  // the pair (a, b) with ab = g
      pair_defect[a * N + b] = pair_value(a, b);
    }
  };
  auto current_defect = [&] {
    return *std::max_element(pair_defect.begin(), pair_defect.end());
  };
  auto current_deltaJ = [&] {
    return mat::fro_norm(sub(psi[1], identity(d)));  // index 1 is J
  };
  auto objective = [&](double defect, double deltaJ) {
    return std::max(defect, (2.0 - deltaJ) / 21.0);
  };

  SearchReport rep;
  rep.n = n;
  rep.d = d;
  rep.iterations = iterations;
  rep.seed = seed;

  SplitMix64 rng(seed);
  double defect = 0.0;
  double deltaJ = 0.0;
  double obj = objective(defect, deltaJ);
  rep.trajectory.emplace_back(defect, deltaJ);
  rep.best_defect = defect;
  rep.best_deltaJ = deltaJ;
  rep.best_objective = obj;

  std::uint64_t sample_every = std::max<std::uint64_t>(1, iterations / 64);
  for (std::uint64_t it = 0; it < iterations; ++it) {
    std::size_t g = 1 + static_cast<std::size_t>(rng.below(N - 1));
    double step = 0.5 * std::pow(1e-2, static_cast<double>(it) /
                                           std::max<std::uint64_t>(
                                               1, iterations));
    CMat saved = psi[g];
    psi[g] = mul(unitary_exp(seeded_hermitian(d, rng), step), psi[g]);

    std::vector<double> saved_rows(3 * N);
    std::size_t idx = 0;
    for (std::size_t a = 0; a < N; ++a) {
      saved_rows[idx++] = pair_defect[g * N + a];
      saved_rows[idx++] = pair_defect[a * N + g];
      std::size_t b = prod[inv[a]][g];
      saved_rows[idx++] = pair_defect[a * N + b];
    }
    refresh_pairs_touching(g);

    double new_defect = current_defect();
    double new_deltaJ = current_deltaJ();
    double new_obj = objective(new_defect, new_deltaJ);
    if (new_obj <= obj) {
      obj = new_obj;
      defect = new_defect;
      deltaJ = new_deltaJ;
    } else {
      psi[g] = std::move(saved);
      idx = 0;
      for (std::size_t a = 0; a < N; ++a) {
        pair_defect[g * N + a] = saved_rows[idx++];
        pair_defect[a * N + g] = saved_rows[idx++];
        std::size_t b = prod[inv[a]][g];
        pair_defect[a * N + b] = saved_rows[idx++];
      }
    }
    if ((it + 1) % sample_every == 0) rep.trajectory.emplace_back(defect, deltaJ);
  }

  rep.best_defect = defect;
  rep.best_deltaJ = deltaJ;
  rep.best_objective = obj;
  if (rep.trajectory.back() != std::make_pair(defect, deltaJ))
    rep.trajectory.emplace_back(defect, deltaJ);

  rep.consistent = true;
  for (const auto& [pd, pj] : rep.trajectory) {
    auto verdict = min_dimension_check(Int(d), Int(n), pd, pj);
    if (!verdict.consistent || pj > 42.0 * pd + 1e-12) rep.consistent = false;
  }
  return rep;
}

}  // namespace klab::rep
