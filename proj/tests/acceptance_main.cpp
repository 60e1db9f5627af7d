// Acceptance harness: ten end-to-end checks, one line of output each.
// Exits non-zero if any check fails. All tolerances are pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "klab/clifford.hpp"
#include "klab/eig.hpp"
#include "klab/error.hpp"
#include "klab/kgroup.hpp"
#include "klab/matrix.hpp"
#include "klab/oracles.hpp"
#include "klab/replab.hpp"
#include "klab/rng.hpp"
#include "klab/words.hpp"

using namespace klab;
using clifford::CNormalForm;
using kgroup::is_trivial;
using mat::CMat;
using mat::NormKind;
using words::Word;

namespace {

int failures = 0;

void report(int index, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s — %s\n", index, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// --- 1: the decision procedure against both oracles, under a time budget ---
void criterion_1() {
  constexpr int kSoups = 1000;
  constexpr int kWitnesses = 1000;
  constexpr double kBudgetSeconds = 60.0;

  auto t0 = std::chrono::steady_clock::now();
  int disagreements = 0;
  for (int i = 0; i < kSoups; ++i) {
    oracle::RelatorSoupConfig cfg;
    cfg.num_factors = 1 + i % 7;
    cfg.max_conjugator_length = 6;
    cfg.seed = static_cast<std::uint64_t>(i);
    if (!is_trivial(oracle::relator_soup(cfg).word).first) ++disagreements;
  }
  for (int i = 0; i < kWitnesses; ++i)
    if (is_trivial(oracle::nontrivial_witness(static_cast<std::uint64_t>(i),
                                              12))
            .first)
      ++disagreements;
  double elapsed = seconds_since(t0);
  report(1, disagreements == 0 && elapsed < kBudgetSeconds,
         std::to_string(kSoups) + " trivial + " + std::to_string(kWitnesses) +
             " non-trivial words, " + std::to_string(disagreements) +
             " disagreements, " + std::to_string(elapsed) + " s");
}

// --- 2: tower words reduce with bounded bit growth per pinch ---
void criterion_2() {
  constexpr std::uint64_t kMaxGrowthBits = 3;
  bool ok = true;
  std::string why = "k = 1..64, every pinch grows max bits by <= 3";
  for (int k = 1; k <= 64 && ok; ++k) {
    // t^k z t^-k spelled against z * build_z(2^k - 1) (the same element,
    // z^{2^k}, written with k genuine pinches on one side).
    Word lhs(words::k_alphabet());
    lhs.push(words::sym_t(), k);
    lhs.push(words::sym_z(), 1);
    lhs.push(words::sym_t(), -k);
    Word rhs(words::k_alphabet());
    rhs.push(words::sym_z(), 1);
    rhs = words::concat(rhs, kgroup::build_z(pow2(k) - 1));
    Word w = words::concat(lhs, words::invert(rhs));

    auto [trivial, tr] = is_trivial(w);
    if (!trivial) {
      ok = false;
      why = "w_" + std::to_string(k) + " did not reduce to the identity";
      break;
    }
    if (tr.pinch_steps == 0) {
      ok = false;
      why = "w_" + std::to_string(k) + " reduced without any pinch";
      break;
    }
    for (std::size_t i = 1; i < tr.max_bit_length_history.size(); ++i) {
      if (tr.max_bit_length_history[i] >
          tr.max_bit_length_history[i - 1] + kMaxGrowthBits) {
        ok = false;
        why = "bit growth " +
              std::to_string(tr.max_bit_length_history[i - 1]) + " -> " +
              std::to_string(tr.max_bit_length_history[i]) + " at k=" +
              std::to_string(k);
        break;
      }
    }
  }
  report(2, ok, why);
}

// --- 3: near-linear scaling of decide on relator soups ---
void criterion_3() {
  constexpr double kMaxSlope = 3.5;
  constexpr double kTenKBudgetSeconds = 10.0;
  std::vector<double> logl, logt;
  double len10k_seconds = -1.0;

  for (int i = 0; i < 8; ++i) {
    auto target = static_cast<std::uint64_t>(
        1000.0 * std::pow(32.0, i / 7.0));
    oracle::RelatorSoupConfig cfg;
    cfg.num_factors = std::max<std::uint64_t>(1, target / 13);
    cfg.max_conjugator_length = 6;
    cfg.seed = 9000 + static_cast<std::uint64_t>(i);
    Word w = oracle::relator_soup(cfg).word;
    auto t0 = std::chrono::steady_clock::now();
    bool trivial = is_trivial(w).first;
    double secs = seconds_since(t0);
    if (!trivial) {
      report(3, false, "soup word unexpectedly non-trivial");
      return;
    }
    double len = w.length().convert_to<double>();
    logl.push_back(std::log(len));
    logt.push_back(std::log(std::max(1e-6, secs)));
    if (len >= 10000.0 && len10k_seconds < 0.0) len10k_seconds = secs;
  }

  double mx = 0, my = 0;
  for (std::size_t i = 0; i < logl.size(); ++i) {
    mx += logl[i];
    my += logt[i];
  }
  mx /= static_cast<double>(logl.size());
  my /= static_cast<double>(logl.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < logl.size(); ++i) {
    num += (logl[i] - mx) * (logt[i] - my);
    den += (logl[i] - mx) * (logl[i] - mx);
  }
  double slope = num / den;

  bool ok = slope <= kMaxSlope && len10k_seconds >= 0.0 &&
            len10k_seconds < kTenKBudgetSeconds;
  report(3, ok,
         "time-vs-length slope " + std::to_string(slope) +
             " (budget 3.5), 10^4-length word in " +
             std::to_string(len10k_seconds) + " s");
}

// --- 4: merge multiplication vs bubble sort and vs unitary matrices ---
void criterion_4() {
  constexpr double kMatrixTol = 1e-9;
  bool ok = true;
  std::string why = "merge == bubble sort and matrix model, n <= 5, all pairs";
  for (int n = 1; n <= 5 && ok; ++n) {
    auto elems = clifford::enumerate_group(n);
    rep::HomTable psi = rep::lift_to_table(rep::faithful_clifford_rep(n));
    for (std::size_t i = 0; i < elems.size() && ok; ++i) {
      for (std::size_t j = 0; j < elems.size() && ok; ++j) {
        auto [got, cnt] = clifford::c_multiply(elems[i], elems[j]);
        if (got != oracle::naive_c_multiply(elems[i], elems[j])) {
          ok = false;
          why = "merge and bubble sort disagree at n=" + std::to_string(n);
          break;
        }
        if (cnt.total() > clifford::count_bound(n)) {
          ok = false;
          why = "application count exceeded (n+1)^2 at n=" + std::to_string(n);
          break;
        }
        CMat prod = mat::mul(psi.at(elems[i]), psi.at(elems[j]));
        if (mat::max_abs_diff(prod, psi.at(got)) > kMatrixTol) {
          ok = false;
          why = "matrix model disagrees at n=" + std::to_string(n);
        }
      }
    }
  }
  report(4, ok, why);
}

// --- 5: lifted tables inherit defects linearly via application counts ---
void criterion_5() {
  constexpr double kSlack = 1e-9;
  const double magnitudes[] = {1e-2, 1e-3, 1e-4};
  const NormKind kinds[] = {NormKind::frobenius(), NormKind::op(),
                            NormKind::schatten(4)};
  bool ok = true;
  std::string why =
      "hom defect <= (n+1)^2 * relation defect for n=2..5, 20 seeds x 3 "
      "magnitudes x 3 norms";
  for (int n = 2; n <= 5 && ok; ++n) {
    auto exact = rep::exact_clifford_rep(n);
    double bound_factor = static_cast<double>(clifford::count_bound(n));
    for (std::uint64_t seed = 0; seed < 20 && ok; ++seed) {
      for (double mag : magnitudes) {
        auto phi = rep::perturb(exact, mag, seed);
        auto psi = rep::lift_to_table(phi);
        for (const NormKind& kind : kinds) {
          double rdef = rep::relation_defect(phi, kind);
          double hdef = rep::hom_defect(psi, kind);
          if (hdef > bound_factor * rdef + kSlack) {
            ok = false;
            why = "violated at n=" + std::to_string(n) + ", magnitude " +
                  std::to_string(mag) + ", norm " + kind.name() + ": " +
                  std::to_string(hdef) + " > " +
                  std::to_string(bound_factor * rdef);
            break;
          }
        }
        if (!ok) break;
      }
    }
  }
  report(5, ok, why);
}

// --- 6: fitting an exact representation near an approximate one ---
void criterion_6() {
  constexpr double kExactTol = 1e-9;
  constexpr double kConjugatedTol = 1e-6;
  bool ok = true;
  std::string why;

  // Exact input: the fit must be essentially perfect.
  for (int n : {2, 3, 4, 5}) {
    auto psi = rep::lift_to_table(rep::exact_clifford_rep(n));
    auto fit = rep::fit_exact_rep(psi, 1e-10);
    if (fit.distance > kExactTol || !mat::is_isometry(fit.U, kExactTol) ||
        fit.m != psi.d) {
      ok = false;
      why = "exact input not recovered at n=" + std::to_string(n);
    }
  }

  // Conjugated exact input: still essentially perfect.
  if (ok) {
    auto phi = rep::exact_clifford_rep(4);
    SplitMix64 rng(1349);
    CMat h(phi.d, phi.d);
    for (std::size_t i = 0; i < phi.d; ++i)
      for (std::size_t j = i; j < phi.d; ++j) {
        mat::cd v(rng.gaussian(), i == j ? 0.0 : rng.gaussian());
        h.at(i, j) = v;
        h.at(j, i) = std::conj(v);
      }
    auto eh = mat::hermitian_eig(h);
    CMat ph = mat::zero(phi.d, phi.d);
    for (std::size_t i = 0; i < phi.d; ++i)
      ph.at(i, i) = std::polar(1.0, 0.9 * eh.values[i]);
    CMat V = mat::mul(mat::mul(eh.vectors, ph), mat::adjoint(eh.vectors));
    phi.J = mat::mul(mat::adjoint(V), mat::mul(phi.J, V));
    for (auto& x : phi.xs) x = mat::mul(mat::adjoint(V), mat::mul(x, V));
    auto fit = rep::fit_exact_rep(rep::lift_to_table(phi), 1e-10);
    if (fit.distance > kConjugatedTol) {
      ok = false;
      why = "conjugated exact input fit at distance " +
            std::to_string(fit.distance);
    }
  }

  // Perturbed input: distance within 42 epsilon, window respected. At
  // magnitude 1e-2 the defect may exceed the 1/16 admissibility threshold,
  // in which case the documented error path must fire.
  int refusals = 0, fits = 0;
  if (ok) {
    for (int n : {2, 3, 4}) {
      for (std::uint64_t seed = 0; seed < 5 && ok; ++seed) {
        for (double mag : {1e-2, 1e-3, 1e-4}) {
          if (!ok) break;
          auto psi = rep::lift_to_table(
              rep::perturb(rep::exact_clifford_rep(n), mag, 100 + seed));
          double eps = rep::hom_defect(psi, NormKind::frobenius());
          if (eps >= 1.0 / 16.0) {
            try {
              rep::fit_exact_rep(psi, 1e-9);
              ok = false;
              why = "fit accepted a table with defect " + std::to_string(eps);
            } catch (const domain_error&) {
              ++refusals;  // documented error path
            }
            continue;
          }
          auto fit = rep::fit_exact_rep(psi, 1e-9);
          ++fits;
          auto m_max = static_cast<std::size_t>(
              std::ceil(psi.d / (1.0 - 4.0 * eps * eps)));
          if (fit.m < psi.d || fit.m > m_max) {
            ok = false;
            why = "fit dimension " + std::to_string(fit.m) +
                  " outside [d, ceil(d/(1-4eps^2))]";
          } else if (!mat::is_isometry(fit.U, 1e-8)) {
            ok = false;
            why = "fitted U is not an isometry";
          } else if (fit.distance > 42.0 * eps) {
            ok = false;
            why = "fit distance " + std::to_string(fit.distance) +
                  " exceeds 42 * " + std::to_string(eps);
          }
        }
      }
    }
  }
  // A table whose defect clearly exceeds 1/16 must be refused outright.
  if (ok) {
    auto bad = rep::lift_to_table(
        rep::perturb(rep::exact_clifford_rep(3), 1.0, 4242));
    double eps = rep::hom_defect(bad, NormKind::frobenius());
    if (eps < 1.0 / 16.0) {
      ok = false;
      why = "heavy perturbation unexpectedly admissible (defect " +
            std::to_string(eps) + ")";
    } else {
      try {
        rep::fit_exact_rep(bad, 1e-9);
        ok = false;
        why = "fit accepted a table with defect " + std::to_string(eps);
      } catch (const domain_error&) {
        ++refusals;
      }
    }
  }

  if (ok)
    why = "exact <= 1e-9, conjugated <= 1e-6, " + std::to_string(fits) +
          " noisy fits within 42 eps, " + std::to_string(refusals) +
          " refusal(s) above the 1/16 threshold";
  report(6, ok, why);
}

// --- 7: no observed table beats the minimum-dimension bound ---
void criterion_7() {
  bool ok = true;
  std::string why;
  int tables = 0;
  for (int n = 2; n <= 5 && ok; ++n) {
    for (std::uint64_t seed = 0; seed < 5 && ok; ++seed) {
      for (double mag : {1e-2, 1e-3, 1e-4}) {
        auto psi = rep::lift_to_table(
            rep::perturb(rep::exact_clifford_rep(n), mag, 500 + seed));
        double eps = rep::hom_defect(psi, NormKind::frobenius());
        double dj = rep::j_defect(psi, NormKind::frobenius());
        auto v = rep::min_dimension_check(Int(psi.d), Int(n), eps, dj);
        ++tables;
        if (!v.consistent) {
          ok = false;
          why = "lifted table at n=" + std::to_string(n) +
                " violates the bound";
        }
      }
    }
  }

  if (ok) {
    const std::pair<int, std::size_t> searches[] = {{5, 2}, {7, 4}};
    for (auto [n, d] : searches) {
      auto r = rep::compressed_rep_search(n, d, 10000, 424242);
      if (!r.consistent) {
        ok = false;
        why = "search at n=" + std::to_string(n) + ", d=" + std::to_string(d) +
              " reported an inconsistent pair";
        break;
      }
      for (auto [defect, deltaJ] : r.trajectory) {
        if (deltaJ > 42.0 * defect + 1e-12) {
          ok = false;
          why = "trajectory pair beats 42x the defect";
          break;
        }
      }
      if (!ok) break;
    }
  }
  if (ok)
    why = std::to_string(tables) +
          " lifted tables consistent; searches at (5,2) and (7,4) over 10^4 "
          "steps never exceeded deltaJ = 42 defect";
  report(7, ok, why);
}

// --- 8: logarithmic generator towers ---
void criterion_8() {
  constexpr double kLengthConstant = 3.0;
  bool ok = true;
  std::string why;

  SplitMix64 rng(808);
  for (int trial = 0; trial < 50 && ok; ++trial) {
    std::int64_t i = static_cast<std::int64_t>(rng.below(1 << 16));
    std::int64_t j = static_cast<std::int64_t>(rng.below(1 << 16));
    if (i == j) j = (j + 1) & 0xffff;
    Word xi = kgroup::build_x(i);
    Word xj = kgroup::build_x(j);
    Word w = words::concat(
        words::concat(words::concat(xi, xj), words::invert(xi)),
        words::invert(xj));
    w.push(words::sym_j(), 1);
    if (!is_trivial(w).first) {
      ok = false;
      why = "tower commutator relator not trivial at i=" + std::to_string(i) +
            ", j=" + std::to_string(j);
    }
  }

  if (ok) {
    auto bits = [](std::uint64_t k) {
      std::uint64_t b = 0;
      while (k) {
        ++b;
        k >>= 1;
      }
      return b == 0 ? std::uint64_t{1} : b;
    };
    auto check_len = [&](std::uint64_t k) {
      double cap = kLengthConstant * static_cast<double>(bits(k) * bits(k));
      return kgroup::build_x(k).length().convert_to<double>() <= cap;
    };
    for (std::uint64_t k = 1; k <= 4096 && ok; ++k)
      if (!check_len(k)) {
        ok = false;
        why = "length bound failed at k=" + std::to_string(k);
      }
    for (int trial = 0; trial < 2000 && ok; ++trial) {
      std::uint64_t k = 1 + rng.below(1 << 20);
      if (!check_len(k)) {
        ok = false;
        why = "length bound failed at k=" + std::to_string(k);
      }
    }
  }
  if (ok)
    why = "50 tower commutator relators trivial; length(build_x(k)) <= "
          "3 (log2 k + 1)^2 up to 2^20";
  report(8, ok, why);
}

// --- 9: derivations transfer defect bounds to the matrix side ---
void criterion_9() {
  constexpr double kSlack = 1e-9;
  bool ok = true;
  std::string why = "200 derived words: ||phi(w) - 1||_f <= steps * defect";
  auto phi = rep::perturb(rep::exact_clifford_rep(5), 1e-3, 77);
  double eps = rep::relation_defect(phi, NormKind::frobenius());
  CMat eye = mat::identity(phi.d);
  for (std::uint64_t seed = 0; seed < 200 && ok; ++seed) {
    oracle::RelatorSoupConfig cfg;
    cfg.ctx = words::cn_alphabet(5);
    cfg.num_factors = 1 + seed % 6;
    cfg.max_conjugator_length = 5;
    cfg.seed = seed;
    auto soup = oracle::relator_soup(cfg);
    double bound =
        rep::defect_bound_from_derivation(soup.word, soup.derivation, eps);
    double dist = mat::fro_norm(mat::sub(rep::evaluate(phi, soup.word), eye));
    if (dist > bound + kSlack) {
      ok = false;
      why = "seed " + std::to_string(seed) + ": distance " +
            std::to_string(dist) + " > bound " + std::to_string(bound);
    }
  }
  report(9, ok, why);
}

// --- 10: the profile lower bound holds across a parameter grid ---
void criterion_10() {
  bool ok = true;
  std::string why = "100-point grid: guarantee holds and alpha < 1/2";
  const double deltas[] = {1e1, 1e2, 1e3, 1e4, 1e5};
  const double epsilons[] = {1e-1, 1e-3, 1e-5, 1e-7};
  const double kappas[] = {0.5, 1.0, 2.0, 4.0, 8.0};
  for (double delta : deltas) {
    for (double eps : epsilons) {
      for (double kappa : kappas) {
        rep::HlpParams p;
        p.delta = delta;
        p.epsilon = eps;
        p.C4 = 1.0;
        p.kappa = kappa;
        auto r = rep::hlp_lower_bound(p);
        if (!r.guarantee || !(r.alpha < 0.5)) {
          ok = false;
          why = "failed at delta=" + std::to_string(delta) + ", eps=" +
                std::to_string(eps) + ", kappa=" + std::to_string(kappa);
        }
      }
    }
  }
  report(10, ok, why);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
