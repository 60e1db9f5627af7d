#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "klab/bigint.hpp"
#include "klab/clifford.hpp"
#include "klab/matrix.hpp"
#include "klab/words.hpp"

namespace klab::rep {

using klab::mat::CMat;
using klab::mat::NormKind;

// Unitary images for the generator symbols of one alphabet context.
// xs[i] is the image of x_{i+1} in a C_n(n) context; for the K generator
// set xs holds the single image of x0 and t/z are populated.
struct UnitaryMap {
  words::Alphabet group;
  std::size_t d = 0;
  CMat J;
  std::vector<CMat> xs;
  CMat t;  // rows == 0 when absent
  CMat z;

  bool has_t() const { return t.rows != 0; }
  bool has_z() const { return z.rows != 0; }
};

// Multiply out the letter images; inverse letters use the adjoint.
CMat evaluate(const UnitaryMap& phi, const words::Word& w);

// Irreducible representation of C(n), dimension 2^(n/2 rounded down),
// built from tensor chains of 2x2 involutions; J -> -Identity. All
// defining relations hold exactly (entries are 0, +-1, +-i). 1 <= n <= 14.
UnitaryMap exact_clifford_rep(int n);

// Injective on all 2^(n+1) elements. Even n: the irreducible rep already
// is. Odd n: the rank-(n+1) chain restricted to the first n generators
// (the irrep itself collapses a central element for odd n). 1 <= n <= 13.
UnitaryMap faithful_clifford_rep(int n);

// Defining relators of C(n) as words: J^2, x_i^2, [x_i, J],
// [x_i, x_j] J^-1 over ordered pairs i != j.
std::vector<words::Word> c_relators(int n);

// max over the defining relators r of ||phi(r) - 1|| in the given norm.
double relation_defect(const UnitaryMap& phi, const NormKind& kind);

// Multiplies each generator image by exp(i * magnitude * H), H a seeded
// Gaussian Hermitian matrix of unit normalized-Frobenius norm.
UnitaryMap perturb(const UnitaryMap& phi, double magnitude, std::uint64_t seed);

// psi(g) for every element of C(n), indexed as by element_index.
struct HomTable {
  int n = 0;
  std::size_t d = 0;
  std::vector<CMat> e;

  const CMat& at(const clifford::CNormalForm& g) const;
};

// psi(g) = phi(normal form word of g), for every g in enumerate_group(n);
// n comes from phi's alphabet.
HomTable lift_to_table(const UnitaryMap& phi);

// max over ordered pairs (g, h) of ||psi(gh) - psi(g) psi(h)||; n <= 6.
double hom_defect(const HomTable& psi, const NormKind& kind);

// ||psi(J) - psi(1)|| in the given norm (how far J sits from the identity).
double j_defect(const HomTable& psi, const NormKind& kind);

struct FitResult {
  HomTable gamma;    // exact representation table of dimension m
  CMat U;            // m x d isometry
  std::size_t m = 0;
  double distance = 0.0;  // max_g ||psi(g) - U* gamma(g) U||_f
  double epsilon = 0.0;   // measured hom_defect of the input
  int iterations = 0;
};

// Fits an exact representation near psi: gamma ranges over direct sums of
// copies of the irreducible rep plus trivial characters with
// d <= m <= ceil((1 - 4 eps^2)^-1 d); U by alternating Procrustes steps.
// Requires hom_defect(psi) < 1/16.
FitResult fit_exact_rep(const HomTable& psi, double tolerance);

// ||U* A U||_f <= sqrt(m/d) ||A||_f + 1e-9 for an m x d isometry U.
bool compression_inequality_check(const CMat& A, const CMat& U);

struct Verdict {
  bool hypothesis = false;  // deltaJ > 42 * epsilon
  Int bound;                // 2^(floor(n/2) - 1), at least 1
  bool consistent = false;  // !hypothesis || d >= bound
};

// Minimum-dimension check: any d-dimensional epsilon-homomorphism of C(n)
// moving J at least 42 epsilon away from the identity has d >= bound.
Verdict min_dimension_check(const Int& d, const Int& n, double epsilon,
                            double deltaJ);

struct HlpParams {
  double delta = 0.0;
  double epsilon = 0.0;
  double C4 = 1.0;
  double kappa = 0.0;
  int iso_exponent = 26;
  int log_exponent = 52;
};

struct HlpResult {
  Int n;
  Int d_min;        // materialized only when it fits in ~4M bits
  bool d_min_materialized = false;
  double log2_d_min = 0.0;
  double alpha = 0.0;
  double C = 0.0;
  double Cprime = 0.0;
  bool guarantee = false;  // d_min >= Cprime * exp(C (delta/eps)^alpha)
};

// n = floor((delta / (84 C4 eps))^(1/(2+kappa))), d_min = 2^(floor(n/2)-1)
// for n >= 2 else 1; alpha = 1/(2+kappa); C = ln2 / (2 (84 C4)^alpha);
// Cprime = 2^(-5/2). The guarantee is checked in the log domain.
HlpResult hlp_lower_bound(const HlpParams& p);

// A product of conjugated defining relators witnessing triviality of a
// word: step k contributes conjugator * relators[relator]^sign * conjugator^-1.
struct Derivation {
  std::vector<words::Word> relators;
  struct Step {
    std::size_t relator = 0;
    int sign = 1;
    words::Word conjugator;
  };
  std::vector<Step> steps;
};

// The product of the derivation's factors freely reduces to free_reduce(w).
bool verify_derivation(const words::Word& w, const Derivation& d);

// (number of steps) * epsilon, after verifying the derivation.
double defect_bound_from_derivation(const words::Word& w, const Derivation& d,
                                    double epsilon);

struct SearchReport {
  int n = 0;
  std::size_t d = 0;
  std::uint64_t iterations = 0;
  std::uint64_t seed = 0;
  double best_defect = 0.0;
  double best_deltaJ = 0.0;
  double best_objective = 0.0;
  // sampled (defect, deltaJ) pairs along the search, best included
  std::vector<std::pair<double, double>> trajectory;
  bool consistent = false;  // every pair passes min_dimension_check
};

// Local search over d-dimensional tables for small defect together with
// large ||psi(J) - 1||_f; requires d < 2^(n/2 rounded down). Reporting
// only: every reported pair must still satisfy min_dimension_check.
SearchReport compressed_rep_search(int n, std::size_t d,
                                   std::uint64_t iterations,
                                   std::uint64_t seed);

}  // namespace klab::rep
