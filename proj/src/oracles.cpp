#include "klab/oracles.hpp"

#include <algorithm>
#include <utility>

#include "klab/error.hpp"
#include "klab/kgroup.hpp"
#include "klab/rng.hpp"

namespace klab::oracle {

using clifford::CNormalForm;
using words::Word;

CNormalForm naive_c_multiply(const CNormalForm& g1, const CNormalForm& g2) {
  CNormalForm r;
  r.b = g1.b ^ g2.b;
  std::vector<Int> v = g1.indices;
  v.insert(v.end(), g2.indices.begin(), g2.indices.end());

  // Bubble sort; each adjacent swap is one anticommutation, flipping b.
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        r.b ^= 1;
        swapped = true;
      }
    }
  }
  // Adjacent equal letters square away without touching b.
  for (std::size_t i = 0; i + 1 < v.size();) {
    if (v[i] == v[i + 1])
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i),
              v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    else
      ++i;
  }
  r.indices = std::move(v);
  return r;
}

namespace {

// Random word over the context's letters. In the K context the t-exponent
// is balanced by construction so Britton depth stays bounded.
Word random_conjugator(const words::Alphabet& ctx, std::uint64_t max_len,
                       SplitMix64& rng) {
  Word w(ctx);
  if (max_len == 0) return w;
  if (ctx.ctx == words::Ctx::Cn) {
    std::uint64_t len = rng.below(max_len + 1);
    for (std::uint64_t i = 0; i < len; ++i) {
      if (rng.below(4) == 0)
        w.push(words::sym_j(), 1);
      else
        w.push(words::sym_x(Int(1 + static_cast<std::int64_t>(
                                    rng.below(static_cast<std::uint64_t>(
                                        ctx.n))))),
               1);
    }
    return w;
  }
  std::uint64_t half = rng.below(max_len / 2 + 1);
  std::int64_t t_sum = 0;
  for (std::uint64_t i = 0; i < half; ++i) {
    switch (rng.below(5)) {
      case 0:
        w.push(words::sym_j(), 1);
        break;
      case 1:
        w.push(words::sym_x(0), 1);
        break;
      case 2:
        w.push(words::sym_z(), 1);
        break;
      case 3:
        w.push(words::sym_z(), -1);
        break;
      default:
        if (rng.below(2) == 0) {
          w.push(words::sym_t(), 1);
          ++t_sum;
        } else {
          w.push(words::sym_t(), -1);
          --t_sum;
        }
        break;
    }
  }
  if (t_sum != 0) w.push(words::sym_t(), Int(-t_sum));
  return w;
}

}  // namespace

Soup relator_soup(const RelatorSoupConfig& cfg) {
  Soup soup;
  soup.word = Word(cfg.ctx);
  if (cfg.ctx.ctx == words::Ctx::K) {
    soup.derivation.relators = kgroup::k_relators(cfg.index_window);
  } else if (cfg.ctx.ctx == words::Ctx::Cn) {
    soup.derivation.relators = rep::c_relators(cfg.ctx.n);
  } else {
    throw domain_error("relator_soup works over K or C_n, got " +
                       words::alphabet_name(cfg.ctx));
  }

  SplitMix64 rng(cfg.seed);
  Word prod(cfg.ctx);
  for (std::uint64_t f = 0; f < cfg.num_factors; ++f) {
    rep::Derivation::Step step;
    step.relator = rng.below(soup.derivation.relators.size());
    step.sign = rng.below(2) == 0 ? 1 : -1;
    step.conjugator =
        random_conjugator(cfg.ctx, cfg.max_conjugator_length, rng);

    Word r = soup.derivation.relators[step.relator];
    if (step.sign == -1) r = words::invert(r);
    prod = words::concat(
        prod, words::concat(words::concat(step.conjugator, r),
                            words::invert(step.conjugator)));
    soup.derivation.steps.push_back(std::move(step));
  }
  soup.word = words::free_reduce(prod);
  return soup;
}

words::Word nontrivial_witness(std::uint64_t seed, std::uint64_t size) {
  if (size < 1) throw domain_error("nontrivial_witness needs size >= 1");
  SplitMix64 rng(seed);
  auto amplitude = static_cast<std::int64_t>(std::min<std::uint64_t>(
      size, 1024));

  Word base(words::k_alphabet());
  if (rng.below(2) == 0) {
    // Non-identity K0 normal form; unique normal forms make it non-trivial.
    kgroup::K0NormalForm nf;
    nf.a = rng.range(-amplitude, amplitude);
    nf.b = static_cast<int>(rng.below(2));
    std::uint64_t l = rng.below(4);
    std::int64_t prev = -amplitude - 1;
    for (std::uint64_t i = 0; i < l; ++i) {
      std::int64_t next = rng.range(prev + 1, amplitude + 2 +
                                                  static_cast<std::int64_t>(i));
      nf.indices.push_back(next);
      prev = next;
    }
    if (nf.is_identity()) nf.b = 1;
    base = kgroup::render_k0(nf);
  } else {
    // Pinch-free Britton form: every middle segment holds an x0-letter, so
    // it lies in neither <z> nor <z^2> and no pinch can ever fire.
    kgroup::BrittonForm f;
    std::uint64_t k = 1 + rng.below(3);
    f.w.clear();
    for (std::uint64_t i = 0; i <= k; ++i) {
      kgroup::K0NormalForm nf;
      nf.a = rng.range(-amplitude, amplitude);
      nf.b = static_cast<int>(rng.below(2));
      if (i != 0 && i != k) nf.indices.push_back(rng.range(-amplitude, amplitude));
      f.w.push_back(std::move(nf));
    }
    for (std::uint64_t i = 0; i < k; ++i)
      f.c.push_back(rng.below(2) == 0 ? 1 : -1);
    base = kgroup::render_britton(f);
  }

  if (rng.below(2) == 0) {
    RelatorSoupConfig cfg;
    cfg.num_factors = 1 + rng.below(3);
    cfg.max_conjugator_length = std::min<std::uint64_t>(size, 8);
    cfg.seed = rng.next();
    cfg.index_window = 2;
    base = words::concat(base, relator_soup(cfg).word);
  }
  return base;
}

}  // namespace klab::oracle
