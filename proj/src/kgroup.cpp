#include "klab/kgroup.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "klab/error.hpp"

namespace klab::kgroup {

using words::Gen;
using words::Word;

std::uint64_t segment_max_bits(const K0NormalForm& nf) {
  std::uint64_t m = bit_length(nf.a);
  for (const Int& i : nf.indices) m = std::max(m, bit_length(i));
  return m;
}

std::uint64_t form_max_bits(const BrittonForm& f) {
  std::uint64_t m = 0;
  for (const K0NormalForm& nf : f.w) m = std::max(m, segment_max_bits(nf));
  return m;
}

namespace {

// Product tree over singleton normal forms; parity flips accumulate in b.
clifford::CNormalForm sorted_product(std::vector<clifford::CNormalForm>& items,
                                     std::size_t lo, std::size_t hi,
                                     std::uint64_t* comparisons) {
  if (lo == hi) return {};
  if (hi - lo == 1) return std::move(items[lo]);
  std::size_t mid = lo + (hi - lo) / 2;
  clifford::MergeStats stats;
  auto r = clifford::c_multiply(sorted_product(items, lo, mid, comparisons),
                                sorted_product(items, mid, hi, comparisons),
                                &stats)
               .first;
  if (comparisons) *comparisons += stats.comparisons;
  return r;
}

}  // namespace

K0NormalForm k0_normal_form(const Word& w, std::uint64_t* comparisons) {
  const auto ctx = w.alphabet().ctx;
  if (ctx != words::Ctx::K && ctx != words::Ctx::K0)
    throw domain_error("k0_normal_form needs a word over K or K_0, got " +
                       words::alphabet_name(w.alphabet()));

  // Collect w as J^b z^{a_0} x0 z^{a_1} x0 ... x0 z^{a_m} (J is central,
  // adjacent x0-runs collapse mod 2).
  int b = 0;
  std::vector<Int> avals;  // a_0 .. a_{m-1}
  Int cur = 0;             // running z-sum since the last surviving x0
  for (const auto& run : w.runs()) {
    switch (run.sym.gen) {
      case Gen::T:
        throw domain_error("k0_normal_form cannot take a word containing t");
      case Gen::J:
        if (run.exp % 2 != 0) b ^= 1;
        break;
      case Gen::Z:
        cur += run.exp;
        break;
      case Gen::X:
        if (run.exp % 2 != 0) {
          avals.push_back(cur);
          cur = 0;
        }
        break;
    }
  }

  // Suffix sums k_j = a_j + ... + a_m turn the word into
  // z^{k_0} J^b x_{-k_1} ... x_{-k_m}; the trailing z-sum is a_m = k_m.
  std::size_t m = avals.size();
  std::vector<clifford::CNormalForm> items(m);
  Int suffix = cur;
  for (std::size_t t = m; t-- > 0;) {
    items[t].indices.push_back(-suffix);  // the (t+1)-th x0 maps to x_{-k_{t+1}}
    suffix += avals[t];
  }
  // suffix now holds k_0, the total z-exponent.

  K0NormalForm out;
  out.a = suffix;
  auto sorted = sorted_product(items, 0, m, comparisons);
  out.b = b ^ sorted.b;
  out.indices = std::move(sorted.indices);
  return out;
}

K0NormalForm k0_multiply(const K0NormalForm& w1, const K0NormalForm& w2,
                         std::uint64_t* comparisons) {
  clifford::CNormalForm g1;
  g1.b = w1.b;
  g1.indices.reserve(w1.indices.size());
  for (const Int& i : w1.indices) g1.indices.push_back(i - w2.a);
  clifford::CNormalForm g2;
  g2.b = w2.b;
  g2.indices = w2.indices;

  clifford::MergeStats stats;
  auto prod = clifford::c_multiply(g1, g2, &stats).first;
  if (comparisons) *comparisons += stats.comparisons;

  K0NormalForm out;
  out.a = w1.a + w2.a;
  out.b = prod.b;
  out.indices = std::move(prod.indices);
  return out;
}

namespace {

constexpr std::uint64_t kMaxTLetters = std::uint64_t{1} << 24;

}  // namespace

BrittonForm britton_split(const Word& w, std::uint64_t* comparisons) {
  if (w.alphabet().ctx != words::Ctx::K &&
      w.alphabet().ctx != words::Ctx::K0)
    throw domain_error("britton_split needs a word over K, got " +
                       words::alphabet_name(w.alphabet()));

  Int t_letters = 0;
  for (const auto& run : w.runs())
    if (run.sym.gen == Gen::T) t_letters += boost::multiprecision::abs(run.exp);
  if (t_letters > kMaxTLetters)
    throw domain_error("word has " + t_letters.str() +
                       " t-letters; the reducer materializes one segment per "
                       "t and refuses more than 2^24");

  BrittonForm f;
  f.w.clear();
  Word block(w.alphabet());
  for (const auto& run : w.runs()) {
    if (run.sym.gen != Gen::T) {
      block.push(run.sym, run.exp);
      continue;
    }
    int sign = run.exp < 0 ? -1 : 1;
    auto count = static_cast<std::uint64_t>(
        Int(boost::multiprecision::abs(run.exp)).convert_to<std::uint64_t>());
    for (std::uint64_t i = 0; i < count; ++i) {
      f.w.push_back(k0_normal_form(block, comparisons));
      block = Word(w.alphabet());
      f.c.push_back(sign);
    }
  }
  f.w.push_back(k0_normal_form(block, comparisons));
  return f;
}

std::pair<BrittonForm, ReductionTrace> britton_reduce(const BrittonForm& f) {
  auto start = std::chrono::steady_clock::now();
  BrittonForm g = f;
  ReductionTrace trace;
  trace.max_bit_length_history.push_back(form_max_bits(g));

  std::size_t i = 0;
  while (g.c.size() >= 2 && i + 1 < g.c.size()) {
    const K0NormalForm& mid = g.w[i + 1];
    bool type1 = g.c[i] == 1 && g.c[i + 1] == -1 && mid.in_z();
    bool type2 = g.c[i] == -1 && g.c[i + 1] == 1 && mid.in_z2();
    if (!type1 && !type2) {
      ++i;
      continue;
    }
    K0NormalForm zpow;
    zpow.a = type1 ? Int(mid.a * 2) : Int(mid.a / 2);
    K0NormalForm fused = k0_multiply(
        k0_multiply(g.w[i], zpow, &trace.comparisons), g.w[i + 2],
        &trace.comparisons);
    g.w[i] = std::move(fused);
    g.w.erase(g.w.begin() + static_cast<std::ptrdiff_t>(i) + 1,
              g.w.begin() + static_cast<std::ptrdiff_t>(i) + 3);
    g.c.erase(g.c.begin() + static_cast<std::ptrdiff_t>(i),
              g.c.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    ++trace.pinch_steps;
    trace.max_bit_length_history.push_back(form_max_bits(g));
    if (i > 0) --i;
  }

  trace.micros = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return {std::move(g), std::move(trace)};
}

std::pair<bool, ReductionTrace> is_trivial(const Word& w) {
  auto start = std::chrono::steady_clock::now();
  std::uint64_t split_comparisons = 0;
  BrittonForm f = britton_split(words::free_reduce(w), &split_comparisons);
  auto [reduced, trace] = britton_reduce(f);
  trace.comparisons += split_comparisons;
  bool trivial = reduced.is_identity();
  trace.micros = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return {trivial, std::move(trace)};
}

bool equal(const Word& w1, const Word& w2) {
  if (w1.alphabet() != w2.alphabet())
    throw domain_error("equal needs words over one alphabet, got " +
                       words::alphabet_name(w1.alphabet()) + " and " +
                       words::alphabet_name(w2.alphabet()));
  return is_trivial(words::concat(w1, words::invert(w2))).first;
}

Word build_z(const Int& k) {
  if (k < 0) throw domain_error("build_z requires k >= 0");
  Word w(words::k_alphabet());
  if (k == 0) return w;
  std::uint64_t top = boost::multiprecision::msb(k);
  for (std::uint64_t i = 0; i <= top; ++i) {
    if (!boost::multiprecision::bit_test(k, static_cast<unsigned>(i))) continue;
    w.push(words::sym_t(), Int(i));
    w.push(words::sym_z(), 1);
    w.push(words::sym_t(), -Int(i));
  }
  return w;
}

Word build_x(const Int& k) {
  Word zk = build_z(k);
  Word w = zk;
  w.push(words::sym_x(0), 1);
  return words::concat(w, words::invert(zk));
}

namespace {

// z^v as plain runs for |v| <= 2^16, build_z towers above that threshold.
void push_z_power(Word& w, const Int& v, RenderStyle style) {
  if (v == 0) return;
  if (style == RenderStyle::plain_z || boost::multiprecision::abs(v) <= 65536) {
    w.push(words::sym_z(), v);
    return;
  }
  Word tower = build_z(boost::multiprecision::abs(v));
  if (v < 0) tower = words::invert(tower);
  for (const auto& run : tower.runs()) w.push(run.sym, run.exp);
}

}  // namespace

Word render_k0(const K0NormalForm& nf, RenderStyle style) {
  Word w(words::k_alphabet());
  push_z_power(w, nf.a, style);
  if (nf.b) w.push(words::sym_j(), 1);
  for (const Int& i : nf.indices) {
    push_z_power(w, i, style);
    w.push(words::sym_x(0), 1);
    push_z_power(w, -i, style);
  }
  return w;
}

Word render_britton(const BrittonForm& f, RenderStyle style) {
  Word w = render_k0(f.w.front(), style);
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    w.push(words::sym_t(), f.c[i]);
    Word seg = render_k0(f.w[i + 1], style);
    for (const auto& run : seg.runs()) w.push(run.sym, run.exp);
  }
  return w;
}

std::vector<Word> k_relators(std::int64_t window) {
  if (window < 1 || window > 65536)
    throw domain_error("k_relators requires 1 <= window <= 65536");
  const auto K = words::k_alphabet();
  std::vector<Word> rel;

  Word jj(K);
  jj.push(words::sym_j(), 2);
  rel.push_back(jj);

  Word xx(K);
  xx.push(words::sym_x(0), 2);
  rel.push_back(xx);

  Word xj(K);  // [x0, J]
  xj.push(words::sym_x(0), 1);
  xj.push(words::sym_j(), 1);
  xj.push(words::sym_x(0), -1);
  xj.push(words::sym_j(), -1);
  rel.push_back(xj);

  Word tz(K);  // t z t^-1 z^-2
  tz.push(words::sym_t(), 1);
  tz.push(words::sym_z(), 1);
  tz.push(words::sym_t(), -1);
  tz.push(words::sym_z(), -2);
  rel.push_back(tz);

  auto xi_word = [&](std::int64_t i, int sign) {
    Word w(K);
    w.push(words::sym_z(), Int(i));
    w.push(words::sym_x(0), sign);
    w.push(words::sym_z(), Int(-i));
    return w;
  };
  for (std::int64_t i = -window; i <= window; ++i) {
    for (std::int64_t j = -window; j <= window; ++j) {
      if (i == j) continue;
      Word w(K);  // [x_i, x_j] J
      for (const auto& part : {xi_word(i, 1), xi_word(j, 1), xi_word(i, -1),
                               xi_word(j, -1)})
        for (const auto& run : part.runs()) w.push(run.sym, run.exp);
      w.push(words::sym_j(), 1);
      rel.push_back(std::move(w));
    }
  }
  return rel;
}

}  // namespace klab::kgroup
