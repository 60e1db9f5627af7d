#include "klab/clifford.hpp"

#include <cassert>
#include <cstddef>

#include "klab/error.hpp"

namespace klab::clifford {

std::pair<CNormalForm, ApplicationCount> c_multiply(const CNormalForm& g1,
                                                    const CNormalForm& g2,
                                                    MergeStats* stats) {
  const auto& L1 = g1.indices;
  const auto& L2 = g2.indices;

  CNormalForm r;
  r.b = g1.b ^ g2.b;
  r.indices.reserve(L1.size() + L2.size());

  // Single merge pass. p tracks the parity of elements remaining in L1;
  // every element leaving L2 adds p to the J-bit. On equal heads both drop:
  // the L1 element leaves first (flipping p), then the L2 element.
  int p = static_cast<int>(L1.size() & 1);
  std::size_t i = 0, j = 0;
  while (i < L1.size() && j < L2.size()) {
    if (stats) ++stats->comparisons;
    if (L1[i] < L2[j]) {
      r.indices.push_back(L1[i++]);
      p ^= 1;
    } else if (L2[j] < L1[i]) {
      r.indices.push_back(L2[j++]);
      r.b ^= p;
    } else {
      ++i;
      ++j;
      p ^= 1;
      r.b ^= p;
    }
  }
  for (; i < L1.size(); ++i) r.indices.push_back(L1[i]);
  for (; j < L2.size(); ++j) r.indices.push_back(L2[j]);  // p == 0 here

  // Replay of the canonical rewriting schedule for the application count:
  // insert L1's letters right to left into g2's form, tracking the front
  // J-exponent a. Inserting x_u passes J^a, anticommutes past the k_u
  // smaller letters, coalesces the produced J's in pairs, and squares off
  // a colliding x_u; the J^{b1} letter goes in last.
  ApplicationCount cnt;
  std::uint64_t a = static_cast<std::uint64_t>(g2.b);
  std::ptrdiff_t jj = static_cast<std::ptrdiff_t>(L2.size()) - 1;
  for (std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(L1.size()) - 1;
       ii >= 0; --ii) {
    const Int& u = L1[static_cast<std::size_t>(ii)];
    while (jj >= 0 && L2[static_cast<std::size_t>(jj)] > u) --jj;
    bool collide = jj >= 0 && L2[static_cast<std::size_t>(jj)] == u;
    std::uint64_t k = static_cast<std::uint64_t>(jj + 1) - (collide ? 1 : 0);

    cnt.j_central += a;
    cnt.anticommute += k;
    cnt.j_central += k / 2;
    cnt.j_square += k / 2;
    if (k & 1) {
      if (a == 1) {
        ++cnt.j_square;
        a = 0;
      } else {
        a = 1;
      }
    }
    if (collide) ++cnt.square;
  }
  if (g1.b) {
    if (a == 1) {
      ++cnt.j_square;
      a = 0;
    } else {
      a = 1;
    }
  }
  assert(a == static_cast<std::uint64_t>(r.b));
  (void)a;

  return {std::move(r), cnt};
}

namespace {

CNormalForm tree_product(const std::vector<CNormalForm>& items,
                         std::size_t lo, std::size_t hi) {
  if (lo == hi) return CNormalForm{};
  if (hi - lo == 1) return items[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  return c_multiply(tree_product(items, lo, mid), tree_product(items, mid, hi))
      .first;
}

}  // namespace

CNormalForm c_normal_form(const words::Word& w) {
  const auto ctx = w.alphabet().ctx;
  if (ctx != words::Ctx::Cn && ctx != words::Ctx::Cinf)
    throw domain_error("c_normal_form needs a word over C_n or C_inf, got " +
                       words::alphabet_name(w.alphabet()));

  // J^-1 = J and x_i^-1 = x_i in the group, so only exponent parity counts.
  std::vector<CNormalForm> items;
  items.reserve(w.runs().size());
  for (const auto& run : w.runs()) {
    if (run.exp % 2 == 0) continue;
    CNormalForm g;
    if (run.sym.gen == words::Gen::J)
      g.b = 1;
    else
      g.indices.push_back(run.sym.index);
    items.push_back(std::move(g));
  }
  return tree_product(items, 0, items.size());
}

std::uint64_t count_bound(int n) {
  if (n < 1) throw domain_error("count_bound requires n >= 1");
  auto m = static_cast<std::uint64_t>(n);
  return (m + 1) * (m + 1);
}

std::vector<CNormalForm> enumerate_group(int n) {
  if (n < 1 || n > 8)
    throw domain_error("enumerate_group requires 1 <= n <= 8");
  std::size_t count = std::size_t{1} << (n + 1);
  std::vector<CNormalForm> out;
  out.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    CNormalForm g;
    g.b = static_cast<int>(idx & 1);
    std::size_t mask = idx >> 1;
    for (int i = 1; i <= n; ++i)
      if (mask & (std::size_t{1} << (i - 1))) g.indices.push_back(i);
    out.push_back(std::move(g));
  }
  return out;
}

std::size_t element_index(const CNormalForm& g, int n) {
  if (n < 1 || n > 8)
    throw domain_error("element_index requires 1 <= n <= 8");
  std::size_t mask = 0;
  for (const Int& i : g.indices) {
    if (i < 1 || i > n)
      throw domain_error("element has an index outside [1, " +
                         std::to_string(n) + "]");
    mask |= std::size_t{1} << static_cast<std::size_t>(i.convert_to<int>() - 1);
  }
  return 2 * mask + static_cast<std::size_t>(g.b);
}

}  // namespace klab::clifford
