#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "klab/bigint.hpp"
#include "klab/error.hpp"

namespace klab::words {

enum class Gen : std::uint8_t { J, T, Z, X };

// A generator symbol. `index` is meaningful only for X (x_i); it is 0 for
// the others.
struct Sym {
  Gen gen = Gen::J;
  Int index = 0;

  friend bool operator==(const Sym& a, const Sym& b) {
    return a.gen == b.gen && (a.gen != Gen::X || a.index == b.index);
  }
  friend bool operator!=(const Sym& a, const Sym& b) { return !(a == b); }
};

inline Sym sym_j() { return {Gen::J, 0}; }
inline Sym sym_t() { return {Gen::T, 0}; }
inline Sym sym_z() { return {Gen::Z, 0}; }
inline Sym sym_x(Int i = 0) { return {Gen::X, std::move(i)}; }

// Alphabet contexts. Cn carries its rank; the others ignore `n`.
//   Cn(n): {J, x_1..x_n}        Cinf: {J, x_i : i in Z}
//   K0:    {J, z, x_0}          K:    {J, t, z, x_0}
enum class Ctx : std::uint8_t { Cn, Cinf, K0, K };

struct Alphabet {
  Ctx ctx = Ctx::K;
  int n = 0;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.ctx == b.ctx && (a.ctx != Ctx::Cn || a.n == b.n);
  }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) {
    return !(a == b);
  }
};

inline Alphabet cn_alphabet(int n) { return {Ctx::Cn, n}; }
inline Alphabet cinf_alphabet() { return {Ctx::Cinf, 0}; }
inline Alphabet k0_alphabet() { return {Ctx::K0, 0}; }
inline Alphabet k_alphabet() { return {Ctx::K, 0}; }

std::string alphabet_name(const Alphabet& a);

// Throws domain_error if sym is not a letter of the alphabet.
void check_symbol(const Sym& sym, const Alphabet& a);

// A maximal run of one symbol: exp > 0 means |exp| plain letters, exp < 0
// means |exp| inverse letters. exp is never 0.
struct Run {
  Sym sym;
  Int exp = 1;

  friend bool operator==(const Run& a, const Run& b) {
    return a.sym == b.sym && a.exp == b.exp;
  }
};

// A free word over one of the alphabets. Letters are stored run-length
// encoded (adjacent equal-sign runs of the same symbol are merged on
// construction), so z^(2^70) is a single run. length() reports the expanded
// letter count, which is the input-size convention all complexity contracts
// are stated against.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet a) : alpha_(a) {}

  const Alphabet& alphabet() const { return alpha_; }
  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }

  Int length() const {
    Int n = 0;
    for (const Run& r : runs_) n += boost::multiprecision::abs(r.exp);
    return n;
  }

  // Append sym^exp, merging with the trailing run when the symbol and sign
  // match. No cancellation (that is free_reduce's job). exp 0 is a no-op.
  void push(const Sym& sym, Int exp);
  void push_letter(const Sym& sym, int sign) { push(sym, sign); }

  friend bool operator==(const Word& a, const Word& b) {
    return a.alpha_ == b.alpha_ && a.runs_ == b.runs_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  Alphabet alpha_;
  std::vector<Run> runs_;
};

// Parse `text` in the word grammar:
//   word := { term } ; term := gen [ "^" int ] ;
//   gen  := "J" | "t" | "z" | "x" [ int ] ; int := [ "-" ] digit { digit }
// Terms are whitespace-separated; "x" with no index means x0. Exponents
// expand to |exp| letters (run-length encoded internally); no free
// reduction is performed. Throws parse_error / domain_error.
Word parse_word(std::string_view text, const Alphabet& a);

// Serialize back to the grammar. parse_word(render_word(w), w.alphabet())
// == w for every word.
std::string render_word(const Word& w);

// Cancel all adjacent s s^-1 / s^-1 s pairs, iterated to a fixed point.
Word free_reduce(const Word& w);

// Reverse letter order and flip signs.
Word invert(const Word& w);

// Concatenate without reduction. Throws domain_error on alphabet mismatch.
Word concat(const Word& w1, const Word& w2);

// Re-tag a word with another alphabet (validates every symbol).
Word retag(const Word& w, const Alphabet& a);

}  // namespace klab::words
