#include "klab/words.hpp"

#include <cctype>
#include <utility>

namespace klab::words {

std::string alphabet_name(const Alphabet& a) {
  switch (a.ctx) {
    case Ctx::Cn:
      return "C_n(" + std::to_string(a.n) + ")";
    case Ctx::Cinf:
      return "C_inf";
    case Ctx::K0:
      return "K_0";
    case Ctx::K:
      return "K";
  }
  return "?";
}

namespace {

std::string sym_name(const Sym& s) {
  switch (s.gen) {
    case Gen::J:
      return "J";
    case Gen::T:
      return "t";
    case Gen::Z:
      return "z";
    case Gen::X:
      return "x" + s.index.str();
  }
  return "?";
}

}  // namespace

void check_symbol(const Sym& sym, const Alphabet& a) {
  switch (a.ctx) {
    case Ctx::Cn:
      if (sym.gen == Gen::J) return;
      if (sym.gen == Gen::X && sym.index >= 1 && sym.index <= a.n) return;
      break;
    case Ctx::Cinf:
      if (sym.gen == Gen::J || sym.gen == Gen::X) return;
      break;
    case Ctx::K0:
      if (sym.gen == Gen::J || sym.gen == Gen::Z) return;
      if (sym.gen == Gen::X && sym.index == 0) return;
      break;
    case Ctx::K:
      if (sym.gen == Gen::J || sym.gen == Gen::Z || sym.gen == Gen::T) return;
      if (sym.gen == Gen::X && sym.index == 0) return;
      break;
  }
  throw domain_error("generator " + sym_name(sym) +
                     " is not a letter of alphabet " + alphabet_name(a));
}

void Word::push(const Sym& sym, Int exp) {
  if (exp == 0) return;
  if (!runs_.empty()) {
    Run& back = runs_.back();
    if (back.sym == sym && (back.exp < 0) == (exp < 0)) {
      back.exp += exp;
      return;
    }
  }
  runs_.push_back(Run{sym, std::move(exp)});
}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

// Parses [ "-" ] digit { digit } starting at i; advances i.
Int parse_int(std::string_view text, std::size_t& i) {
  std::size_t start = i;
  bool neg = false;
  if (i < text.size() && text[i] == '-') {
    neg = true;
    ++i;
  }
  std::size_t digits = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    ++i;
  if (i == digits) throw parse_error("expected an integer", start);
  Int v(std::string(text.substr(digits, i - digits)));
  return neg ? Int(-v) : v;
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& a) {
  Word w(a);
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    Sym sym;
    switch (text[i]) {
      case 'J':
        sym = sym_j();
        ++i;
        break;
      case 't':
        sym = sym_t();
        ++i;
        break;
      case 'z':
        sym = sym_z();
        ++i;
        break;
      case 'x': {
        ++i;
        Int index = 0;
        if (i < text.size() &&
            (text[i] == '-' ||
             std::isdigit(static_cast<unsigned char>(text[i]))))
          index = parse_int(text, i);
        sym = sym_x(std::move(index));
        break;
      }
      default:
        throw parse_error(std::string("unknown generator '") + text[i] + "'",
                          i);
    }
    Int exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      exp = parse_int(text, i);
    }
    if (i < text.size() && !is_space(text[i]))
      throw parse_error("expected whitespace after term starting here", start);
    check_symbol(sym, a);
    w.push(sym, std::move(exp));
  }
  return w;
}

std::string render_word(const Word& w) {
  std::string out;
  for (const Run& r : w.runs()) {
    if (!out.empty()) out += ' ';
    out += sym_name(r.sym);
    if (r.exp != 1) out += "^" + r.exp.str();
  }
  return out;
}

Word free_reduce(const Word& w) {
  std::vector<Run> stack;
  for (const Run& run : w.runs()) {
    Run r = run;
    while (r.exp != 0 && !stack.empty() && stack.back().sym == r.sym) {
      Run& top = stack.back();
      if ((top.exp < 0) == (r.exp < 0)) {
        top.exp += r.exp;
        r.exp = 0;
      } else {
        // Opposite signs: cancel letter by letter in one addition.
        Int merged = top.exp + r.exp;
        if ((merged < 0) == (top.exp < 0) && merged != 0) {
          top.exp = merged;
          r.exp = 0;
        } else {
          stack.pop_back();
          r.exp = merged;
        }
      }
    }
    if (r.exp != 0) stack.push_back(std::move(r));
  }
  Word out(w.alphabet());
  for (Run& r : stack) out.push(r.sym, std::move(r.exp));
  return out;
}

Word invert(const Word& w) {
  Word out(w.alphabet());
  const auto& runs = w.runs();
  for (auto it = runs.rbegin(); it != runs.rend(); ++it)
    out.push(it->sym, -it->exp);
  return out;
}

Word concat(const Word& w1, const Word& w2) {
  if (w1.alphabet() != w2.alphabet())
    throw domain_error("cannot concatenate words over " +
                       alphabet_name(w1.alphabet()) + " and " +
                       alphabet_name(w2.alphabet()));
  Word out = w1;
  for (const Run& r : w2.runs()) out.push(r.sym, r.exp);
  return out;
}

Word retag(const Word& w, const Alphabet& a) {
  Word out(a);
  for (const Run& r : w.runs()) {
    check_symbol(r.sym, a);
    out.push(r.sym, r.exp);
  }
  return out;
}

}  // namespace klab::words
