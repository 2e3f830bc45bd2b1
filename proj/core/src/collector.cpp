#include "mennicke/collector.hpp"

#include <random>
#include <stdexcept>

namespace mennicke {
namespace {

// Conjugation by D on the generators below it: D g D^-1.
char sigma(char g) {
  switch (g) {
    case 'X': return 'Z';
    case 'Y': return 'X';
    case 'Z': return 'Y';
    case 'A': return 'C';
    case 'B': return 'A';
    case 'C': return 'B';
  }
  return g;
}

// Generator that A, B, C square into, and the inner generator each one twists.
char square_of(char g) { return g == 'A' ? 'Z' : g == 'B' ? 'X' : 'Y'; }
char twisted_by(char g) { return g == 'A' ? 'X' : g == 'B' ? 'Y' : 'Z'; }

Word word_of(std::initializer_list<Letter> letters) { return Word(std::vector<Letter>(letters)); }

// Rules shared by M (lower case) and the inner part of G (upper case). The
// replacement is the pair first, second; returns false when no rule applies.
bool swap_inner(char x, char y, char z, const Letter& l, const Letter& r, Letter& first,
                Letter& second) {
  if (l.gen == y && r.gen == x) {  // y^b x^a = x^(a(-1)^b) y^b
    first = {x, signed_by(r.exp, l.exp)};
    second = l;
  } else if (l.gen == z && r.gen == y) {  // z^c y^b = y^(b(-1)^c) z^c
    first = {y, signed_by(r.exp, l.exp)};
    second = l;
  } else if (l.gen == z && r.gen == x) {  // z^c x^a = x^a z^(c(-1)^a)
    first = r;
    second = {z, signed_by(l.exp, r.exp)};
  } else {
    return false;
  }
  return true;
}

std::optional<Word> reorder_inner(char x, char y, char z, const Letter& l, const Letter& r) {
  Letter first, second;
  if (!swap_inner(x, y, z, l, r, first, second)) return std::nullopt;
  return word_of({first, second});
}

std::optional<Word> reorder_g(const Letter& l, const Letter& r) {
  if (auto w = reorder_inner('X', 'Y', 'Z', l, r)) return w;
  switch (l.gen) {
    case 'A':
    case 'B':
    case 'C':
      if (r.gen == twisted_by(l.gen)) {  // A^e X^f = X^f Z^(-2e[f odd]) A^e
        Word w = Word::letter(r.gen, r.exp);
        if (is_odd(r.exp)) w.append(square_of(l.gen), -2 * l.exp);
        w.append(l);
        return w;
      }
      return word_of({r, l});
    case 'D': {
      const long e = floor_mod(l.exp, 3);
      char g = r.gen;
      for (long i = 0; i < e; ++i) g = sigma(g);
      return word_of({{g, r.exp}, l});
    }
  }
  return std::nullopt;
}

std::optional<Word> reorder_p(const Letter& l, const Letter& r) {
  if (l.gen != 'E') return reorder_g(l, r);
  if (l.exp != 1) return std::nullopt;
  switch (r.gen) {
    case 'X':
    case 'Y':
    case 'Z': {
      // E g = (g T^-1) E where T is the paired generator of g.
      const char t = r.gen == 'X' ? 'A' : r.gen == 'Y' ? 'B' : 'C';
      Word unit = r.exp > 0 ? word_of({{r.gen, 1}, {t, -1}}) : word_of({{t, 1}, {r.gen, -1}});
      Word w;
      const Int count = r.exp > 0 ? r.exp : Int(-r.exp);
      for (Int i = 0; i < count; ++i) w.append(unit);
      w.append(l);
      return w;
    }
    default:
      return word_of({r, l});
  }
}

}  // namespace

RuleTable::RuleTable(GroupId group) : group_(group) {
  if (group == GroupId::V) throw std::invalid_argument("V words are collected through M");
  auto add = [&](std::string name, char left, char right) {
    rules_.push_back({std::move(name), left, right});
  };
  if (group == GroupId::M) {
    add("y^b x^a -> x^(a(-1)^b) y^b", 'y', 'x');
    add("z^c y^b -> y^(b(-1)^c) z^c", 'z', 'y');
    add("z^c x^a -> x^a z^(c(-1)^a)", 'z', 'x');
    return;
  }
  add("Y^b X^a -> X^(a(-1)^b) Y^b", 'Y', 'X');
  add("Z^c Y^b -> Y^(b(-1)^c) Z^c", 'Z', 'Y');
  add("Z^c X^a -> X^a Z^(c(-1)^a)", 'Z', 'X');
  add("A^e X^f -> X^f Z^(-2e[f odd]) A^e", 'A', 'X');
  add("A^e Y^f -> Y^f A^e", 'A', 'Y');
  add("A^e Z^f -> Z^f A^e", 'A', 'Z');
  add("B^e X^f -> X^f B^e", 'B', 'X');
  add("B^e Y^f -> Y^f X^(-2e[f odd]) B^e", 'B', 'Y');
  add("B^e Z^f -> Z^f B^e", 'B', 'Z');
  add("B^e A^f -> A^f B^e", 'B', 'A');
  add("C^e X^f -> X^f C^e", 'C', 'X');
  add("C^e Y^f -> Y^f C^e", 'C', 'Y');
  add("C^e Z^f -> Z^f Y^(-2e[f odd]) C^e", 'C', 'Z');
  add("C^e A^f -> A^f C^e", 'C', 'A');
  add("C^e B^f -> B^f C^e", 'C', 'B');
  for (char g : std::string_view("XYZABC"))
    add(std::string("D^e ") + g + "^f -> sigma^e(" + g + ")^f D^e", 'D', g);
  add("A^e -> Z^(2q) A^r, e = 2q + r", 'A', 0);
  add("B^e -> X^(2q) B^r, e = 2q + r", 'B', 0);
  add("C^e -> Y^(2q) C^r, e = 2q + r", 'C', 0);
  add("D^e -> D^(e mod 3)", 'D', 0);
  if (group == GroupId::P) {
    add("E X^f -> (X A^-1)^f E", 'E', 'X');
    add("E Y^f -> (Y B^-1)^f E", 'E', 'Y');
    add("E Z^f -> (Z C^-1)^f E", 'E', 'Z');
    for (char g : std::string_view("ABCD")) add(std::string("E ") + g + "^f -> " + g + "^f E", 'E', g);
    add("E^e -> (A B C)^q E^r, e = 2q + r", 'E', 0);
  }
}

const RuleTable& RuleTable::of(GroupId group) {
  static const RuleTable m(GroupId::M);
  static const RuleTable g(GroupId::G);
  static const RuleTable p(GroupId::P);
  switch (group) {
    case GroupId::M: return m;
    case GroupId::G: return g;
    case GroupId::P: return p;
    case GroupId::V: break;
  }
  throw std::invalid_argument("no rule table for V");
}

std::optional<Word> RuleTable::fold(const Letter& l) const {
  if (group_ == GroupId::M) return std::nullopt;
  switch (l.gen) {
    case 'A':
    case 'B':
    case 'C':
    case 'E': {
      if (l.exp == 1) return std::nullopt;
      const long r = floor_mod(l.exp, 2);
      const Int q = floor_div(l.exp, 2);
      Word w;
      if (l.gen == 'E') {
        w.append('A', q);
        w.append('B', q);
        w.append('C', q);
      } else {
        w.append(square_of(l.gen), 2 * q);
      }
      w.append(l.gen, r);
      return w;
    }
    case 'D': {
      const long r = floor_mod(l.exp, 3);
      if (r == l.exp) return std::nullopt;
      return Word::letter('D', r);
    }
  }
  return std::nullopt;
}

std::optional<Word> RuleTable::reorder(const Letter& left, const Letter& right) const {
  if (generator_rank(group_, left.gen) <= generator_rank(group_, right.gen)) return std::nullopt;
  switch (group_) {
    case GroupId::M: return reorder_inner('x', 'y', 'z', left, right);
    case GroupId::G: return reorder_g(left, right);
    case GroupId::P: return reorder_p(left, right);
    case GroupId::V: break;
  }
  return std::nullopt;
}

Word v_to_m_word(const Word& w) {
  Word out;
  for (const auto& l : w) {
    const char a = l.gen == 'u' ? 'x' : l.gen == 'v' ? 'y' : 'z';
    const char b = l.gen == 'u' ? 'y' : l.gen == 'v' ? 'z' : 'x';
    const Word unit = l.exp > 0 ? word_of({{a, 1}, {b, 1}}) : word_of({{b, -1}, {a, -1}});
    const Int count = l.exp > 0 ? l.exp : Int(-l.exp);
    for (Int i = 0; i < count; ++i) out.append(unit);
  }
  return out;
}

Word collect(const Word& w, GroupId group) {
  if (group == GroupId::V) return collect(v_to_m_word(w), GroupId::M);
  const RuleTable& rules = RuleTable::of(group);
  std::vector<Letter> done;
  std::vector<Letter> pending(w.letters().rbegin(), w.letters().rend());
  auto push_word = [&](const Word& rep) {
    for (auto it = rep.letters().rbegin(); it != rep.letters().rend(); ++it) pending.push_back(*it);
  };
  while (!pending.empty()) {
    Letter cur = std::move(pending.back());
    pending.pop_back();
    if (cur.exp == 0) continue;
    if (auto f = rules.fold(cur)) {
      push_word(*f);
      continue;
    }
    if (done.empty()) {
      done.push_back(std::move(cur));
      continue;
    }
    Letter& top = done.back();
    if (top.gen == cur.gen) {
      cur.exp += top.exp;
      done.pop_back();
      pending.push_back(std::move(cur));
      continue;
    }
    if (generator_rank(group, top.gen) < generator_rank(group, cur.gen)) {
      done.push_back(std::move(cur));
      continue;
    }
    Letter left = std::move(top);
    done.pop_back();
    if (group == GroupId::M) {  // avoids building a Word per swap
      Letter first, second;
      if (!swap_inner('x', 'y', 'z', left, cur, first, second))
        throw std::logic_error("collector: no rule for out-of-order pair");
      pending.push_back(std::move(second));
      pending.push_back(std::move(first));
      continue;
    }
    auto rep = rules.reorder(left, cur);
    if (!rep) throw std::logic_error("collector: no rule for out-of-order pair");
    push_word(*rep);
  }
  return Word(done);
}

Word collect_randomized(const Word& w, GroupId group, std::uint64_t seed) {
  if (group == GroupId::V) return collect_randomized(v_to_m_word(w), GroupId::M, seed);
  const RuleTable& rules = RuleTable::of(group);
  std::mt19937_64 rng(seed);
  Word cur = w;
  for (;;) {
    const auto& ls = cur.letters();
    const std::size_t n = ls.size();
    if (n == 0) break;
    // Scan cyclically from a random start for the first applicable rewrite.
    const std::size_t start = static_cast<std::size_t>(rng() % n);
    bool rewrote = false;
    for (std::size_t step = 0; step < n && !rewrote; ++step) {
      const std::size_t i = (start + step) % n;
      std::optional<Word> rep;
      std::size_t span = 1;
      if ((rng() & 1) || i + 1 == n) {
        rep = rules.fold(ls[i]);
      }
      if (!rep && i + 1 < n) {
        rep = rules.reorder(ls[i], ls[i + 1]);
        span = 2;
      }
      if (!rep) {
        rep = rules.fold(ls[i]);
        span = 1;
      }
      if (!rep) continue;
      std::vector<Letter> next(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(i));
      Word rebuilt(next);
      rebuilt.append(*rep);
      for (std::size_t k = i + span; k < n; ++k) rebuilt.append(ls[k]);
      cur = std::move(rebuilt);
      rewrote = true;
    }
    if (!rewrote) break;
  }
  return cur;
}

}  // namespace mennicke
