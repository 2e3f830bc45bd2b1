#include "mennicke/word.hpp"

#include <cctype>
#include <random>

namespace mennicke {

std::string_view alphabet(GroupId group) {
  switch (group) {
    case GroupId::M: return "xyz";
    case GroupId::V: return "uvw";
    case GroupId::G: return "XYZABCD";
    case GroupId::P: return "XYZABCDE";
  }
  return "";
}

std::string_view group_name(GroupId group) {
  switch (group) {
    case GroupId::M: return "M";
    case GroupId::V: return "V";
    case GroupId::G: return "G";
    case GroupId::P: return "P";
  }
  return "?";
}

std::optional<GroupId> parse_group_id(std::string_view name) {
  if (name == "M") return GroupId::M;
  if (name == "V") return GroupId::V;
  if (name == "G") return GroupId::G;
  if (name == "P") return GroupId::P;
  return std::nullopt;
}

int generator_rank(GroupId group, char gen) {
  auto alpha = alphabet(group);
  auto pos = alpha.find(gen);
  return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

Word::Word(const std::vector<Letter>& letters) {
  for (const auto& l : letters) append(l);
}

Word Word::letter(char gen, const Int& exp) {
  Word w;
  w.append(gen, exp);
  return w;
}

void Word::append(char gen, const Int& exp) {
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == gen) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({gen, exp});
}

void Word::append(const Word& w) {
  for (const auto& l : w.letters_) append(l);
}

Word Word::inverse() const {
  Word out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.append(it->gen, -it->exp);
  return out;
}

Word Word::pow(long n) const {
  Word base = n < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < (n < 0 ? -n : n); ++i) out.append(base);
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("position " + std::to_string(position) + ": " + message),
      position_(position) {}

Word parse_word(std::string_view text, GroupId group) {
  Word out;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < n) {
    const std::size_t start = pos;
    const char gen = text[pos];
    if (gen == '1' && (pos + 1 == n || std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;
      skip_ws();
      continue;
    }
    if (generator_rank(group, gen) < 0) {
      throw ParseError(start, std::string("unknown generator '") + gen + "' for group " +
                                  std::string(group_name(group)));
    }
    ++pos;
    Int exp = 1;
    if (pos < n && text[pos] == '^') {
      ++pos;
      const std::size_t num_start = pos;
      bool negative = false;
      if (pos < n && text[pos] == '-') {
        negative = true;
        ++pos;
      }
      const std::size_t digits_start = pos;
      while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == digits_start) throw ParseError(num_start, "expected integer exponent");
      exp = Int(std::string(text.substr(digits_start, pos - digits_start)));
      if (negative) exp = -exp;
    }
    if (pos < n && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      throw ParseError(pos, "expected whitespace between terms");
    }
    out.append(gen, exp);
    skip_ws();
  }
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.gen;
    if (l.exp != 1) {
      out += '^';
      out += l.exp.str();
    }
  }
  return out;
}

Word random_word(std::uint64_t seed, GroupId group, std::size_t max_len, unsigned max_exp) {
  std::mt19937_64 rng(seed);
  auto alpha = alphabet(group);
  // Plain modulo reduction keeps the stream identical across standard libraries.
  const std::size_t len = static_cast<std::size_t>(rng() % (max_len + 1));
  Word out;
  for (std::size_t i = 0; i < len; ++i) {
    // Draw a generator different from the previous letter so that exponents
    // never merge past max_exp.
    char gen = alpha[rng() % alpha.size()];
    if (!out.empty() && out.letters().back().gen == gen) {
      const auto last = alpha.find(gen);
      gen = alpha[(last + 1 + rng() % (alpha.size() - 1)) % alpha.size()];
    }
    long e = static_cast<long>(rng() % max_exp) + 1;
    if (rng() & 1) e = -e;
    out.append(gen, e);
  }
  return out;
}

}  // namespace mennicke
