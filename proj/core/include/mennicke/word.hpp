#pragma once

#include "mennicke/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mennicke {

// Ambient groups with a word alphabet. V words are evaluated through M.
enum class GroupId { M, V, G, P };

std::string_view alphabet(GroupId group);
std::string_view group_name(GroupId group);
std::optional<GroupId> parse_group_id(std::string_view name);

// Position of gen in the alphabet of group, or -1. This is also the
// collection order (x < y < z, X < Y < Z < A < B < C < D < E).
int generator_rank(GroupId group, char gen);

struct Letter {
  char gen = 0;
  Int exp;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word: no zero exponents, no two adjacent letters with the
// same generator.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters);

  static Word letter(char gen, const Int& exp = 1);

  void append(char gen, const Int& exp);
  void append(const Letter& l) { append(l.gen, l.exp); }
  void append(const Word& w);

  Word inverse() const;
  Word pow(long n) const;

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  std::vector<Letter>::const_iterator begin() const { return letters_.begin(); }
  std::vector<Letter>::const_iterator end() const { return letters_.end(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar: whitespace separated terms GEN or GEN^INT. The lone token "1"
// denotes the identity so that printing and parsing round-trip.
Word parse_word(std::string_view text, GroupId group);

// Words print as "x y^-2 z"; the empty word prints as "1".
std::string to_string(const Word& w);

Word random_word(std::uint64_t seed, GroupId group, std::size_t max_len,
                 unsigned max_exp);

}  // namespace mennicke
