#pragma once

#include "mennicke/word.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mennicke {

// One oriented rule family. Pair rules rewrite left^e right^f with
// rank(left) > rank(right); fold rules (right == 0) bring a single letter
// into its normal-form exponent range.
struct RewriteRule {
  std::string name;
  char left = 0;
  char right = 0;
};

class RuleTable {
 public:
  // Tables exist for M, G and P. V words are collected through M.
  static const RuleTable& of(GroupId group);

  GroupId group() const { return group_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  // Replacement for a letter outside its normal range, or nothing.
  std::optional<Word> fold(const Letter& l) const;

  // Replacement word for left * right when rank(left) > rank(right).
  // Returns nothing for E^e with e outside {1} (fold first).
  std::optional<Word> reorder(const Letter& left, const Letter& right) const;

 private:
  explicit RuleTable(GroupId group);
  GroupId group_;
  std::vector<RewriteRule> rules_;
};

// Words over u, v, w become M words through u = x y, v = y z, w = z x.
Word v_to_m_word(const Word& w);

// Collection from the left with a stack; returns the normal-form word. For
// group V the result is the M normal form of the element.
Word collect(const Word& w, GroupId group);

// Applies rewrites at pseudorandom positions until none applies. Used only
// to test that the normal form does not depend on the order of rewriting.
Word collect_randomized(const Word& w, GroupId group, std::uint64_t seed);

}  // namespace mennicke
