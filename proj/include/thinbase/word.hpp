#ifndef THINBASE_WORD_HPP
#define THINBASE_WORD_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "thinbase/cover.hpp"
#include "thinbase/group.hpp"
#include "thinbase/subset_mask.hpp"

namespace thinbase {

struct Syllable {
  int generator = 0;
  long long exponent = 0;
};

// Freely reduced nontrivial word in F_rank.  Construction reduces the raw
// syllable sequence and rejects words that reduce to the identity.
class FreeWord {
public:
  FreeWord(int rank, std::vector<Syllable> raw);

  // Literal syntax: letters a..z as generators, caret for exponents,
  // e.g. "a^-1b^-1ab" or "a^2".  Rank is the highest letter used.
  static FreeWord parse(const std::string& literal);

  static FreeWord commutator() { return parse("a^-1b^-1ab"); }

  int rank() const { return rank_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::string str() const;

private:
  int rank_;
  std::vector<Syllable> syllables_;
};

// Substitute tuple[i] for generator i and multiply left to right; exponents
// by repeated squaring.
int evaluate_word(const FiniteGroup& G, const FreeWord& w, std::span<const int> tuple);

struct WordImage {
  SubsetMask image;
  bool exact = false;  // true iff computed by exhaustive enumeration of G^rank
  long long tuples_evaluated = 0;
};

inline constexpr long long kExhaustiveTupleBudget = 100'000'000;

// Exhaustive image of the word map G^rank -> G.  Errors when |G|^rank
// exceeds the tuple budget.
WordImage word_image_exhaustive(const FiniteGroup& G, const FreeWord& w);

// Sampled image: `trials` uniform tuples (default 200*|G| when trials==0),
// closed under conjugation before returning (sound: word images are unions
// of conjugacy classes).  Always a subset of the exact image.
WordImage word_image_sampled(const FiniteGroup& G, const FreeWord& w, long long trials, uint64_t seed);

struct WaringCheckResult {
  bool covered = false;
  SubsetMask uncovered;
};

// Does w1(G) * w2(G) = G?  Images computed exhaustively.
WaringCheckResult waring_check(const FiniteGroup& G, const FreeWord& w1, const FreeWord& w2);

}  // namespace thinbase

#endif
