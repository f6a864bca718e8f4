#include "thinbase/word.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "thinbase/rng.hpp"

namespace thinbase {

FreeWord::FreeWord(int rank, std::vector<Syllable> raw) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("word rank must be >= 1");
  for (const auto& s : raw)
    if (s.generator < 0 || s.generator >= rank)
      throw std::invalid_argument("syllable generator out of range");

  for (const auto& s : raw) {
    if (s.exponent == 0) continue;
    if (!syllables_.empty() && syllables_.back().generator == s.generator) {
      syllables_.back().exponent += s.exponent;
      if (syllables_.back().exponent == 0) syllables_.pop_back();  // may expose a new merge
    } else {
      syllables_.push_back(s);
    }
  }
  if (syllables_.empty()) throw std::invalid_argument("word reduces to the identity");
}

FreeWord FreeWord::parse(const std::string& literal) {
  std::vector<Syllable> sylls;
  int max_gen = -1;
  size_t i = 0;
  while (i < literal.size()) {
    char c = literal[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c < 'a' || c > 'z') throw std::invalid_argument("bad word literal: expected letter at '" + literal.substr(i) + "'");
    Syllable s;
    s.generator = c - 'a';
    s.exponent = 1;
    max_gen = std::max(max_gen, s.generator);
    ++i;
    if (i < literal.size() && literal[i] == '^') {
      ++i;
      size_t start = i;
      if (i < literal.size() && (literal[i] == '-' || literal[i] == '+')) ++i;
      while (i < literal.size() && std::isdigit(static_cast<unsigned char>(literal[i]))) ++i;
      if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(literal[start]))))
        throw std::invalid_argument("bad exponent in word literal");
      s.exponent = std::stoll(literal.substr(start, i - start));
    }
    sylls.push_back(s);
  }
  if (max_gen < 0) throw std::invalid_argument("empty word literal");
  return FreeWord(max_gen + 1, std::move(sylls));
}

std::string FreeWord::str() const {
  std::string out;
  for (const auto& s : syllables_) {
    out += static_cast<char>('a' + s.generator);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

int evaluate_word(const FiniteGroup& G, const FreeWord& w, std::span<const int> tuple) {
  if (static_cast<int>(tuple.size()) != w.rank()) throw std::invalid_argument("tuple length != word rank");
  int acc = G.identity();
  for (const auto& s : w.syllables()) {
    int g = tuple[static_cast<size_t>(s.generator)];
    int factor;
    if (s.exponent == 1)
      factor = g;
    else if (s.exponent == -1)
      factor = G.inv(g);
    else
      factor = G.power(g, s.exponent);
    acc = G.mul(acc, factor);
  }
  return acc;
}

namespace {

SubsetMask close_under_conjugation(const FiniteGroup& G, const SubsetMask& raw) {
  SubsetMask closed(G.order());
  for (const auto& cls : G.classes()) {
    bool hit = false;
    cls.members.for_each([&](int g) {
      if (!hit && raw.test(g)) hit = true;
    });
    if (hit) closed |= cls.members;
  }
  return closed;
}

}  // namespace

WordImage word_image_exhaustive(const FiniteGroup& G, const FreeWord& w) {
  const int n = G.order();
  double total = std::pow(static_cast<double>(n), w.rank());
  if (total > static_cast<double>(kExhaustiveTupleBudget))
    throw std::invalid_argument("exhaustive word image over tuple budget: |G|^rank = " +
                                std::to_string(total));

  WordImage out;
  out.image = SubsetMask(n);
  std::vector<int> tuple(static_cast<size_t>(w.rank()), 0);
  long long count = 0;
  for (;;) {
    out.image.set(evaluate_word(G, w, tuple));
    ++count;
    int pos = 0;
    while (pos < w.rank()) {
      if (++tuple[static_cast<size_t>(pos)] < n) break;
      tuple[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == w.rank()) break;
  }
  out.tuples_evaluated = count;
  out.image = close_under_conjugation(G, out.image);
  out.exact = true;
  return out;
}

WordImage word_image_sampled(const FiniteGroup& G, const FreeWord& w, long long trials, uint64_t seed) {
  const int n = G.order();
  if (trials <= 0) trials = 200LL * n;
  Rng rng(derive_seed(seed, 0));

  WordImage out;
  out.image = SubsetMask(n);
  std::vector<int> tuple(static_cast<size_t>(w.rank()));
  for (long long t = 0; t < trials; ++t) {
    for (auto& g : tuple) g = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    out.image.set(evaluate_word(G, w, tuple));
  }
  out.tuples_evaluated = trials;
  out.image = close_under_conjugation(G, out.image);
  out.exact = false;
  return out;
}

WaringCheckResult waring_check(const FiniteGroup& G, const FreeWord& w1, const FreeWord& w2) {
  WordImage im1 = word_image_exhaustive(G, w1);
  WordImage im2 = word_image_exhaustive(G, w2);
  WaringCheckResult out;
  out.uncovered = product_cover_check(G, im1.image, im2.image, SubsetMask::full_set(G.order()));
  out.covered = out.uncovered.none();
  return out;
}

}  // namespace thinbase
