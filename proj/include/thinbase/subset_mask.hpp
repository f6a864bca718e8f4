#ifndef THINBASE_SUBSET_MASK_HPP
#define THINBASE_SUBSET_MASK_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace thinbase {

// Dense bit-vector over group-element indices 0..n-1.  The unit of all
// covering computations; word-level ops keep the covering kernel cheap.
class SubsetMask {
public:
  SubsetMask() : n_(0) {}
  explicit SubsetMask(int n) : n_(n), words_((static_cast<size_t>(n) + 63) / 64, 0) {}

  static SubsetMask empty_set(int n) { return SubsetMask(n); }

  static SubsetMask full_set(int n) {
    SubsetMask m(n);
    for (auto& w : m.words_) w = ~uint64_t{0};
    m.trim();
    return m;
  }

  static SubsetMask of(int n, const std::vector<int>& indices) {
    SubsetMask m(n);
    for (int i : indices) m.set(i);
    return m;
  }

  int size() const { return n_; }

  void set(int i) { words_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63); }
  void clear(int i) { words_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  SubsetMask& operator|=(const SubsetMask& o) {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  SubsetMask& operator&=(const SubsetMask& o) {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // this := this & ~o
  SubsetMask& and_not(const SubsetMask& o) {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }
  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }

  bool operator==(const SubsetMask& o) const { return n_ == o.n_ && words_ == o.words_; }

  bool is_subset_of(const SubsetMask& o) const {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // Set-bit indices in increasing order.
  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        int b = std::countr_zero(w);
        out.push_back(static_cast<int>(wi * 64) + b);
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(wi * 64) + b);
        w &= w - 1;
      }
    }
  }

  int smallest() const {
    for (size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return static_cast<int>(wi * 64) + std::countr_zero(words_[wi]);
    return -1;
  }

private:
  void trim() {
    int rem = n_ & 63;
    if (rem && !words_.empty()) words_.back() &= (uint64_t{1} << rem) - 1;
  }
  void check_same(const SubsetMask& o) const {
    if (n_ != o.n_) throw std::invalid_argument("SubsetMask: size mismatch");
  }

  int n_;
  std::vector<uint64_t> words_;
};

}  // namespace thinbase

#endif
