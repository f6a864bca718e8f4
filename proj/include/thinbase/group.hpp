#ifndef THINBASE_GROUP_HPP
#define THINBASE_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "thinbase/subset_mask.hpp"

namespace thinbase {

struct ConjugacyClass {
  int representative = 0;  // smallest element index in the class
  SubsetMask members;
  int size = 0;
};

// Finite group over elements indexed 0..n-1 with identity at index 0.
//
// Two storage modes, transparent through mul():
//   * dense n x n multiplication table for n <= kMulTableCap,
//   * permutation images plus an image->index hash for larger
//     generator-built groups (A8, A9 scale).
//
// Immutable after construction; safe to share across threads.
class FiniteGroup {
public:
  FiniteGroup() = default;  // empty placeholder; assign from a factory

  static constexpr size_t kClosureCap = 1'000'000;  // generator-closure element cap
  static constexpr int kMulTableCap = 4096;         // dense-table memory cap
  static constexpr int kTableInputCap = 8192;       // explicit-table input cap

  // Closure of permutation generators on domain {0..degree-1}; element order
  // is BFS discovery order from the identity, generators applied in listed
  // order (right multiplication).  Deterministic and diffable.
  static FiniteGroup from_generators(int degree, const std::vector<std::vector<int>>& generators,
                                     std::string name = "");

  // Explicit multiplication table.  Verifies the Latin-square property, a
  // two-sided identity (re-indexed to 0 if needed), inverses, and
  // associativity: exhaustive for n <= 512, 1e5 seeded random triples above.
  static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string name = "");

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  int identity() const { return 0; }

  int mul(int a, int b) const {
    if (has_table_) return table_[static_cast<size_t>(a) * n_ + b];
    return mul_by_images(a, b);
  }
  int inv(int a) const { return inv_[static_cast<size_t>(a)]; }

  // g^e by repeated squaring; e may be negative.
  int power(int g, long long e) const;
  int element_order(int g) const;

  int conjugate(int g, int x) const {  // g x g^-1
    return mul(mul(g, x), inv(g));
  }

  bool has_mul_table() const { return has_table_; }
  // Row a of the table: row[b] = a*b.  Only valid in table mode.
  const int* mul_row(int a) const { return table_.data() + static_cast<size_t>(a) * n_; }

  bool has_perm_images() const { return degree_ > 0; }
  int degree() const { return degree_; }
  // Image array of element g on the permutation domain.
  const uint8_t* image(int g) const { return images_.data() + static_cast<size_t>(g) * degree_; }
  int fixed_points(int g) const;
  int cycle_count(int g) const;  // cycles including fixed points
  std::vector<int> cycle_type(int g) const;  // descending cycle lengths

  // Index of the element with the given image array, or nullopt.
  std::optional<int> index_of_image(const std::vector<uint8_t>& img) const;

  bool is_abelian() const;
  int centralizer_order(int g) const;

  // Conjugacy classes ordered by smallest member; the identity class comes
  // first.  Computed once on demand.
  const std::vector<ConjugacyClass>& classes() const;
  int class_of(int g) const;  // index into classes()

private:
  void build_inverses();
  int mul_by_images(int a, int b) const;
  void compute_classes() const;

  int n_ = 0;
  std::string name_;
  bool has_table_ = false;
  std::vector<int> table_;  // n*n row-major, table mode only
  std::vector<int> inv_;

  int degree_ = 0;                 // 0 when not permutation-built
  std::vector<uint8_t> images_;    // n*degree, flat
  std::unordered_map<std::string, int> image_index_;
  std::vector<int> generator_indices_;

  struct ClassCache {
    std::vector<ConjugacyClass> classes;
    std::vector<int> class_of;
  };
  mutable std::shared_ptr<const ClassCache> class_cache_;  // filled once, under a global lock
};

}  // namespace thinbase

#endif
