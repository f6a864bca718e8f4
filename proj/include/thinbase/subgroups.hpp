#ifndef THINBASE_SUBGROUPS_HPP
#define THINBASE_SUBGROUPS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "thinbase/group.hpp"
#include "thinbase/subset_mask.hpp"

namespace thinbase {

bool is_subgroup(const FiniteGroup& G, const SubsetMask& H);
bool is_normal_subgroup(const FiniteGroup& G, const SubsetMask& H);

// Closure of `seeds` under multiplication.  Returns nullopt if the closure
// grows past `abort_above` elements (0 = no cap).
std::optional<SubsetMask> subgroup_closure(const FiniteGroup& G, const std::vector<int>& seeds,
                                           int abort_above = 0);

struct NormalSubgroupList {
  std::vector<SubsetMask> subgroups;  // sorted by order, then smallest member
  // False when the class count exceeded the exhaustive-union budget and only
  // the lattice generated by single-class closures was explored.
  bool complete = true;
};

// All normal subgroups, found as unions of conjugacy classes containing the
// identity class (exhaustive over unions for <= 20 classes).
NormalSubgroupList normal_subgroups(const FiniteGroup& G);

// A proper subgroup of order >= threshold, or nullopt.  Search order: point
// stabilizers of the permutation action, cyclic subgroups, then a sampled
// budget of 2000 two-generated closures.  The result is re-verified closed.
std::optional<SubsetMask> find_large_subgroup(const FiniteGroup& G, double threshold);

struct SubgroupEmbedding {
  FiniteGroup group;        // H as a standalone group
  std::vector<int> to_parent;  // H-index -> G-index
};

// H as a standalone FiniteGroup with deterministic indexing (elements in
// increasing G-index; identity first).
SubgroupEmbedding materialize_subgroup(const FiniteGroup& G, const SubsetMask& H);

struct GroupHomomorphism {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<int> map;  // length |source|
};

bool verify_homomorphism(const FiniteGroup& S, const FiniteGroup& T, const std::vector<int>& map);

struct QuotientResult {
  FiniteGroup group;
  std::vector<int> projection;   // G-index -> quotient index
  std::vector<int> coset_reps;   // quotient index -> smallest G-element of coset
};

// G/N with projection; throws if N is not a normal subgroup.
QuotientResult quotient(const FiniteGroup& G, const SubsetMask& N);

// Right coset representatives of H in G: smallest element of each coset, in
// increasing order of that element.
std::vector<int> right_coset_reps(const FiniteGroup& G, const SubsetMask& H);

}  // namespace thinbase

#endif
