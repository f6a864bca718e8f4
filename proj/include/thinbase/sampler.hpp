#ifndef THINBASE_SAMPLER_HPP
#define THINBASE_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "thinbase/cover.hpp"
#include "thinbase/group.hpp"
#include "thinbase/subset_mask.hpp"

namespace thinbase {

struct ThinPairResult {
  SubsetMask X0, Y0;
  SubsetMask uncovered;                   // of the best attempt
  bool certified = false;                 // product_cover_check came back empty
  int attempts = 0;                       // attempts actually run
  uint64_t seed = 0;
  std::vector<int> uncovered_history;     // per-attempt uncovered counts
  bool feasible = true;                   // pretest: Z subset-of X*Y with the full sets
};

// Draw X0 (|X0| = x0) uniformly from X and Y0 from Y per attempt, certify
// Z subset-of X0*Y0 with the bitset kernel, and return the first certified
// pair; otherwise the best attempt with certified = false.  Attempt k draws
// from a seed derived by counter, so the outcome is independent of
// scheduling.  An infeasible Z (pretest with the full sets fails) returns
// immediately with attempts = 0.
//
// Certified results are re-checked by pairwise enumeration on a 1% sample
// of Z before returning.
ThinPairResult sample_thin_pair(const FiniteGroup& G, const SubsetMask& X, const SubsetMask& Y,
                                const SubsetMask& Z, int x0, int y0, uint64_t seed, int max_attempts);

struct PatchedCover {
  SubsetMask C1, C2;
  bool certified = false;
  SubsetMask uncovered;  // of the final certification pass against Z = G
};

// Corollary-style patching: for every z in S1 pick the first (x, y) in index
// order with x in W1, y in W2, x*y = z, and adjoin it to the sampled pair.
// Throws when some z has no representation.  The patched pair is certified
// against all of G.
PatchedCover patch_cover(const FiniteGroup& G, const ThinPairResult& base, const SubsetMask& S1,
                         const SubsetMask& W1, const SubsetMask& W2);

}  // namespace thinbase

#endif
