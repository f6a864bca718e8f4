#ifndef THINBASE_COVER_HPP
#define THINBASE_COVER_HPP

#include "thinbase/group.hpp"
#include "thinbase/subset_mask.hpp"

namespace thinbase {

// Uncovered portion of Z: computes Z AND-NOT (union over x in X of the
// x-translate of Y), clearing bits as products appear and exiting early once
// nothing of Z remains.  An empty result certifies Z subset-of X*Y.
SubsetMask product_cover_check(const FiniteGroup& G, const SubsetMask& X, const SubsetMask& Y,
                               const SubsetMask& Z);

// Independent O(|X||Y|) pairwise-enumeration oracle for the same quantity.
// Separate code path from the bitset kernel; used by tests and --verify.
SubsetMask cover_oracle(const FiniteGroup& G, const SubsetMask& X, const SubsetMask& Y,
                        const SubsetMask& Z);

// First (x, y) in index order with x in X, y in Y, x*y = z; {-1,-1} if none.
std::pair<int, int> find_product_pair(const FiniteGroup& G, const SubsetMask& X, const SubsetMask& Y,
                                      int z);

}  // namespace thinbase

#endif
