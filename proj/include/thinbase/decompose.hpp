#ifndef THINBASE_DECOMPOSE_HPP
#define THINBASE_DECOMPOSE_HPP

#include <string>
#include <vector>

#include "thinbase/group.hpp"
#include "thinbase/subset_mask.hpp"

namespace thinbase {

struct CyclicDecomposition {
  std::vector<int> X, Y;  // residues mod p
  std::string method;     // small / near-p / grid / mirrored / mirrored-fallback
};

// Z/p = X + Y with |X| <= x and |Y| <= 2p/x, constructed from intervals and
// arithmetic progressions; bounds and coverage are always re-verified before
// returning.
CyclicDecomposition cyclic_decompose(long long p, double x);

struct DecompositionStep {
  std::string case_label;  // swap / a / a' / b / abelian / simple-max
  long long group_order = 0;
  double x_used = 0.0;
  long long subgroup_order = 0;  // for a / a' / simple-max
  long long quotient_order = 0;  // for a' / b
};

struct DecompositionCertificate {
  SubsetMask X, Y;
  double x_target = 0.0;
  std::vector<DecompositionStep> trace;
  bool verified = false;
};

// G = X*Y with |X| <= x and |Y| <= 2|G|/x by recursion on subgroups,
// quotients, and the cyclic construction.  The certificate is verified
// exhaustively (product check plus both size bounds) before returning.
DecompositionCertificate group_decompose(const FiniteGroup& G, double x);

struct SquareRootResult {
  SubsetMask root;
  DecompositionCertificate certificate;
  double bound = 0.0;  // sqrt(8|G|)
  bool verified = false;
};

// R with R*R = G and |R| <= sqrt(8|G|), from the decomposition at
// x = sqrt(2|G|).
SquareRootResult square_root(const FiniteGroup& G);

// Boundary-safe size-bound checks: counts are exact integers, targets are
// real; square targets (x = sqrt(M)) compare in integer arithmetic.
bool within_x_bound(long long count, double x);
bool within_y_bound(long long count, long long n, double x);

}  // namespace thinbase

#endif
