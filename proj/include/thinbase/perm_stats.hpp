#ifndef THINBASE_PERM_STATS_HPP
#define THINBASE_PERM_STATS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thinbase/group.hpp"
#include "thinbase/subset_mask.hpp"
#include "thinbase/word.hpp"

namespace thinbase {

struct PermStat {
  int n = 0;
  std::vector<int> cycle_type;     // descending cycle lengths
  int fixed_points = 0;
  std::vector<long long> sigma;    // sigma[i-1] = total length of cycles of length <= i
  std::vector<double> e;           // e[i-1], from log_n partial sums
  double E = 0.0;                  // sum e_i / i
};

// Cycle statistics of a permutation given as an image array (n >= 2).
PermStat perm_stat(std::span<const int> image);

struct MinFixedCount {
  long long exact = 0;      // permutations of S_n with >= m fixed points
  double factorial_bound = 0.0;  // 2 n!/m!
};

// Exact count via binomials and derangement numbers; n <= 20.
MinFixedCount count_min_fixed(int n, int m);

// Degrees of the irreducible characters of S_n (hook length formula).
std::vector<long long> sn_character_degrees(int n);

// Diagnostic: sum over Irr(S_n) of degree^{-s}; tends to 2 as n grows.
double liebeck_shalev_sum(int n, double s);

// The alternating group A_n as a permutation group, n >= 3.
FiniteGroup alternating_group(int n);

// Union of the A_n-classes whose members have the given cycle type (an
// S_n-class intersected with A_n); nullopt when no element matches.
std::optional<SubsetMask> sn_class_in_alternating(const FiniteGroup& A, const std::vector<int>& type);

// Ratio of the exact count of g = x1*x2 (xi in Ci) to |C1||C2|/|G|.
double class_count_ratio(const FiniteGroup& G, const SubsetMask& C1, const SubsetMask& C2, int g);

struct StratumReport {
  std::string label;          // "Z1", "tail", or the fixed-point set
  std::string c1_type, c2_type;
  long long c1_size = 0, c2_size = 0;
  long long z_size = 0;
  int x0 = 0, y0 = 0;
  int attempts = 0;
  bool certified = false;
  std::string error;
};

struct StratifiedParams {
  int x0 = 0;             // 0: auto-size from sqrt(|G| ln |G|)
  int y0 = 0;
  int max_attempts = 20;
  long long sample_trials = 0;  // word-image sampling budget (0: 200|G|)
};

struct StratifiedReport {
  int n = 0;
  std::string w1, w2;
  bool certified = false;
  bool images_exact = false;
  SubsetMask X, Y;
  long long x_total = 0, y_total = 0;
  double ratio_x = 0.0, ratio_y = 0.0;  // |X| / sqrt(n! ln n!)
  int z1_max_fixed = 0;                 // fixed-point cutoff for the bulk block
  int tail_min_fixed = 0;               // patching threshold ceil(2n/3)
  long long tail_count = 0;
  std::vector<StratumReport> strata;    // bulk block first, then the middle T-strata
  std::string error;
};

// Three-part cover of A_n by subsets of the two word images: a sampled thin
// pair over few-cycle classes for elements with few fixed points, per-stratum
// class pairs inside pointwise stabilizers for the middle range, and
// per-element patching for nearly-trivial permutations.  The assembled cover
// is certified exhaustively over A_n.  5 <= n <= 9.
StratifiedReport stratified_thin_base(int n, const FreeWord& w1, const FreeWord& w2,
                                      const StratifiedParams& params, uint64_t seed);

}  // namespace thinbase

#endif
