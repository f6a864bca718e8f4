#ifndef THINBASE_MINKOWSKI_HPP
#define THINBASE_MINKOWSKI_HPP

#include <string>
#include <vector>

#include "thinbase/interval_set.hpp"

namespace thinbase {

// Packing number of an interval union: per component, the number of disjoint
// open delta-balls that fit inside it (at least one per nonempty component).
// Reproduces floor(1/delta) on [-1,1].
long long packing_number(const IntervalSet& s, const Rational& delta);

// Packing number of a finite point set: the maximal delta-separated subset,
// greedy left to right (optimal in one dimension).  Points must be sorted.
long long packing_number(const std::vector<Rational>& sorted_points, const Rational& delta);

// Circle of circumference 1.
long long circle_packing_number(const Rational& delta);

struct DimensionEstimate {
  std::vector<double> scales;        // delta values
  std::vector<long long> counts;     // N_delta
  std::vector<double> per_scale_ratio;  // log N / log(1/delta)
  double slope = 0.0;                // least-squares fit of log N vs log(1/delta)
  double max_residual = 0.0;
};

DimensionEstimate dimension_from_counts(const std::vector<Rational>& scales,
                                        const std::vector<long long>& counts);

DimensionEstimate dimension_estimate(const IntervalSet& s, const std::vector<Rational>& scales);
DimensionEstimate dimension_estimate(const std::vector<Rational>& sorted_points,
                                     const std::vector<Rational>& scales);

struct CantorPair {
  int depth = 0;
  IntervalSet A, B;                   // digit values fattened by 4^-k/3
  std::vector<Rational> A_points, B_points;  // sorted digit values
};

// Depth-k truncations of the quaternary Cantor sets with digits {0,1}
// (offset by -a0) and {0,2}.  1 <= k <= 12.
CantorPair cantor_sets(int depth);

struct SumsetCoverReport {
  bool covered = false;
  double max_gap = 0.0;
  size_t sum_components = 0;
};

// Is every point of [target_lo, target_hi] within delta of A+B?
SumsetCoverReport sumset_cover_check(const IntervalSet& A, const IntervalSet& B,
                                     const Rational& target_lo, const Rational& target_hi,
                                     const Rational& delta);

struct ProductScaleRow {
  double delta = 0.0;
  long long n_x = 0, n_y = 0;        // at delta
  long long n_product_delta = 0;     // 2-d packing of X x Y at delta (sup metric)
  long long n_product_4delta = 0;    // and at 4*delta
  bool upper_ok = false;             // N_{4d}(XxY) <= N_d(X) N_d(Y)
  bool lower_ok = false;             // N_d(XxY)    >= N_d(X) N_d(Y)
};

struct ProductInequalityReport {
  std::vector<ProductScaleRow> rows;
  bool all_ok = false;
};

// Both packing inequalities for the product set under the sup metric,
// computed by a genuine 2-d greedy packing over X x Y.
ProductInequalityReport product_dim_inequality_check(const std::vector<Rational>& X,
                                                     const std::vector<Rational>& Y,
                                                     const std::vector<Rational>& scales);

struct TorusSquareRoot {
  int dim = 0;
  int depth = 0;
  std::vector<std::string> x_factors, y_factors;  // per coordinate: circle / cantor-a / cantor-b / point
  bool cover_certified = false;
  double worst_gap = 0.0;
  double grid_delta = 0.0;
  long long grid_points = 0;
  DimensionEstimate dim_x, dim_y;
};

// Square root pair (X, Y) of the d-torus: full circle factors split between
// the sides, with the odd middle coordinate carried by the Cantor pair.
// Coverage is certified on a grid at 4^-depth; dimension estimates of both
// factors come out at d/2.
TorusSquareRoot torus_square_root(int d, int depth);

}  // namespace thinbase

#endif
