#include "thinbase/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace thinbase {

long long packing_number(const IntervalSet& s, const Rational& delta) {
  if (!(Rational(0) < delta)) throw std::invalid_argument("delta must be positive");
  long long total = 0;
  Rational two_delta = delta * Rational(2);
  for (const auto& iv : s.intervals()) {
    Rational len = iv.second - iv.first;
    // floor(len / 2delta) in exact arithmetic
    __int128 num = static_cast<__int128>(len.num) * two_delta.den;
    __int128 den = static_cast<__int128>(len.den) * two_delta.num;
    long long fit = static_cast<long long>(num / den);
    total += std::max<long long>(1, fit);
  }
  return total;
}

long long packing_number(const std::vector<Rational>& sorted_points, const Rational& delta) {
  if (!(Rational(0) < delta)) throw std::invalid_argument("delta must be positive");
  long long count = 0;
  bool have_last = false;
  Rational last(0);
  for (const auto& p : sorted_points) {
    if (!have_last || p - last >= delta) {
      ++count;
      last = p;
      have_last = true;
    }
  }
  return count;
}

long long circle_packing_number(const Rational& delta) {
  Rational two_delta = delta * Rational(2);
  __int128 num = two_delta.den;
  __int128 den = two_delta.num;
  return std::max<long long>(1, static_cast<long long>(num / den));
}

DimensionEstimate dimension_from_counts(const std::vector<Rational>& scales,
                                        const std::vector<long long>& counts) {
  if (scales.size() != counts.size() || scales.empty())
    throw std::invalid_argument("dimension_from_counts: scale/count mismatch");
  DimensionEstimate est;
  std::vector<double> t, y;
  for (size_t i = 0; i < scales.size(); ++i) {
    double d = scales[i].to_double();
    est.scales.push_back(d);
    est.counts.push_back(counts[i]);
    double ti = -std::log(d);
    double yi = std::log(static_cast<double>(std::max<long long>(1, counts[i])));
    t.push_back(ti);
    y.push_back(yi);
    est.per_scale_ratio.push_back(yi / ti);
  }
  double tm = 0, ym = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    tm += t[i];
    ym += y[i];
  }
  tm /= static_cast<double>(t.size());
  ym /= static_cast<double>(t.size());
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    sxx += (t[i] - tm) * (t[i] - tm);
    sxy += (t[i] - tm) * (y[i] - ym);
  }
  est.slope = sxx > 0 ? sxy / sxx : 0.0;
  for (size_t i = 0; i < t.size(); ++i) {
    double fit = ym + est.slope * (t[i] - tm);
    est.max_residual = std::max(est.max_residual, std::abs(y[i] - fit));
  }
  return est;
}

DimensionEstimate dimension_estimate(const IntervalSet& s, const std::vector<Rational>& scales) {
  std::vector<long long> counts;
  for (const auto& d : scales) counts.push_back(packing_number(s, d));
  return dimension_from_counts(scales, counts);
}

DimensionEstimate dimension_estimate(const std::vector<Rational>& sorted_points,
                                     const std::vector<Rational>& scales) {
  std::vector<long long> counts;
  for (const auto& d : scales) counts.push_back(packing_number(sorted_points, d));
  return dimension_from_counts(scales, counts);
}

CantorPair cantor_sets(int depth) {
  if (depth < 1 || depth > 12) throw std::invalid_argument("cantor_sets: need 1 <= depth <= 12");
  CantorPair out;
  out.depth = depth;

  long long scale = 1;
  for (int i = 0; i < depth; ++i) scale *= 4;  // 4^k

  // A: -a0 + sum a_i 4^{-i}, digits {0,1}: numerators over 4^k.
  std::vector<long long> a_nums;
  for (long long bits = 0; bits < (1LL << depth); ++bits) {
    long long place = scale;  // digit i contributes 4^{k-i}
    long long acc = 0;
    for (int i = 1; i <= depth; ++i) {
      place /= 4;
      if (bits >> (i - 1) & 1) acc += place;
    }
    a_nums.push_back(acc);          // a0 = 0
    a_nums.push_back(acc - scale);  // a0 = 1
  }
  std::sort(a_nums.begin(), a_nums.end());
  for (long long v : a_nums) out.A_points.push_back(Rational(v, scale));

  std::vector<long long> b_nums;
  for (long long bits = 0; bits < (1LL << depth); ++bits) {
    long long place = scale;
    long long acc = 0;
    for (int i = 1; i <= depth; ++i) {
      place /= 4;
      if (bits >> (i - 1) & 1) acc += 2 * place;
    }
    b_nums.push_back(acc);
  }
  std::sort(b_nums.begin(), b_nums.end());
  for (long long v : b_nums) out.B_points.push_back(Rational(v, scale));

  Rational slack(1, 3 * scale);  // 4^{-k}/3 truncation slack
  std::vector<std::pair<Rational, Rational>> ai, bi;
  for (const auto& p : out.A_points) ai.push_back({p, p + slack});
  for (const auto& p : out.B_points) bi.push_back({p, p + slack});
  out.A = IntervalSet(std::move(ai));
  out.B = IntervalSet(std::move(bi));
  return out;
}

SumsetCoverReport sumset_cover_check(const IntervalSet& A, const IntervalSet& B,
                                     const Rational& target_lo, const Rational& target_hi,
                                     const Rational& delta) {
  IntervalSet sum = minkowski_sum(A, B);
  SumsetCoverReport out;
  out.sum_components = sum.components();
  Rational gap = sum.max_gap(target_lo, target_hi);
  out.max_gap = gap.to_double();
  out.covered = gap <= delta;
  return out;
}

ProductInequalityReport product_dim_inequality_check(const std::vector<Rational>& X,
                                                     const std::vector<Rational>& Y,
                                                     const std::vector<Rational>& scales) {
  // Greedy sup-metric packing of X x Y scanned lexicographically: a candidate
  // conflicts with a chosen point iff both coordinates are strictly within
  // delta.  Chosen points are grouped into x-levels with sorted y lists, so a
  // conflict check is a binary search per live level.
  auto pack2d = [&](const Rational& delta) -> long long {
    struct Level {
      Rational x;
      std::vector<Rational> ys;  // increasing
    };
    std::deque<Level> live;
    long long count = 0;
    for (const auto& x : X) {
      while (!live.empty() && x - live.front().x >= delta) live.pop_front();
      bool opened = false;
      for (const auto& y : Y) {
        bool conflict = false;
        for (const auto& lvl : live) {
          // some chosen y' in the open window (y - delta, y + delta)?
          auto it = std::lower_bound(lvl.ys.begin(), lvl.ys.end(), y - delta);
          if (it != lvl.ys.end() && (*it == y - delta)) ++it;  // boundary is not a conflict
          if (it != lvl.ys.end() && *it < y + delta) {
            conflict = true;
            break;
          }
        }
        if (!conflict) {
          if (!opened) {
            live.push_back({x, {}});
            opened = true;
          }
          live.back().ys.push_back(y);
          ++count;
        }
      }
    }
    return count;
  };

  ProductInequalityReport rep;
  rep.all_ok = true;
  for (const auto& d : scales) {
    ProductScaleRow row;
    row.delta = d.to_double();
    row.n_x = packing_number(X, d);
    row.n_y = packing_number(Y, d);
    row.n_product_delta = pack2d(d);
    row.n_product_4delta = pack2d(d * Rational(4));
    row.upper_ok = row.n_product_4delta <= row.n_x * row.n_y;
    row.lower_ok = row.n_product_delta >= row.n_x * row.n_y;
    rep.all_ok = rep.all_ok && row.upper_ok && row.lower_ok;
    rep.rows.push_back(row);
  }
  return rep;
}

namespace {

// Wrap an interval set on the line into [0,1) circle coordinates.
IntervalSet wrap_mod_1(const IntervalSet& s) {
  std::vector<std::pair<Rational, Rational>> pieces;
  for (const auto& iv : s.intervals()) {
    Rational lo = iv.first, hi = iv.second;
    if (Rational(1) <= hi - lo) return IntervalSet::segment(Rational(0), Rational(1));
    // Shift lo into [0,1).
    long long shift = static_cast<long long>(std::floor(lo.to_double()));
    Rational slo = lo - Rational(shift), shi = hi - Rational(shift);
    while (slo < Rational(0)) {
      slo = slo + Rational(1);
      shi = shi + Rational(1);
    }
    while (Rational(1) <= slo) {
      slo = slo - Rational(1);
      shi = shi - Rational(1);
    }
    if (shi <= Rational(1)) {
      pieces.push_back({slo, shi});
    } else {
      pieces.push_back({slo, Rational(1)});
      pieces.push_back({Rational(0), shi - Rational(1)});
    }
  }
  return IntervalSet(std::move(pieces));
}

// Max distance from circle points to the wrapped set, measured on the circle.
Rational circle_max_gap(const IntervalSet& wrapped) {
  if (wrapped.empty()) return Rational(2);
  // Unroll one period on both sides so every circular hole is an interior
  // hole of the line set.
  std::vector<std::pair<Rational, Rational>> tripled;
  for (int s = -1; s <= 1; ++s)
    for (const auto& iv : wrapped.intervals())
      tripled.push_back({iv.first + Rational(s), iv.second + Rational(s)});
  IntervalSet line(std::move(tripled));
  return line.max_gap(Rational(0), Rational(1));
}

}  // namespace

TorusSquareRoot torus_square_root(int d, int depth) {
  if (d < 1) throw std::invalid_argument("torus dimension must be >= 1");
  if (depth < 1 || depth > 12) throw std::invalid_argument("depth out of range");

  TorusSquareRoot out;
  out.dim = d;
  out.depth = depth;

  const int half = d / 2;
  const bool odd = (d % 2) == 1;

  // Per-coordinate factor kinds.
  for (int c = 0; c < d; ++c) {
    if (c < half) {
      out.x_factors.push_back("circle");
      out.y_factors.push_back("point");
    } else if (odd && c == half) {
      out.x_factors.push_back("cantor-a");
      out.y_factors.push_back("cantor-b");
    } else {
      out.x_factors.push_back("point");
      out.y_factors.push_back("circle");
    }
  }

  const Rational grid = Rational::pow4(-depth);
  out.grid_delta = grid.to_double();

  // Grid feasibility: the certification sweep is per coordinate, but the
  // equivalent full product sweep must stay within budget.
  long long full_sweep = 1;
  long long cantor_pts = 1;
  for (int i = 0; i < depth; ++i) cantor_pts *= 4;
  for (int c = 0; c < d; ++c) {
    long long pts = (odd && c == half) ? cantor_pts : std::min<long long>(32, cantor_pts);
    if (full_sweep > 10'000'000 / pts) throw std::invalid_argument("infeasible grid: > 1e7 points");
    full_sweep *= pts;
  }
  out.grid_points = full_sweep;

  // Coordinate coverage.  Circle-plus-point coordinates cover exactly; the
  // Cantor coordinate needs A' + B' to cover the circle, with
  // A' = (A+1)/2 and B' = B/2 so the sum fills [0,1] before wrapping.
  Rational worst(0);
  CantorPair cp;
  if (odd) {
    cp = cantor_sets(depth);
    IntervalSet a_scaled = cp.A.translated(Rational(1)).scaled(Rational(1, 2));
    IntervalSet b_scaled = cp.B.scaled(Rational(1, 2));
    IntervalSet sum = wrap_mod_1(minkowski_sum(a_scaled, b_scaled));
    Rational gap = circle_max_gap(sum);
    if (worst < gap) worst = gap;
    // Sweep the grid on this coordinate as an independent check.
    for (long long j = 0; j < cantor_pts; ++j) {
      Rational p(j, cantor_pts);
      if (!sum.contains(p)) {
        // distance to sum on the circle
        Rational best(2);
        for (int s = -1; s <= 1; ++s)
          for (const auto& iv : sum.intervals()) {
            Rational lo = iv.first + Rational(s), hi = iv.second + Rational(s);
            Rational dist = p < lo ? lo - p : (hi < p ? p - hi : Rational(0));
            if (dist < best) best = dist;
          }
        if (worst < best) worst = best;
      }
    }
  }
  out.worst_gap = worst.to_double();
  out.cover_certified = worst <= grid;

  // Dimension estimates over 4^-2 .. 4^-min(8, depth), factorized per
  // coordinate under the sup metric.
  std::vector<Rational> scales;
  for (int j = 2; j <= std::min(8, depth); ++j) scales.push_back(Rational::pow4(-j));
  auto factor_counts = [&](const std::vector<std::string>& kinds) {
    std::vector<long long> counts;
    for (const auto& delta : scales) {
      long long prod = 1;
      for (const auto& kind : kinds) {
        long long c = 1;
        if (kind == "circle")
          c = circle_packing_number(delta);
        else if (kind == "cantor-a")
          c = packing_number(cp.A_points, delta);
        else if (kind == "cantor-b")
          c = packing_number(cp.B_points, delta);
        prod *= c;
      }
      counts.push_back(prod);
    }
    return counts;
  };
  out.dim_x = dimension_from_counts(scales, factor_counts(out.x_factors));
  out.dim_y = dimension_from_counts(scales, factor_counts(out.y_factors));
  return out;
}

}  // namespace thinbase
