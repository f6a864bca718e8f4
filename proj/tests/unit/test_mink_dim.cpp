#include <doctest.h>

#include <cmath>

#include "thinbase/minkowski.hpp"

using namespace thinbase;

TEST_CASE("rational arithmetic") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational::pow4(-2) == Rational(1, 16));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("interval set normalization and gaps") {
  IntervalSet s({{Rational(0), Rational(1)}, {Rational(1, 2), Rational(2)}, {Rational(3), Rational(4)}});
  CHECK(s.components() == 2);
  CHECK(s.total_length() == Rational(3));
  CHECK(s.contains(Rational(3, 2)));
  CHECK(!s.contains(Rational(5, 2)));
  // worst point of [0,4] is the middle of the hole (2,3)
  CHECK(s.max_gap(Rational(0), Rational(4)) == Rational(1, 2));
  // target sticking out on the right: one-sided distance
  CHECK(s.max_gap(Rational(0), Rational(6)) == Rational(2));
}

TEST_CASE("packing number of [-1,1] is floor(1/delta)") {
  IntervalSet seg = IntervalSet::segment(Rational(-1), Rational(1));
  for (int k = 1; k <= 100; ++k) CHECK(packing_number(seg, Rational(1, k)) == k);
  // single degenerate component packs one ball at any scale
  IntervalSet pt = IntervalSet::segment(Rational(1, 3), Rational(1, 3));
  CHECK(packing_number(pt, Rational(1, 10)) == 1);
  CHECK(packing_number(pt, Rational(5)) == 1);
  // point-set form
  CHECK(packing_number(std::vector<Rational>{Rational(1, 3)}, Rational(1, 10)) == 1);
}

TEST_CASE("cantor sets: worked points at depth 1 and packing counts") {
  CantorPair cp = cantor_sets(1);
  CHECK(cp.A_points ==
        std::vector<Rational>{Rational(-1), Rational(-3, 4), Rational(0), Rational(1, 4)});
  CHECK(cp.B_points == std::vector<Rational>{Rational(0), Rational(1, 2)});
  CHECK(cp.A.components() == 4);
  CHECK(cp.B.components() == 2);

  // pairwise sums of the depth-1 points
  std::vector<Rational> sums;
  for (const auto& a : cp.A_points)
    for (const auto& b : cp.B_points) sums.push_back(a + b);
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  for (const auto& v : {Rational(-1), Rational(-3, 4), Rational(-1, 2), Rational(-1, 4), Rational(0),
                        Rational(1, 4), Rational(1, 2), Rational(3, 4)})
    CHECK(std::find(sums.begin(), sums.end(), v) != sums.end());

  for (int k = 1; k <= 10; ++k) {
    CantorPair c = cantor_sets(k);
    CHECK(packing_number(c.A_points, Rational::pow4(-k)) == (1LL << (k + 1)));
    CHECK(static_cast<long long>(c.A_points.size()) == (1LL << (k + 1)));
    CHECK(static_cast<long long>(c.B_points.size()) == (1LL << k));
  }
  CHECK_THROWS(cantor_sets(0));
  CHECK_THROWS(cantor_sets(13));
}

TEST_CASE("dimension regressions") {
  std::vector<Rational> wide, cantor_scales;
  for (int j = 3; j <= 10; ++j) wide.push_back(Rational::pow4(-j));
  for (int j = 4; j <= 10; ++j) cantor_scales.push_back(Rational::pow4(-j));

  DimensionEstimate seg = dimension_estimate(IntervalSet::segment(Rational(-1), Rational(1)), wide);
  CHECK(seg.slope > 0.98);
  CHECK(seg.slope < 1.02);

  CantorPair cp = cantor_sets(12);
  DimensionEstimate da = dimension_estimate(cp.A_points, cantor_scales);
  DimensionEstimate db = dimension_estimate(cp.B_points, cantor_scales);
  CHECK(da.slope > 0.45);
  CHECK(da.slope < 0.55);
  CHECK(db.slope > 0.45);
  CHECK(db.slope < 0.55);

  // nonincreasing in delta: the scale list shrinks, so counts grow along it
  for (size_t i = 0; i + 1 < da.counts.size(); ++i) CHECK(da.counts[i] <= da.counts[i + 1]);
}

TEST_CASE("cantor sumset covers [-1,1] at every depth") {
  for (int k = 1; k <= 10; ++k) {
    CantorPair cp = cantor_sets(k);
    auto rep = sumset_cover_check(cp.A, cp.B, Rational(-1), Rational(1), Rational::pow4(-k));
    CHECK(rep.covered);
  }
  // A alone leaves a substantial hole
  CantorPair cp = cantor_sets(6);
  IntervalSet zero = IntervalSet::segment(Rational(0), Rational(0));
  auto alone = sumset_cover_check(cp.A, zero, Rational(-1), Rational(1), Rational::pow4(-6));
  CHECK(!alone.covered);
  CHECK(alone.max_gap > 0.2);
}

TEST_CASE("degenerate full-interval sumset") {
  IntervalSet half = IntervalSet::segment(Rational(-1), Rational(1));
  auto rep = sumset_cover_check(half, half, Rational(-2), Rational(2), Rational(1, 100));
  CHECK(rep.covered);
  CHECK(rep.max_gap == 0.0);
}

TEST_CASE("product packing inequalities") {
  // grid stand-in for [-1,1] at spacing delta/4 and coarser scales
  auto grid = [](const Rational& h) {
    std::vector<Rational> pts;
    for (Rational x(-1); x <= Rational(1); x = x + h) pts.push_back(x);
    return pts;
  };

  {
    std::vector<Rational> X = grid(Rational(1, 40));
    auto rep = product_dim_inequality_check(X, X, {Rational(1, 10)});
    CHECK(rep.all_ok);
    CHECK(rep.rows[0].lower_ok);
    CHECK(rep.rows[0].upper_ok);
  }
  {
    std::vector<Rational> X = grid(Rational(1, 400));
    auto rep = product_dim_inequality_check(X, X, {Rational(1, 100)});
    CHECK(rep.all_ok);
  }

  // X a single point: product packing equals the Y count exactly
  {
    CantorPair cp = cantor_sets(6);
    std::vector<Rational> pt{Rational(0)};
    auto rep = product_dim_inequality_check(pt, cp.B_points, {Rational::pow4(-3), Rational::pow4(-5)});
    CHECK(rep.all_ok);
    for (const auto& row : rep.rows) CHECK(row.n_product_delta == row.n_y);
  }

  // Cantor x Cantor across scales
  {
    CantorPair cp = cantor_sets(8);
    std::vector<Rational> scales;
    for (int j = 2; j <= 8; ++j) scales.push_back(Rational::pow4(-j));
    auto rep = product_dim_inequality_check(cp.A_points, cp.A_points, scales);
    CHECK(rep.all_ok);
  }
}

TEST_CASE("torus square roots") {
  TorusSquareRoot t1 = torus_square_root(1, 8);
  CHECK(t1.cover_certified);
  CHECK(t1.dim_x.slope > 0.45);
  CHECK(t1.dim_x.slope < 0.55);
  CHECK(t1.dim_y.slope > 0.45);
  CHECK(t1.dim_y.slope < 0.55);
  CHECK(t1.x_factors == std::vector<std::string>{"cantor-a"});

  TorusSquareRoot t2 = torus_square_root(2, 8);
  CHECK(t2.cover_certified);
  CHECK(t2.worst_gap == 0.0);
  CHECK(t2.dim_x.slope == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(t2.dim_y.slope == doctest::Approx(1.0).epsilon(1e-9));

  TorusSquareRoot t3 = torus_square_root(3, 6);
  CHECK(t3.cover_certified);
  CHECK(std::abs(t3.dim_x.slope - 1.5) <= 0.15);
  CHECK(std::abs(t3.dim_y.slope - 1.5) <= 0.15);

  CHECK_THROWS(torus_square_root(0, 6));
  CHECK_THROWS(torus_square_root(5, 12));  // grid blows the budget
}
