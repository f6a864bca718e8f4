#ifndef THINBASE_TAIL_BOUNDS_HPP
#define THINBASE_TAIL_BOUNDS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace thinbase {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact binomial coefficient; 0 outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

// Number of derangements of j points.
BigInt derangements(long long j);

struct DisjointProb {
  double exact = 0.0;  // C(n-a,b)/C(n,b), exact rationals converted at the end
  double bound = 0.0;  // e^{-ab/n}
};

// Probability that a uniform random b-subset of an n-set misses a fixed
// a-subset, with its exponential upper bound.
DisjointProb disjoint_prob(long long n, long long a, long long b);

struct TailProb {
  long long k = 0;       // threshold actually used
  double exact = 0.0;    // P(|A cap B| <= k), exact hypergeometric sum
  double bound = 0.0;    // 2.2 e^{-5ab/(2e^2 n)}
  bool degenerate = false;  // k >= min(a,b): the tail is all of the mass
};

// Lower tail of the hypergeometric intersection size at threshold k;
// k < 0 selects the default floor(ab/(e^2 n)).
TailProb small_intersection_prob(long long n, long long a, long long b, long long k = -1);

// Exact hypergeometric tail as a big rational (shared with tests).
BigRat hypergeometric_tail_exact(long long n, long long a, long long b, long long k);

// (2e^2/c) n ln n: the size product above which the random thin pair is
// guaranteed; callers compare x0*y0 against it.
double size_threshold(long long n, double c);

}  // namespace thinbase

#endif
