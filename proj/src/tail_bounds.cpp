#include "thinbase/tail_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace thinbase {

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt num = 1, den = 1;
  for (long long i = 1; i <= k; ++i) {
    num *= n - k + i;
    den *= i;
  }
  return num / den;
}

BigInt derangements(long long j) {
  if (j < 0) throw std::invalid_argument("derangements of negative size");
  BigInt prev = 1, cur = 0;  // D(0)=1, D(1)=0
  if (j == 0) return prev;
  for (long long m = 2; m <= j; ++m) {
    BigInt next = (m - 1) * (cur + prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

DisjointProb disjoint_prob(long long n, long long a, long long b) {
  if (n < 1 || a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("disjoint_prob: parameters out of range");
  DisjointProb out;
  out.bound = std::exp(-static_cast<double>(a) * static_cast<double>(b) / static_cast<double>(n));
  if (a + b > n) {
    out.exact = 0.0;
    return out;
  }
  BigRat p(binomial(n - a, b), binomial(n, b));
  out.exact = static_cast<double>(p);
  return out;
}

BigRat hypergeometric_tail_exact(long long n, long long a, long long b, long long k) {
  BigInt denom = binomial(n, b);
  BigInt num = 0;
  long long lo = std::max<long long>(0, a + b - n);
  for (long long i = lo; i <= std::min(k, std::min(a, b)); ++i) num += binomial(a, i) * binomial(n - a, b - i);
  return BigRat(num, denom);
}

TailProb small_intersection_prob(long long n, long long a, long long b, long long k) {
  if (n < 1 || a < 1 || b < 1 || a > n || b > n)
    throw std::invalid_argument("small_intersection_prob: parameters out of range");
  const double e2 = std::exp(2.0);
  double r = static_cast<double>(a) * static_cast<double>(b) / (e2 * static_cast<double>(n));
  TailProb out;
  out.k = (k < 0) ? static_cast<long long>(std::floor(r)) : k;
  out.bound = 2.2 * std::exp(-2.5 * r);
  out.degenerate = out.k >= std::min(a, b);
  out.exact = static_cast<double>(hypergeometric_tail_exact(n, a, b, out.k));
  return out;
}

double size_threshold(long long n, double c) {
  if (n < 2 || c <= 0) throw std::invalid_argument("size_threshold: need n >= 2, c > 0");
  return (2.0 * std::exp(2.0) / c) * static_cast<double>(n) * std::log(static_cast<double>(n));
}

}  // namespace thinbase
