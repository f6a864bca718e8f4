#ifndef THINBASE_INTERVAL_SET_HPP
#define THINBASE_INTERVAL_SET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace thinbase {

// Exact rational with 64-bit components; all grid constructions keep
// denominators at 3*4^12 or below, far from overflow.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize();
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num, den); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  static Rational pow4(int k) {  // 4^k, k may be negative
    long long p = 1;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) p *= 4;
    return k >= 0 ? Rational(p) : Rational(1, p);
  }
};

// Finite union of closed intervals with exact rational endpoints, kept
// sorted, disjoint, and merged.
class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<std::pair<Rational, Rational>> intervals);

  static IntervalSet segment(const Rational& lo, const Rational& hi) { return IntervalSet({{lo, hi}}); }

  const std::vector<std::pair<Rational, Rational>>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  size_t components() const { return intervals_.size(); }
  Rational lo() const { return intervals_.front().first; }
  Rational hi() const { return intervals_.back().second; }
  Rational total_length() const;

  bool contains(const Rational& x) const;

  IntervalSet translated(const Rational& t) const;
  IntervalSet scaled(const Rational& s) const;  // s > 0

  friend IntervalSet minkowski_sum(const IntervalSet& a, const IntervalSet& b);

  // Largest distance from a point of [target_lo, target_hi] to this set;
  // infinity (> target span) when the set is empty.
  Rational max_gap(const Rational& target_lo, const Rational& target_hi) const;

private:
  std::vector<std::pair<Rational, Rational>> intervals_;
};

}  // namespace thinbase

#endif
