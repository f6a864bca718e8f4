#include "thinbase/interval_set.hpp"

#include <algorithm>
#include <numeric>

namespace thinbase {

namespace {
long long checked_narrow(__int128 v, const char* what) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
    throw std::overflow_error(std::string("Rational overflow in ") + what);
  return static_cast<long long>(v);
}
}  // namespace

void Rational::normalize() {
  if (den == 0) throw std::invalid_argument("Rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
  __int128 d = static_cast<__int128>(a.den) * b.den;
  Rational r;
  // Reduce via gcd computed in 128 bits to keep components narrow.
  __int128 an = n < 0 ? -n : n;
  __int128 gg = d;
  while (an) {
    __int128 t = gg % an;
    gg = an;
    an = t;
  }
  if (gg > 1) {
    n /= gg;
    d /= gg;
  }
  r.num = checked_narrow(n, "add");
  r.den = checked_narrow(d, "add");
  return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num, b.den); }

Rational operator*(const Rational& a, const Rational& b) {
  __int128 n = static_cast<__int128>(a.num) * b.num;
  __int128 d = static_cast<__int128>(a.den) * b.den;
  __int128 an = n < 0 ? -n : n;
  __int128 gg = d;
  while (an) {
    __int128 t = gg % an;
    gg = an;
    an = t;
  }
  if (gg > 1) {
    n /= gg;
    d /= gg;
  }
  Rational r;
  r.num = checked_narrow(n, "mul");
  r.den = checked_narrow(d, "mul");
  return r;
}

IntervalSet::IntervalSet(std::vector<std::pair<Rational, Rational>> intervals) {
  for (auto& iv : intervals)
    if (iv.second < iv.first) throw std::invalid_argument("interval with hi < lo");
  std::sort(intervals.begin(), intervals.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& iv : intervals) {
    if (!intervals_.empty() && iv.first <= intervals_.back().second) {
      if (intervals_.back().second < iv.second) intervals_.back().second = iv.second;
    } else {
      intervals_.push_back(iv);
    }
  }
}

Rational IntervalSet::total_length() const {
  Rational acc(0);
  for (const auto& iv : intervals_) acc = acc + (iv.second - iv.first);
  return acc;
}

bool IntervalSet::contains(const Rational& x) const {
  // Binary search over sorted disjoint intervals.
  size_t lo = 0, hi = intervals_.size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (intervals_[mid].second < x)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < intervals_.size() && intervals_[lo].first <= x && x <= intervals_[lo].second;
}

IntervalSet IntervalSet::translated(const Rational& t) const {
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(intervals_.size());
  for (const auto& iv : intervals_) out.push_back({iv.first + t, iv.second + t});
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::scaled(const Rational& s) const {
  if (!(Rational(0) < s)) throw std::invalid_argument("scale must be positive");
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(intervals_.size());
  for (const auto& iv : intervals_) out.push_back({iv.first * s, iv.second * s});
  return IntervalSet(std::move(out));
}

IntervalSet minkowski_sum(const IntervalSet& a, const IntervalSet& b) {
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(a.intervals_.size() * b.intervals_.size());
  for (const auto& ia : a.intervals_)
    for (const auto& ib : b.intervals_) out.push_back({ia.first + ib.first, ia.second + ib.second});
  return IntervalSet(std::move(out));
}

Rational IntervalSet::max_gap(const Rational& target_lo, const Rational& target_hi) const {
  Rational span = target_hi - target_lo;
  if (intervals_.empty()) return span + Rational(1);

  Rational worst(0);
  auto bump = [&](const Rational& g) {
    if (worst < g) worst = g;
  };

  // Uncovered stretch before the first component / after the last one: the
  // nearest set point sits on one side only.
  if (target_lo < intervals_.front().first) bump(intervals_.front().first - target_lo);
  if (intervals_.back().second < target_hi) bump(target_hi - intervals_.back().second);

  // Interior holes: worst point is the midpoint.
  for (size_t i = 0; i + 1 < intervals_.size(); ++i) {
    Rational a = intervals_[i].second;
    Rational b = intervals_[i + 1].first;
    if (b < target_lo || target_hi < a) continue;
    Rational lo = a < target_lo ? target_lo : a;
    Rational hi = target_hi < b ? target_hi : b;
    if (lo < hi) {
      if (a < target_lo)
        bump(hi - lo);  // clipped at the target edge: one-sided
      else if (target_hi < b)
        bump(hi - lo);
      else
        bump((hi - lo) * Rational(1, 2));
    }
  }
  return worst;
}

}  // namespace thinbase
