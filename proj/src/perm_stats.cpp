#include "thinbase/perm_stats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "thinbase/rng.hpp"
#include "thinbase/sampler.hpp"
#include "thinbase/tail_bounds.hpp"

namespace thinbase {

PermStat perm_stat(std::span<const int> image) {
  const int n = static_cast<int>(image.size());
  if (n < 2) throw std::invalid_argument("perm_stat: need n >= 2");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  PermStat out;
  out.n = n;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0, j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = 1;
      if (image[static_cast<size_t>(j)] < 0 || image[static_cast<size_t>(j)] >= n)
        throw std::invalid_argument("perm_stat: not a permutation");
      j = image[static_cast<size_t>(j)];
      ++len;
    }
    out.cycle_type.push_back(len);
  }
  std::sort(out.cycle_type.begin(), out.cycle_type.end(), std::greater<int>());
  out.fixed_points = static_cast<int>(std::count(out.cycle_type.begin(), out.cycle_type.end(), 1));

  out.sigma.assign(static_cast<size_t>(n), 0);
  for (int len : out.cycle_type)
    for (int i = len; i <= n; ++i) out.sigma[static_cast<size_t>(i - 1)] += len;

  // Partial sums e_1+..+e_i = log_n max(1, sigma_i); e_i by differencing, so
  // the total telescopes to exactly log_n(n) = 1.
  const double logn = std::log(static_cast<double>(n));
  out.e.assign(static_cast<size_t>(n), 0.0);
  double prev = 0.0;
  out.E = 0.0;
  for (int i = 1; i <= n; ++i) {
    double cur = std::log(static_cast<double>(std::max<long long>(1, out.sigma[static_cast<size_t>(i - 1)]))) / logn;
    out.e[static_cast<size_t>(i - 1)] = cur - prev;
    out.E += (cur - prev) / static_cast<double>(i);
    prev = cur;
  }
  return out;
}

MinFixedCount count_min_fixed(int n, int m) {
  if (n < 0 || n > 20 || m < 0 || m > n) throw std::invalid_argument("count_min_fixed: need 0 <= m <= n <= 20");
  BigInt exact = 0;
  for (int i = m; i <= n; ++i) exact += binomial(n, i) * derangements(n - i);
  BigInt nf_over_mf = 1;
  for (int i = m + 1; i <= n; ++i) nf_over_mf *= i;
  MinFixedCount out;
  out.exact = static_cast<long long>(exact);
  out.factorial_bound = 2.0 * static_cast<double>(nf_over_mf);
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<long long> sn_character_degrees(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("sn_character_degrees: need 1 <= n <= 20");
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions_rec(n, n, cur, parts);

  BigInt nf = 1;
  for (int i = 2; i <= n; ++i) nf *= i;

  std::vector<long long> degrees;
  for (const auto& lambda : parts) {
    BigInt hooks = 1;
    for (size_t r = 0; r < lambda.size(); ++r)
      for (int c = 0; c < lambda[r]; ++c) {
        int arm = lambda[r] - c - 1;
        int leg = 0;
        for (size_t r2 = r + 1; r2 < lambda.size(); ++r2) leg += (lambda[r2] > c);
        hooks *= arm + leg + 1;
      }
    degrees.push_back(static_cast<long long>(nf / hooks));
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

double liebeck_shalev_sum(int n, double s) {
  double acc = 0.0;
  for (long long d : sn_character_degrees(n)) acc += std::pow(static_cast<double>(d), -s);
  return acc;
}

FiniteGroup alternating_group(int n) {
  if (n < 3) throw std::invalid_argument("alternating_group: need n >= 3");
  std::vector<int> three(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) three[static_cast<size_t>(i)] = i;
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;

  std::vector<int> big(static_cast<size_t>(n));
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) big[static_cast<size_t>(i)] = (i + 1) % n;
  } else {
    big[0] = 0;
    for (int i = 1; i < n; ++i) big[static_cast<size_t>(i)] = (i % (n - 1)) + 1;
  }
  return FiniteGroup::from_generators(n, {big, three}, "A" + std::to_string(n));
}

std::optional<SubsetMask> sn_class_in_alternating(const FiniteGroup& A, const std::vector<int>& type) {
  std::vector<int> want = type;
  std::sort(want.begin(), want.end(), std::greater<int>());
  SubsetMask out(A.order());
  bool any = false;
  for (const auto& cls : A.classes()) {
    if (A.cycle_type(cls.representative) == want) {
      out |= cls.members;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  return out;
}

double class_count_ratio(const FiniteGroup& G, const SubsetMask& C1, const SubsetMask& C2, int g) {
  long long count = 0;
  C1.for_each([&](int x) { count += C2.test(G.mul(G.inv(x), g)); });
  double expected = static_cast<double>(C1.count()) * static_cast<double>(C2.count()) /
                    static_cast<double>(G.order());
  return static_cast<double>(count) / expected;
}

namespace {

struct TypeClass {
  std::vector<int> type;
  SubsetMask members;
  int cycles = 0;
};

std::string type_label(const std::vector<int>& type) {
  std::string s;
  for (size_t i = 0; i < type.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(type[static_cast<size_t>(i)]);
  }
  return s;
}

// Cycle-type classes of `universe` that lie inside the word image, ranked by
// fewest cycles, then largest size, then label.
std::vector<TypeClass> usable_classes(const FiniteGroup& A, const SubsetMask& universe,
                                      const SubsetMask& image) {
  std::map<std::vector<int>, SubsetMask> buckets;
  universe.for_each([&](int g) {
    auto t = A.cycle_type(g);
    auto it = buckets.find(t);
    if (it == buckets.end()) it = buckets.emplace(t, SubsetMask(A.order())).first;
    it->second.set(g);
  });
  std::vector<TypeClass> out;
  for (auto& [t, mask] : buckets) {
    if (!mask.is_subset_of(image)) continue;
    TypeClass tc;
    tc.type = t;
    tc.cycles = static_cast<int>(t.size());
    tc.members = std::move(mask);
    out.push_back(std::move(tc));
  }
  std::sort(out.begin(), out.end(), [](const TypeClass& a, const TypeClass& b) {
    if (a.cycles != b.cycles) return a.cycles < b.cycles;
    int ca = a.members.count(), cb = b.members.count();
    if (ca != cb) return ca > cb;
    return a.type < b.type;
  });
  return out;
}

int auto_pair_size(long long group_order, int class_size) {
  double target = 1.5 * std::sqrt(static_cast<double>(group_order) * std::log(static_cast<double>(group_order)));
  return std::min(class_size, static_cast<int>(std::ceil(target)));
}

}  // namespace

StratifiedReport stratified_thin_base(int n, const FreeWord& w1, const FreeWord& w2,
                                      const StratifiedParams& params, uint64_t seed) {
  if (n < 5 || n > 9) throw std::invalid_argument("stratified_thin_base: need 5 <= n <= 9");

  StratifiedReport rep;
  rep.n = n;
  rep.w1 = w1.str();
  rep.w2 = w2.str();

  FiniteGroup A = alternating_group(n);
  const long long N = A.order();

  // Integer-safe fixed-point thresholds around n^(2/3) and 2n/3.
  int f_low = 0;
  while (static_cast<long long>(f_low + 1) * (f_low + 1) * (f_low + 1) <= static_cast<long long>(n) * n) ++f_low;
  int strata_lo = 0;
  while (static_cast<long long>(strata_lo) * strata_lo * strata_lo < static_cast<long long>(n) * n) ++strata_lo;
  const int tail_lo = (2 * n + 2) / 3;  // ceil(2n/3)
  const int strata_hi = tail_lo - 1;
  rep.z1_max_fixed = f_low;
  rep.tail_min_fixed = tail_lo;

  // Word images over A_n: exhaustive within the tuple budget, else sampled
  // with conjugation closure.
  auto image_of = [&](const FreeWord& w, uint64_t stream) {
    double total = std::pow(static_cast<double>(N), w.rank());
    if (total <= static_cast<double>(kExhaustiveTupleBudget)) return word_image_exhaustive(A, w);
    return word_image_sampled(A, w, params.sample_trials, derive_seed(seed, stream));
  };
  WordImage W1 = image_of(w1, 1);
  WordImage W2 = image_of(w2, 2);
  rep.images_exact = W1.exact && W2.exact;

  SubsetMask X(A.order()), Y(A.order());
  bool all_certified = true;

  // Fixed-point data per element.
  std::vector<int> fix_count(static_cast<size_t>(N));
  std::vector<uint16_t> fix_mask(static_cast<size_t>(N));
  for (int g = 0; g < N; ++g) {
    const uint8_t* img = A.image(g);
    uint16_t m = 0;
    for (int i = 0; i < n; ++i)
      if (img[i] == i) m |= static_cast<uint16_t>(1u << i);
    fix_mask[static_cast<size_t>(g)] = m;
    fix_count[static_cast<size_t>(g)] = std::popcount(m);
  }

  // Bulk block: everything with at most n^(2/3) fixed points, covered by a
  // sampled thin pair drawn from the largest few-cycle classes.
  {
    SubsetMask Z1(A.order());
    for (int g = 0; g < N; ++g)
      if (fix_count[static_cast<size_t>(g)] <= f_low) Z1.set(g);

    StratumReport sr;
    sr.label = "Z1";
    sr.z_size = Z1.count();

    auto full = SubsetMask::full_set(A.order());
    auto classes1 = usable_classes(A, full, W1.image);
    auto classes2 = usable_classes(A, full, W2.image);
    if (classes1.empty() || classes2.empty()) {
      sr.error = "no S_n-class inside the word image";
      all_certified = false;
    } else {
      const TypeClass& c1 = classes1.front();
      const TypeClass& c2 = classes2.front();
      sr.c1_type = type_label(c1.type);
      sr.c2_type = type_label(c2.type);
      sr.c1_size = c1.members.count();
      sr.c2_size = c2.members.count();
      sr.x0 = params.x0 > 0 ? std::min<int>(params.x0, static_cast<int>(sr.c1_size))
                            : auto_pair_size(N, static_cast<int>(sr.c1_size));
      sr.y0 = params.y0 > 0 ? std::min<int>(params.y0, static_cast<int>(sr.c2_size))
                            : auto_pair_size(N, static_cast<int>(sr.c2_size));
      ThinPairResult r = sample_thin_pair(A, c1.members, c2.members, Z1, sr.x0, sr.y0,
                                          derive_seed(seed, 10), params.max_attempts);
      sr.attempts = r.attempts;
      sr.certified = r.certified;
      if (!r.feasible) sr.error = "class pair cannot cover the block";
      else if (!r.certified) sr.error = "attempt budget exhausted";
      if (r.certified) {
        X |= r.X0;
        Y |= r.Y0;
      }
      all_certified = all_certified && r.certified;
    }
    rep.strata.push_back(std::move(sr));
  }

  // Middle strata: one per fixed-point set T, classes drawn inside the
  // pointwise stabilizer (an alternating group on the complement) and
  // intersected with the global word image.
  std::map<uint16_t, SubsetMask> strata_z;
  for (int g = 0; g < N; ++g) {
    int f = fix_count[static_cast<size_t>(g)];
    if (f < strata_lo || f > strata_hi) continue;
    uint16_t T = fix_mask[static_cast<size_t>(g)];
    auto it = strata_z.find(T);
    if (it == strata_z.end()) it = strata_z.emplace(T, SubsetMask(A.order())).first;
    it->second.set(g);
  }
  for (auto& [T, Z_T] : strata_z) {
    StratumReport sr;
    {
      std::string lbl = "T={";
      bool first = true;
      for (int i = 0; i < n; ++i)
        if (T >> i & 1) {
          if (!first) lbl += ",";
          lbl += std::to_string(i);
          first = false;
        }
      sr.label = lbl + "}";
    }
    sr.z_size = Z_T.count();

    // Pointwise stabilizer of T.
    SubsetMask stab(A.order());
    for (int g = 0; g < N; ++g)
      if ((fix_mask[static_cast<size_t>(g)] & T) == T) stab.set(g);

    auto classes1 = usable_classes(A, stab, W1.image);
    auto classes2 = usable_classes(A, stab, W2.image);
    if (classes1.empty() || classes2.empty()) {
      sr.error = "no stabilizer class inside the word image";
      all_certified = false;
      rep.strata.push_back(std::move(sr));
      continue;
    }
    const TypeClass& c1 = classes1.front();
    const TypeClass& c2 = classes2.front();
    sr.c1_type = type_label(c1.type);
    sr.c2_type = type_label(c2.type);
    sr.c1_size = c1.members.count();
    sr.c2_size = c2.members.count();
    sr.x0 = static_cast<int>(sr.c1_size);
    sr.y0 = static_cast<int>(sr.c2_size);
    ThinPairResult r = sample_thin_pair(A, c1.members, c2.members, Z_T, sr.x0, sr.y0,
                                        derive_seed(seed, 0x575700u + static_cast<uint64_t>(T)),
                                        params.max_attempts);
    sr.attempts = r.attempts;
    sr.certified = r.certified;
    if (!r.feasible) sr.error = "stratum class pair cannot cover its elements";
    else if (!r.certified) sr.error = "attempt budget exhausted";
    if (r.certified) {
      X |= r.X0;
      Y |= r.Y0;
    }
    all_certified = all_certified && r.certified;
    rep.strata.push_back(std::move(sr));
  }

  // Tail: nearly-trivial permutations patched one element at a time.
  {
    StratumReport sr;
    sr.label = "tail";
    long long patched = 0;
    bool ok = true;
    for (int g = 0; g < N && ok; ++g) {
      if (fix_count[static_cast<size_t>(g)] < tail_lo) continue;
      auto [x, y] = find_product_pair(A, W1.image, W2.image, g);
      if (x < 0) {
        sr.error = "element " + std::to_string(g) + " has no representation";
        ok = false;
        all_certified = false;
        break;
      }
      X.set(x);
      Y.set(y);
      ++patched;
    }
    sr.z_size = patched;
    sr.certified = ok;
    rep.tail_count = patched;
    rep.strata.push_back(std::move(sr));
  }

  rep.X = X;
  rep.Y = Y;
  rep.x_total = X.count();
  rep.y_total = Y.count();
  double denom = std::sqrt(2.0 * static_cast<double>(N) * std::log(2.0 * static_cast<double>(N)));
  rep.ratio_x = static_cast<double>(rep.x_total) / denom;
  rep.ratio_y = static_cast<double>(rep.y_total) / denom;

  if (!X.is_subset_of(W1.image) || !Y.is_subset_of(W2.image))
    throw std::logic_error("assembled cover left the word images");

  if (all_certified) {
    SubsetMask unc = product_cover_check(A, X, Y, SubsetMask::full_set(A.order()));
    rep.certified = unc.none();
    if (!rep.certified) rep.error = "assembled cover missed " + std::to_string(unc.count()) + " elements";
  } else {
    rep.certified = false;
    if (rep.error.empty()) rep.error = "one or more strata failed";
  }
  return rep;
}

}  // namespace thinbase
