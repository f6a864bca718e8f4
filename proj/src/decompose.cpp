#include "thinbase/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "thinbase/cover.hpp"
#include "thinbase/subgroups.hpp"

namespace thinbase {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct ResiduePair {
  std::vector<int> X, Y;
};

// X = {0..a-1}, Y = {0, a, 2a, ...}: covers Z/p whenever a*b >= p.
ResiduePair interval_times_progression(long long p, long long a) {
  a = std::clamp<long long>(a, 1, p);
  long long b = (p + a - 1) / a;
  ResiduePair out;
  for (long long i = 0; i < a; ++i) out.X.push_back(static_cast<int>(i));
  for (long long j = 0; j < b; ++j) out.Y.push_back(static_cast<int>((j * a) % p));
  return out;
}

bool cyclic_bounds_ok(const ResiduePair& r, long long p, double x) {
  return within_x_bound(static_cast<long long>(r.X.size()), x) &&
         within_y_bound(static_cast<long long>(r.Y.size()), p, x);
}

void verify_cyclic_cover(const ResiduePair& r, long long p) {
  std::vector<char> hit(static_cast<size_t>(p), 0);
  for (int a : r.X)
    for (int b : r.Y) hit[static_cast<size_t>((a + b) % p)] = 1;
  for (long long v = 0; v < p; ++v)
    if (!hit[static_cast<size_t>(v)]) throw std::logic_error("cyclic decomposition does not cover Z/p");
}

}  // namespace

bool within_x_bound(long long count, double x) { return static_cast<double>(count) <= x; }

bool within_y_bound(long long count, long long n, double x) {
  if (x == std::floor(x)) {
    // count <= 2n/x  <=>  count*x <= 2n, exactly in integers
    return count * static_cast<long long>(x) <= 2 * n;
  }
  double xx = x * x;
  double rounded = std::round(xx);
  if (std::abs(xx - rounded) < 1e-9 && rounded > 0) {
    // x targets sqrt(M): count <= 2n/sqrt(M) <=> count^2 * M <= 4n^2
    return static_cast<unsigned long long>(count) * static_cast<unsigned long long>(count) *
               static_cast<unsigned long long>(rounded) <=
           4ull * static_cast<unsigned long long>(n) * static_cast<unsigned long long>(n);
  }
  return static_cast<long double>(count) * static_cast<long double>(x) <= 2.0L * static_cast<long double>(n);
}

CyclicDecomposition cyclic_decompose(long long p, double x) {
  if (!is_prime(p)) throw std::invalid_argument("cyclic_decompose: p must be prime");
  if (x < 2.0 || x > static_cast<double>(p)) throw std::invalid_argument("cyclic_decompose: need 2 <= x <= p");

  CyclicDecomposition out;

  auto finish = [&](ResiduePair r, std::string method) {
    verify_cyclic_cover(r, p);
    if (!cyclic_bounds_ok(r, p, x))
      throw std::logic_error("cyclic decomposition bound violated for p=" + std::to_string(p));
    out.X = std::move(r.X);
    out.Y = std::move(r.Y);
    out.method = std::move(method);
    return out;
  };

  if (p <= 7) {
    for (long long a = std::min<long long>(static_cast<long long>(std::floor(x)), p); a >= 1; --a) {
      ResiduePair r = interval_times_progression(p, a);
      if (cyclic_bounds_ok(r, p, x)) return finish(std::move(r), "small");
    }
    throw std::logic_error("no small-prime decomposition found");  // unreachable for 2 <= x <= p
  }

  const double sqrt2p = std::sqrt(2.0 * static_cast<double>(p));
  if (x >= static_cast<double>(p) - 2.0) {
    ResiduePair r;
    for (long long j = 0; 2 * j <= p - 1; ++j) r.X.push_back(static_cast<int>(2 * j));
    r.Y = {0, 1};
    return finish(std::move(r), "near-p");
  }
  {
    // Direct grid construction; guaranteed for x >= sqrt(2p) but accepted
    // whenever the verified bounds allow it.  b < max(p/a+1, 2p/x) can exceed
    // 2p/x at the boundary, in which case the mirrored construction is used.
    ResiduePair r = interval_times_progression(p, static_cast<long long>(std::floor(x)));
    if (cyclic_bounds_ok(r, p, x)) return finish(std::move(r), "grid");
  }

  // Build for the mirrored parameter 2p/x and swap sides.
  double xm = 2.0 * static_cast<double>(p) / x;
  ResiduePair m;
  if (xm >= static_cast<double>(p) - 2.0) {
    for (long long j = 0; 2 * j <= p - 1; ++j) m.X.push_back(static_cast<int>(2 * j));
    m.Y = {0, 1};
  } else {
    m = interval_times_progression(p, static_cast<long long>(std::floor(xm)));
  }
  std::swap(m.X, m.Y);
  if (cyclic_bounds_ok(m, p, x)) return finish(std::move(m), x >= sqrt2p ? "mirrored-fallback" : "mirrored");

  // Last resort: scan interval sizes downward.
  for (long long a = std::min<long long>(static_cast<long long>(std::floor(x)), p); a >= 1; --a) {
    ResiduePair r = interval_times_progression(p, a);
    if (cyclic_bounds_ok(r, p, x)) return finish(std::move(r), "grid-scan");
  }
  throw std::logic_error("cyclic_decompose failed for p=" + std::to_string(p) + ", x=" + std::to_string(x));
}

namespace {

DecompositionCertificate decompose_rec(const FiniteGroup& G, double x, int depth);

DecompositionCertificate solve_via_subgroup(const FiniteGroup& G, double x, const SubsetMask& H,
                                            const std::string& label, int depth) {
  const long long h = H.count();
  const long long n = G.order();
  DecompositionCertificate cert;
  DecompositionStep step{label, n, x, h, 0};

  if (static_cast<double>(h) > x) {
    // Recurse inside H, then translate across right cosets.
    SubgroupEmbedding sub = materialize_subgroup(G, H);
    DecompositionCertificate inner = decompose_rec(sub.group, x, depth + 1);
    cert.X = SubsetMask(static_cast<int>(n));
    inner.X.for_each([&](int i) { cert.X.set(sub.to_parent[static_cast<size_t>(i)]); });
    std::vector<int> reps = right_coset_reps(G, H);
    cert.Y = SubsetMask(static_cast<int>(n));
    inner.Y.for_each([&](int i) {
      int y = sub.to_parent[static_cast<size_t>(i)];
      for (int r : reps) cert.Y.set(G.mul(y, r));
    });
    cert.trace.push_back(step);
    cert.trace.insert(cert.trace.end(), inner.trace.begin(), inner.trace.end());
    return cert;
  }

  // x/2 <= |H| <= x: the subgroup itself is one side.
  std::vector<int> reps = right_coset_reps(G, H);
  step.quotient_order = static_cast<long long>(reps.size());
  cert.X = H;
  cert.Y = SubsetMask::of(static_cast<int>(n), reps);
  cert.trace.push_back(step);
  return cert;
}

DecompositionCertificate decompose_rec(const FiniteGroup& G, double x, int depth) {
  if (depth > 64) throw std::logic_error("decomposition recursion too deep");
  const long long n = G.order();

  DecompositionCertificate cert;
  cert.x_target = x;

  if (n == 1) {
    cert.X = SubsetMask::of(1, {0});
    cert.Y = SubsetMask::of(1, {0});
    return cert;
  }

  // Symmetric roles of x and 2n/x: solve at the smaller of the two targets
  // and swap back.  Comparing the mirrored value directly keeps the branch
  // terminating even when x sits exactly at sqrt(2n).
  // Swapping sides uses inverses: X'Y' = G gives (Y'^-1)(X'^-1) = G.
  const double mirrored = 2.0 * static_cast<double>(n) / x;
  if (mirrored < x) {
    DecompositionCertificate inner = decompose_rec(G, mirrored, depth + 1);
    cert.X = SubsetMask(static_cast<int>(n));
    cert.Y = SubsetMask(static_cast<int>(n));
    inner.Y.for_each([&](int g) { cert.X.set(G.inv(g)); });
    inner.X.for_each([&](int g) { cert.Y.set(G.inv(g)); });
    cert.trace.push_back({"swap", n, x, 0, 0});
    cert.trace.insert(cert.trace.end(), inner.trace.begin(), inner.trace.end());
    return cert;
  }

  if (auto H = find_large_subgroup(G, x / 2.0)) {
    const bool strict = static_cast<double>(H->count()) > x;
    DecompositionCertificate inner = solve_via_subgroup(G, x, *H, strict ? "a" : "a'", depth);
    cert.X = inner.X;
    cert.Y = inner.Y;
    cert.trace = std::move(inner.trace);
    return cert;
  }

  // No proper subgroup of order >= x/2 was found; look for a small normal
  // subgroup to factor out.
  NormalSubgroupList ns = normal_subgroups(G);
  const SubsetMask* best = nullptr;
  for (const auto& N : ns.subgroups) {
    int c = N.count();
    if (c <= 1 || c >= n) continue;
    if (static_cast<double>(c) < x / 2.0 && (!best || c > best->count())) best = &N;
  }
  if (best) {
    QuotientResult q = quotient(G, *best);
    const long long nn = best->count();
    DecompositionCertificate inner = decompose_rec(q.group, x / static_cast<double>(nn), depth + 1);
    cert.X = SubsetMask(static_cast<int>(n));
    for (int g = 0; g < n; ++g)
      if (inner.X.test(q.projection[static_cast<size_t>(g)])) cert.X.set(g);
    cert.Y = SubsetMask(static_cast<int>(n));
    inner.Y.for_each([&](int qi) { cert.Y.set(q.coset_reps[static_cast<size_t>(qi)]); });
    cert.trace.push_back({"b", n, x, nn, q.group.order()});
    cert.trace.insert(cert.trace.end(), inner.trace.begin(), inner.trace.end());
    return cert;
  }

  // Simple group.
  if (G.is_abelian()) {
    if (!is_prime(n)) throw std::logic_error("abelian group without proper subgroups must have prime order");
    CyclicDecomposition cd = cyclic_decompose(n, x);
    int g = 1;  // any non-identity element generates
    std::vector<int> pow(static_cast<size_t>(n));
    int cur = 0;
    for (long long j = 0; j < n; ++j) {
      pow[static_cast<size_t>(j)] = cur;
      cur = G.mul(cur, g);
    }
    cert.X = SubsetMask(static_cast<int>(n));
    for (int r : cd.X) cert.X.set(pow[static_cast<size_t>(r)]);
    cert.Y = SubsetMask(static_cast<int>(n));
    for (int r : cd.Y) cert.Y.set(pow[static_cast<size_t>(r)]);
    cert.trace.push_back({"abelian", n, x, 0, 0});
    return cert;
  }

  auto M = find_large_subgroup(G, std::sqrt(static_cast<double>(n)));
  if (!M)
    throw std::runtime_error("decomposition stuck: no subgroup of order >= sqrt(n) found in group '" +
                             G.name() + "'");
  DecompositionCertificate inner = solve_via_subgroup(G, x, *M, "simple-max", depth);
  cert.X = inner.X;
  cert.Y = inner.Y;
  cert.trace = std::move(inner.trace);
  return cert;
}

}  // namespace

DecompositionCertificate group_decompose(const FiniteGroup& G, double x) {
  const long long n = G.order();
  if (n > 1 && (x < 2.0 || x > static_cast<double>(n)))
    throw std::invalid_argument("group_decompose: need 2 <= x <= |G|");

  DecompositionCertificate cert = decompose_rec(G, x, 0);
  cert.x_target = x;

  if (!product_cover_check(G, cert.X, cert.Y, SubsetMask::full_set(G.order())).none())
    throw std::logic_error("decomposition certificate failed product verification");
  if (n > 1 && (!within_x_bound(cert.X.count(), x) || !within_y_bound(cert.Y.count(), n, x)))
    throw std::logic_error("decomposition certificate violates size bounds");
  cert.verified = true;
  return cert;
}

SquareRootResult square_root(const FiniteGroup& G) {
  const long long n = G.order();
  SquareRootResult out;
  out.bound = std::sqrt(8.0 * static_cast<double>(n));
  if (n == 1) {
    out.root = SubsetMask::of(1, {0});
    out.certificate.X = out.root;
    out.certificate.Y = out.root;
    out.certificate.verified = true;
    out.verified = true;
    return out;
  }
  out.certificate = group_decompose(G, std::sqrt(2.0 * static_cast<double>(n)));
  out.root = out.certificate.X | out.certificate.Y;

  long long r = out.root.count();
  bool size_ok = static_cast<unsigned long long>(r) * static_cast<unsigned long long>(r) <=
                 8ull * static_cast<unsigned long long>(n);
  bool cover_ok = product_cover_check(G, out.root, out.root, SubsetMask::full_set(G.order())).none();
  if (!size_ok || !cover_ok) throw std::logic_error("square root failed verification");
  out.verified = true;
  return out;
}

}  // namespace thinbase
