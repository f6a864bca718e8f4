#include "thinbase/sampler.hpp"

#include <stdexcept>

#include "thinbase/rng.hpp"

namespace thinbase {

namespace {

// Pairwise recheck on a sampled slice of Z; independent of the bitset kernel.
void recheck_sampled(const FiniteGroup& G, const SubsetMask& X0, const SubsetMask& Y0,
                     const SubsetMask& Z, uint64_t seed) {
  std::vector<int> zs = Z.indices();
  if (zs.empty()) return;
  size_t want = std::max<size_t>(1, zs.size() / 100);
  Rng rng(derive_seed(seed, 0xCCu));
  for (size_t t = 0; t < want; ++t) {
    int z = zs[rng.below(zs.size())];
    if (find_product_pair(G, X0, Y0, z).first < 0)
      throw std::logic_error("certified cover failed pairwise recheck at element " + std::to_string(z));
  }
}

}  // namespace

ThinPairResult sample_thin_pair(const FiniteGroup& G, const SubsetMask& X, const SubsetMask& Y,
                                const SubsetMask& Z, int x0, int y0, uint64_t seed, int max_attempts) {
  const std::vector<int> xs = X.indices();
  const std::vector<int> ys = Y.indices();
  if (x0 > static_cast<int>(xs.size()) || y0 > static_cast<int>(ys.size()))
    throw std::invalid_argument("sample_thin_pair: x0/y0 exceed |X|/|Y|");
  if (x0 < 0 || y0 < 0) throw std::invalid_argument("sample_thin_pair: negative sizes");

  ThinPairResult out;
  out.seed = seed;

  // Full-set pretest: if X*Y cannot cover Z, no subset ever will.
  SubsetMask pre = product_cover_check(G, X, Y, Z);
  if (pre.any()) {
    out.feasible = false;
    out.X0 = X;
    out.Y0 = Y;
    out.uncovered = pre;
    out.uncovered_history.push_back(pre.count());
    return out;
  }

  int best_uncovered = -1;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<uint64_t>(attempt)));
    SubsetMask X0 = SubsetMask::of(G.order(), rng.sample_subset(xs, x0));
    SubsetMask Y0 = SubsetMask::of(G.order(), rng.sample_subset(ys, y0));
    SubsetMask unc = product_cover_check(G, X0, Y0, Z);
    int cnt = unc.count();
    out.uncovered_history.push_back(cnt);
    out.attempts = attempt + 1;
    if (best_uncovered < 0 || cnt < best_uncovered) {
      best_uncovered = cnt;
      out.X0 = std::move(X0);
      out.Y0 = std::move(Y0);
      out.uncovered = std::move(unc);
    }
    if (cnt == 0) {
      out.certified = true;
      recheck_sampled(G, out.X0, out.Y0, Z, seed);
      return out;
    }
  }
  return out;
}

PatchedCover patch_cover(const FiniteGroup& G, const ThinPairResult& base, const SubsetMask& S1,
                         const SubsetMask& W1, const SubsetMask& W2) {
  PatchedCover out;
  out.C1 = base.X0;
  out.C2 = base.Y0;
  S1.for_each([&](int z) {
    auto [x, y] = find_product_pair(G, W1, W2, z);
    if (x < 0)
      throw std::invalid_argument("patch_cover: element " + std::to_string(z) +
                                  " has no representation in W1*W2");
    out.C1.set(x);
    out.C2.set(y);
  });
  out.uncovered = product_cover_check(G, out.C1, out.C2, SubsetMask::full_set(G.order()));
  out.certified = out.uncovered.none();
  return out;
}

}  // namespace thinbase
