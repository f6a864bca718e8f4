#include "thinbase/cover.hpp"

#include <stdexcept>

namespace thinbase {

namespace {
void require_sizes(const FiniteGroup& G, const SubsetMask& m) {
  if (m.size() != G.order()) throw std::invalid_argument("mask does not belong to this group");
}
}  // namespace

SubsetMask product_cover_check(const FiniteGroup& G, const SubsetMask& X, const SubsetMask& Y,
                               const SubsetMask& Z) {
  require_sizes(G, X);
  require_sizes(G, Y);
  require_sizes(G, Z);

  SubsetMask uncovered = Z;
  if (uncovered.none()) return uncovered;

  const std::vector<int> ys = Y.indices();
  bool done = false;
  X.for_each([&](int x) {
    if (done) return;
    if (G.has_mul_table()) {
      const int* row = G.mul_row(x);
      for (int y : ys) uncovered.clear(row[y]);
    } else {
      for (int y : ys) uncovered.clear(G.mul(x, y));
    }
    if (uncovered.none()) done = true;
  });
  return uncovered;
}

SubsetMask cover_oracle(const FiniteGroup& G, const SubsetMask& X, const SubsetMask& Y,
                        const SubsetMask& Z) {
  require_sizes(G, X);
  require_sizes(G, Y);
  require_sizes(G, Z);

  std::vector<char> covered(static_cast<size_t>(G.order()), 0);
  const std::vector<int> xs = X.indices();
  const std::vector<int> ys = Y.indices();
  for (int x : xs)
    for (int y : ys) covered[static_cast<size_t>(G.mul(x, y))] = 1;

  SubsetMask uncovered(G.order());
  Z.for_each([&](int z) {
    if (!covered[static_cast<size_t>(z)]) uncovered.set(z);
  });
  return uncovered;
}

std::pair<int, int> find_product_pair(const FiniteGroup& G, const SubsetMask& X, const SubsetMask& Y,
                                      int z) {
  const std::vector<int> xs = X.indices();
  for (int x : xs) {
    int y = G.mul(G.inv(x), z);
    if (Y.test(y)) return {x, y};
  }
  return {-1, -1};
}

}  // namespace thinbase
