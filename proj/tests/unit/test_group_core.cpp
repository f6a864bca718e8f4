#include <doctest.h>

#include <algorithm>
#include <map>

#include "thinbase/cover.hpp"
#include "thinbase/group.hpp"
#include "thinbase/io.hpp"
#include "thinbase/rng.hpp"
#include "thinbase/subgroups.hpp"

using namespace thinbase;

namespace {
FiniteGroup load(const std::string& stem) {
  return load_group(std::string(THINBASE_DATA_DIR) + "/groups/" + stem + ".json");
}

std::vector<int> class_sizes(const FiniteGroup& G) {
  std::vector<int> out;
  for (const auto& c : G.classes()) out.push_back(c.size);
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_CASE("closure from generators: A5 and friends") {
  FiniteGroup a5 = FiniteGroup::from_generators(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}, "A5");
  CHECK(a5.order() == 60);
  CHECK(a5.identity() == 0);
  CHECK(a5.has_mul_table());
  CHECK(a5.has_perm_images());
  for (int g = 0; g < a5.order(); ++g) {
    CHECK(a5.mul(0, g) == g);
    CHECK(a5.mul(g, 0) == g);
    CHECK(a5.mul(g, a5.inv(g)) == 0);
  }
}

TEST_CASE("empty generator list yields the trivial group") {
  FiniteGroup t = FiniteGroup::from_generators(3, {}, "trivial");
  CHECK(t.order() == 1);
  CHECK(t.classes().size() == 1);
}

TEST_CASE("explicit 2x2 table is Z/2") {
  FiniteGroup z2 = FiniteGroup::from_table({{0, 1}, {1, 0}}, "Z/2");
  CHECK(z2.order() == 2);
  CHECK(z2.inv(1) == 1);
}

TEST_CASE("table with displaced identity is re-indexed") {
  // Z/3 written with identity at position 2.
  FiniteGroup g = FiniteGroup::from_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}, "shifted");
  CHECK(g.order() == 3);
  CHECK(g.mul(0, 1) == 1);
  CHECK(g.element_order(1) == 3);
}

TEST_CASE("bad tables are rejected") {
  CHECK_THROWS(FiniteGroup::from_table({{0, 1}, {0, 1}}, "not latin"));
  CHECK_THROWS(FiniteGroup::from_table({{1, 2, 0}, {0, 1, 2}, {2, 0, 1}}, "no identity"));
  // A Latin square with two-sided identity that fails associativity.
  CHECK_THROWS_WITH_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                                {1, 0, 3, 4, 2},
                                                {2, 3, 4, 0, 1},
                                                {3, 4, 1, 2, 0},
                                                {4, 2, 0, 1, 3}},
                                               "loop"),
                       doctest::Contains("not associative"), std::invalid_argument);
}

TEST_CASE("conjugacy classes of the small corpus") {
  CHECK(class_sizes(load("a5")) == std::vector<int>{1, 12, 12, 15, 20});
  CHECK(class_sizes(load("s4")) == std::vector<int>{1, 3, 6, 6, 8});
  CHECK(class_sizes(load("z5")) == std::vector<int>{1, 1, 1, 1, 1});

  FiniteGroup a5 = load("a5");
  int total = 0;
  for (const auto& c : a5.classes()) {
    total += c.size;
    CHECK(a5.order() % c.size == 0);
    CHECK(c.size * a5.centralizer_order(c.representative) == a5.order());
    CHECK(c.members.test(c.representative));
  }
  CHECK(total == a5.order());
  CHECK(a5.classes()[0].size == 1);
  CHECK(a5.classes()[0].representative == 0);
}

TEST_CASE("normal subgroups") {
  auto orders = [](const FiniteGroup& G) {
    std::vector<int> out;
    for (const auto& m : normal_subgroups(G).subgroups) out.push_back(m.count());
    return out;
  };
  CHECK(orders(load("s4")) == std::vector<int>{1, 4, 12, 24});
  CHECK(orders(load("a5")) == std::vector<int>{1, 60});
  CHECK(orders(load("z6")) == std::vector<int>{1, 2, 3, 6});
  CHECK(normal_subgroups(load("s4")).complete);

  FiniteGroup s4 = load("s4");
  for (const auto& m : normal_subgroups(s4).subgroups) CHECK(is_normal_subgroup(s4, m));
}

TEST_CASE("find_large_subgroup search") {
  FiniteGroup a5 = load("a5");
  auto h = find_large_subgroup(a5, std::sqrt(120.0));
  REQUIRE(h.has_value());
  CHECK(h->count() >= 11);
  CHECK(h->count() < 60);
  CHECK(is_subgroup(a5, *h));

  CHECK(!find_large_subgroup(load("z7"), 2.0).has_value());

  auto s4h = find_large_subgroup(load("s4"), 4.0);
  REQUIRE(s4h.has_value());
  CHECK(s4h->count() >= 6);
}

TEST_CASE("quotients") {
  FiniteGroup s4 = load("s4");
  auto ns = normal_subgroups(s4).subgroups;
  const SubsetMask* v4 = nullptr;
  for (const auto& m : ns)
    if (m.count() == 4) v4 = &m;
  REQUIRE(v4 != nullptr);
  QuotientResult q = quotient(s4, *v4);
  CHECK(q.group.order() == 6);
  CHECK(!q.group.is_abelian());  // S4/V4 is S3
  GroupHomomorphism proj{&s4, &q.group, q.projection};
  CHECK(verify_homomorphism(*proj.source, *proj.target, proj.map));
  // kernel of the projection is exactly V4
  SubsetMask kernel(s4.order());
  for (int g = 0; g < s4.order(); ++g)
    if (q.projection[static_cast<size_t>(g)] == 0) kernel.set(g);
  CHECK(kernel == *v4);

  FiniteGroup z6 = load("z6");
  SubsetMask half(6);
  for (int g = 0; g < 6; ++g)
    if (z6.power(g, 2) == 0 && z6.element_order(g) <= 2) half.set(g);
  CHECK(half.count() == 2);
  QuotientResult q2 = quotient(z6, half);
  CHECK(q2.group.order() == 3);

  // G / {e} is G again up to re-indexing.
  SubsetMask triv(6);
  triv.set(0);
  CHECK(quotient(z6, triv).group.order() == 6);

  SubsetMask not_normal(s4.order());
  not_normal.set(0);
  not_normal.set(1);
  CHECK_THROWS(quotient(s4, not_normal));
}

TEST_CASE("product_cover_check examples") {
  FiniteGroup a5 = load("a5");
  SubsetMask full = SubsetMask::full_set(60);
  CHECK(product_cover_check(a5, full, full, full).none());

  SubsetMask ident(60);
  ident.set(0);
  SubsetMask y(60);
  for (int g = 0; g < 60; g += 3) y.set(g);
  CHECK(product_cover_check(a5, ident, y, y).none());
  SubsetMask comp = full;
  comp.and_not(y);
  CHECK(product_cover_check(a5, ident, y, comp) == comp);
}

TEST_CASE("5-cycles plus identity: uncovered set cross-checked against the oracle") {
  FiniteGroup a5 = load("a5");
  SubsetMask x(60);
  x.set(0);
  for (const auto& cls : a5.classes())
    if (cls.size == 12 && a5.element_order(cls.representative) == 5) {
      x |= cls.members;
      break;
    }
  CHECK(x.count() == 13);
  SubsetMask full = SubsetMask::full_set(60);
  SubsetMask unc = product_cover_check(a5, x, x, full);
  CHECK(unc == cover_oracle(a5, x, x, full));
}

TEST_CASE("bitset kernel agrees with the pairwise oracle on random triples") {
  for (const char* stem : {"a5", "s4", "q8", "z12", "psl2_7"}) {
    FiniteGroup G = load(stem);
    Rng rng(0xabcdef);
    for (int t = 0; t < 100; ++t) {
      SubsetMask X(G.order()), Y(G.order()), Z(G.order());
      for (int i = 0; i < G.order(); ++i) {
        if (rng.below(3) == 0) X.set(i);
        if (rng.below(3) == 0) Y.set(i);
        if (rng.below(2) == 0) Z.set(i);
      }
      CHECK(product_cover_check(G, X, Y, Z) == cover_oracle(G, X, Y, Z));
    }
  }
}

TEST_CASE("subgroup materialization keeps structure") {
  FiniteGroup a5 = load("a5");
  auto h = find_large_subgroup(a5, 12.0);
  REQUIRE(h.has_value());
  SubgroupEmbedding sub = materialize_subgroup(a5, *h);
  CHECK(sub.group.order() == h->count());
  for (int i = 0; i < sub.group.order(); ++i)
    for (int j = 0; j < sub.group.order(); ++j) {
      int parent = a5.mul(sub.to_parent[static_cast<size_t>(i)], sub.to_parent[static_cast<size_t>(j)]);
      CHECK(sub.to_parent[static_cast<size_t>(sub.group.mul(i, j))] == parent);
    }
}

TEST_CASE("masks from a different group are rejected") {
  FiniteGroup z2 = load("z2");
  SubsetMask wrong(3);
  CHECK_THROWS(product_cover_check(z2, wrong, wrong, wrong));
}
