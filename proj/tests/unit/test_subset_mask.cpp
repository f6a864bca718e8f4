#include <doctest.h>

#include <set>

#include "thinbase/rng.hpp"
#include "thinbase/subset_mask.hpp"

using namespace thinbase;

TEST_CASE("subset mask basic operations") {
  SubsetMask m(130);
  CHECK(m.none());
  m.set(0);
  m.set(64);
  m.set(129);
  CHECK(m.count() == 3);
  CHECK(m.test(64));
  CHECK(!m.test(63));
  m.clear(64);
  CHECK(m.count() == 2);
  CHECK(m.indices() == std::vector<int>{0, 129});
  CHECK(m.smallest() == 0);

  CHECK(SubsetMask::full_set(130).count() == 130);
  CHECK(SubsetMask::full_set(64).count() == 64);
}

TEST_CASE("subset mask ops agree with std::set reference") {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(rng.below(200));
    std::set<int> ra, rb;
    SubsetMask a(n), b(n);
    for (int i = 0; i < n / 2; ++i) {
      int x = static_cast<int>(rng.below(n));
      int y = static_cast<int>(rng.below(n));
      a.set(x);
      ra.insert(x);
      b.set(y);
      rb.insert(y);
    }
    SubsetMask un = a | b;
    SubsetMask in = a & b;
    SubsetMask diff = a;
    diff.and_not(b);

    std::set<int> runion, rinter, rdiff;
    for (int v : ra) {
      if (!rb.count(v)) rdiff.insert(v);
      runion.insert(v);
    }
    for (int v : rb) runion.insert(v);
    for (int v : ra)
      if (rb.count(v)) rinter.insert(v);

    CHECK(un.indices() == std::vector<int>(runion.begin(), runion.end()));
    CHECK(in.indices() == std::vector<int>(rinter.begin(), rinter.end()));
    CHECK(diff.indices() == std::vector<int>(rdiff.begin(), rdiff.end()));
    CHECK(in.is_subset_of(a));
    CHECK(a.is_subset_of(un));
  }
}

TEST_CASE("sample_subset draws distinct pool entries deterministically") {
  std::vector<int> pool{10, 20, 30, 40, 50, 60, 70};
  Rng a(7), b(7);
  auto s1 = a.sample_subset(pool, 3);
  auto s2 = b.sample_subset(pool, 3);
  CHECK(s1 == s2);
  CHECK(s1.size() == 3);
  Rng c(8);
  for (int t = 0; t < 50; ++t) {
    auto s = c.sample_subset(pool, 4);
    CHECK(s.size() == 4);
    std::set<int> uniq(s.begin(), s.end());
    CHECK(uniq.size() == 4);
    for (int v : uniq) CHECK((v % 10) == 0);
  }
}
