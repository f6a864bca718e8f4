#include "thinbase/subgroups.hpp"

#include <algorithm>
#include <stdexcept>

#include "thinbase/rng.hpp"

namespace thinbase {

bool is_subgroup(const FiniteGroup& G, const SubsetMask& H) {
  if (H.size() != G.order() || !H.test(G.identity())) return false;
  const std::vector<int> elems = H.indices();
  const size_t h = elems.size();
  // Full closure check while affordable; seeded random products above.
  if (h * h <= (size_t{1} << 26)) {
    for (int a : elems)
      for (int b : elems)
        if (!H.test(G.mul(a, b))) return false;
  } else {
    Rng rng(0xc105edULL);
    for (int t = 0; t < 100000; ++t) {
      int a = elems[rng.below(h)];
      int b = elems[rng.below(h)];
      if (!H.test(G.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& G, const SubsetMask& H) {
  if (!is_subgroup(G, H)) return false;
  // A subgroup is normal iff it is a union of conjugacy classes.
  bool ok = true;
  H.for_each([&](int g) {
    if (ok && !G.classes()[static_cast<size_t>(G.class_of(g))].members.is_subset_of(H)) ok = false;
  });
  return ok;
}

std::optional<SubsetMask> subgroup_closure(const FiniteGroup& G, const std::vector<int>& seeds,
                                           int abort_above) {
  SubsetMask mask(G.order());
  std::vector<int> elems;
  auto add = [&](int g) {
    if (!mask.test(g)) {
      mask.set(g);
      elems.push_back(g);
    }
  };
  add(G.identity());
  for (int s : seeds) add(s);
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j < elems.size(); ++j) {
      add(G.mul(elems[i], elems[j]));
      add(G.mul(elems[j], elems[i]));
      if (abort_above > 0 && static_cast<int>(elems.size()) > abort_above) return std::nullopt;
    }
  }
  return mask;
}

NormalSubgroupList normal_subgroups(const FiniteGroup& G) {
  const auto& classes = G.classes();
  const int m = static_cast<int>(classes.size());
  NormalSubgroupList out;

  auto push_unique = [&](const SubsetMask& s) {
    for (const auto& t : out.subgroups)
      if (t == s) return;
    out.subgroups.push_back(s);
  };

  if (m - 1 <= 19) {
    // Which classes appear among products rep_i * C_j; one representative per
    // class suffices since the hit-set is conjugation invariant.
    std::vector<uint32_t> hits(static_cast<size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) {
      int rep = classes[static_cast<size_t>(i)].representative;
      for (int j = 0; j < m; ++j) {
        uint32_t h = 0;
        classes[static_cast<size_t>(j)].members.for_each(
            [&](int y) { h |= uint32_t{1} << G.class_of(G.mul(rep, y)); });
        hits[static_cast<size_t>(i) * m + j] = h;
      }
    }
    for (uint32_t u = 0; u < (uint32_t{1} << (m - 1)); ++u) {
      uint32_t cls = (u << 1) | 1;  // identity class always in
      bool closed = true;
      for (int i = 0; i < m && closed; ++i) {
        if (!(cls >> i & 1)) continue;
        for (int j = 0; j < m && closed; ++j) {
          if (!(cls >> j & 1)) continue;
          if (hits[static_cast<size_t>(i) * m + j] & ~cls) closed = false;
        }
      }
      if (!closed) continue;
      SubsetMask s(G.order());
      for (int i = 0; i < m; ++i)
        if (cls >> i & 1) s |= classes[static_cast<size_t>(i)].members;
      out.subgroups.push_back(std::move(s));
    }
    out.complete = true;
  } else {
    out.complete = false;
    // Lattice generated by single-class closures and their joins.
    std::vector<SubsetMask> gens;
    for (int i = 0; i < m; ++i) {
      std::vector<int> seed = classes[static_cast<size_t>(i)].members.indices();
      gens.push_back(*subgroup_closure(G, seed));
    }
    for (const auto& s : gens) push_unique(s);
    bool grew = true;
    while (grew) {
      grew = false;
      const size_t cur = out.subgroups.size();
      for (size_t a = 0; a < cur; ++a)
        for (size_t b = a + 1; b < cur; ++b) {
          SubsetMask joined = out.subgroups[a] | out.subgroups[b];
          auto closure = subgroup_closure(G, joined.indices());
          size_t before = out.subgroups.size();
          push_unique(*closure);
          if (out.subgroups.size() != before) grew = true;
        }
    }
  }

  std::sort(out.subgroups.begin(), out.subgroups.end(), [](const SubsetMask& a, const SubsetMask& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.indices() < b.indices();
  });
  return out;
}

std::optional<SubsetMask> find_large_subgroup(const FiniteGroup& G, double threshold) {
  if (threshold < 1) threshold = 1;
  const int n = G.order();

  auto accept = [&](const SubsetMask& H) {
    int h = H.count();
    return h < n && static_cast<double>(h) >= threshold && is_subgroup(G, H);
  };

  if (G.has_perm_images()) {
    for (int point = 0; point < G.degree(); ++point) {
      SubsetMask stab(n);
      for (int g = 0; g < n; ++g)
        if (G.image(g)[point] == point) stab.set(g);
      if (accept(stab)) return stab;
    }
  }

  for (int g = 0; g < n; ++g) {
    int ord = G.element_order(g);
    if (ord >= threshold && ord < n) {
      SubsetMask cyc(n);
      int cur = 0;
      do {
        cyc.set(cur);
        cur = G.mul(cur, g);
      } while (cur != 0);
      if (accept(cyc)) return cyc;
    }
  }

  Rng rng(0x7a1bbeefULL);  // fixed sampling stream
  for (int t = 0; t < 2000 && n > 2; ++t) {
    int a = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n - 1)));
    int b = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n - 1)));
    auto closure = subgroup_closure(G, {a, b}, n / 2);
    if (closure && accept(*closure)) return *closure;
  }
  return std::nullopt;
}

SubgroupEmbedding materialize_subgroup(const FiniteGroup& G, const SubsetMask& H) {
  std::vector<int> elems = H.indices();
  if (elems.empty() || elems[0] != G.identity())
    throw std::invalid_argument("subgroup mask must contain the identity");
  const int h = static_cast<int>(elems.size());

  SubgroupEmbedding out;
  out.to_parent = elems;

  if (G.has_perm_images()) {
    std::vector<std::vector<int>> gen_images;
    gen_images.reserve(static_cast<size_t>(h));
    for (int g : elems) {
      const uint8_t* img = G.image(g);
      gen_images.emplace_back(img, img + G.degree());
    }
    out.group = FiniteGroup::from_generators(G.degree(), gen_images, G.name() + "-sub" + std::to_string(h));
    if (out.group.order() != h) throw std::invalid_argument("mask is not closed under multiplication");
    // BFS over the full element list discovers identity first, then the
    // elements in listed (= increasing parent) order.
    for (int i = 0; i < h; ++i) {
      const uint8_t* img = G.image(elems[static_cast<size_t>(i)]);
      std::vector<uint8_t> v(img, img + G.degree());
      auto idx = out.group.index_of_image(v);
      if (!idx || *idx != i) throw std::logic_error("subgroup indexing mismatch");
    }
    return out;
  }

  std::vector<int> local(static_cast<size_t>(G.order()), -1);
  for (int i = 0; i < h; ++i) local[static_cast<size_t>(elems[static_cast<size_t>(i)])] = i;
  std::vector<std::vector<int>> table(static_cast<size_t>(h), std::vector<int>(static_cast<size_t>(h)));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      int p = G.mul(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]);
      if (local[static_cast<size_t>(p)] < 0) throw std::invalid_argument("mask is not closed under multiplication");
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = local[static_cast<size_t>(p)];
    }
  out.group = FiniteGroup::from_table(std::move(table), G.name() + "-sub" + std::to_string(h));
  return out;
}

bool verify_homomorphism(const FiniteGroup& S, const FiniteGroup& T, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != S.order()) return false;
  if (map[static_cast<size_t>(S.identity())] != T.identity()) return false;
  for (int a = 0; a < S.order(); ++a)
    for (int b = 0; b < S.order(); ++b)
      if (map[static_cast<size_t>(S.mul(a, b))] !=
          T.mul(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]))
        return false;
  return true;
}

std::vector<int> right_coset_reps(const FiniteGroup& G, const SubsetMask& H) {
  std::vector<char> seen(static_cast<size_t>(G.order()), 0);
  std::vector<int> elems = H.indices();
  std::vector<int> reps;
  for (int g = 0; g < G.order(); ++g) {
    if (seen[static_cast<size_t>(g)]) continue;
    reps.push_back(g);
    for (int s : elems) seen[static_cast<size_t>(G.mul(s, g))] = 1;
  }
  return reps;
}

QuotientResult quotient(const FiniteGroup& G, const SubsetMask& N) {
  if (!is_subgroup(G, N)) throw std::invalid_argument("N is not a subgroup");
  if (!is_normal_subgroup(G, N)) throw std::invalid_argument("N is not normal");

  const int n = G.order();
  QuotientResult out;
  out.projection.assign(static_cast<size_t>(n), -1);
  std::vector<int> elems = N.indices();
  for (int g = 0; g < n; ++g) {
    if (out.projection[static_cast<size_t>(g)] >= 0) continue;
    int q = static_cast<int>(out.coset_reps.size());
    out.coset_reps.push_back(g);
    for (int s : elems) out.projection[static_cast<size_t>(G.mul(s, g))] = q;
  }

  const int q = static_cast<int>(out.coset_reps.size());
  std::vector<std::vector<int>> table(static_cast<size_t>(q), std::vector<int>(static_cast<size_t>(q)));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      table[static_cast<size_t>(a)][static_cast<size_t>(b)] = out.projection[static_cast<size_t>(
          G.mul(out.coset_reps[static_cast<size_t>(a)], out.coset_reps[static_cast<size_t>(b)]))];
  out.group = FiniteGroup::from_table(std::move(table), G.name() + "/N" + std::to_string(N.count()));
  return out;
}

}  // namespace thinbase
