#include "thinbase/group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>

#include "thinbase/rng.hpp"

namespace thinbase {

namespace {

std::string image_key(const uint8_t* img, int degree) {
  return std::string(reinterpret_cast<const char*>(img), static_cast<size_t>(degree));
}

std::vector<uint8_t> compose(const uint8_t* a, const uint8_t* b, int degree) {
  // (a*b)(i) = a(b(i)): apply b first, then a.
  std::vector<uint8_t> c(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) c[static_cast<size_t>(i)] = a[b[i]];
  return c;
}

}  // namespace

FiniteGroup FiniteGroup::from_generators(int degree, const std::vector<std::vector<int>>& generators,
                                         std::string name) {
  if (degree < 1 || degree > 255) throw std::invalid_argument("permutation domain must have 1..255 points");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree)
      throw std::invalid_argument("generator degree mismatch in group '" + name + "'");
    std::vector<char> seen(static_cast<size_t>(degree), 0);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[static_cast<size_t>(v)])
        throw std::invalid_argument("generator is not a permutation in group '" + name + "'");
      seen[static_cast<size_t>(v)] = 1;
    }
  }

  FiniteGroup G;
  G.name_ = std::move(name);
  G.degree_ = degree;

  std::vector<uint8_t> id(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) id[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
  G.images_.insert(G.images_.end(), id.begin(), id.end());
  G.image_index_.emplace(image_key(id.data(), degree), 0);

  std::vector<std::vector<uint8_t>> gens;
  for (const auto& g : generators) gens.emplace_back(g.begin(), g.end());

  // BFS closure by right multiplication, generators in listed order.
  for (size_t head = 0; head * static_cast<size_t>(degree) < G.images_.size(); ++head) {
    for (const auto& g : gens) {
      std::vector<uint8_t> prod =
          compose(G.images_.data() + head * static_cast<size_t>(degree), g.data(), degree);
      std::string key = image_key(prod.data(), degree);
      auto [it, inserted] = G.image_index_.emplace(std::move(key), static_cast<int>(G.image_index_.size()));
      if (inserted) {
        if (G.image_index_.size() > kClosureCap) throw std::runtime_error("generator closure exceeds size cap");
        G.images_.insert(G.images_.end(), prod.begin(), prod.end());
      }
    }
  }
  G.n_ = static_cast<int>(G.image_index_.size());

  for (const auto& g : gens) {
    auto idx = G.index_of_image(g);
    G.generator_indices_.push_back(*idx);
  }

  if (G.n_ <= kMulTableCap) {
    G.has_table_ = true;
    G.table_.resize(static_cast<size_t>(G.n_) * G.n_);
    for (int a = 0; a < G.n_; ++a) {
      const uint8_t* ia = G.image(a);
      for (int b = 0; b < G.n_; ++b) {
        auto prod = compose(ia, G.image(b), degree);
        G.table_[static_cast<size_t>(a) * G.n_ + b] = *G.index_of_image(prod);
      }
    }
  }
  G.build_inverses();
  return G;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw std::invalid_argument("empty multiplication table");
  if (n > kTableInputCap) throw std::invalid_argument("explicit table exceeds size cap");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("multiplication table is not square");

  // Latin square: every row and column is a permutation of 0..n-1.
  std::vector<char> seen(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = table[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
        throw std::invalid_argument("table row " + std::to_string(r) + " is not a permutation");
      seen[static_cast<size_t>(v)] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int v = table[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (seen[static_cast<size_t>(v)])
        throw std::invalid_argument("table column " + std::to_string(c) + " is not a permutation");
      seen[static_cast<size_t>(v)] = 1;
    }
  }

  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[static_cast<size_t>(cand)][static_cast<size_t>(x)] == x &&
           table[static_cast<size_t>(x)][static_cast<size_t>(cand)] == x;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) throw std::invalid_argument("table has no two-sided identity");

  if (e != 0) {
    // Re-index so the identity sits at 0.
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::swap(perm[0], perm[static_cast<size_t>(e)]);
    std::vector<std::vector<int>> remapped(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        remapped[static_cast<size_t>(a)][static_cast<size_t>(b)] =
            perm[static_cast<size_t>(table[static_cast<size_t>(perm[static_cast<size_t>(a)])]
                                          [static_cast<size_t>(perm[static_cast<size_t>(b)])])];
    table = std::move(remapped);
  }

  FiniteGroup G;
  G.name_ = std::move(name);
  G.n_ = n;
  G.has_table_ = true;
  G.table_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.table_[static_cast<size_t>(a) * n + b] = table[static_cast<size_t>(a)][static_cast<size_t>(b)];

  auto assoc_check = [&](int a, int b, int c) {
    if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
      throw std::invalid_argument("table is not associative at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) assoc_check(a, b, c);
  } else {
    Rng rng(0x5eedULL);
    for (int t = 0; t < 100000; ++t)
      assoc_check(static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)));
  }

  G.build_inverses();
  return G;
}

void FiniteGroup::build_inverses() {
  inv_.assign(static_cast<size_t>(n_), -1);
  if (has_table_) {
    for (int a = 0; a < n_; ++a) {
      const int* row = mul_row(a);
      for (int b = 0; b < n_; ++b)
        if (row[b] == 0) {
          if (mul(b, a) != 0) throw std::invalid_argument("one-sided inverse in table");
          inv_[static_cast<size_t>(a)] = b;
          break;
        }
    }
  } else {
    for (int a = 0; a < n_; ++a) {
      const uint8_t* ia = image(a);
      std::vector<uint8_t> inv_img(static_cast<size_t>(degree_));
      for (int i = 0; i < degree_; ++i) inv_img[ia[i]] = static_cast<uint8_t>(i);
      inv_[static_cast<size_t>(a)] = *index_of_image(inv_img);
    }
  }
  for (int a = 0; a < n_; ++a)
    if (inv_[static_cast<size_t>(a)] < 0) throw std::invalid_argument("element without inverse");
}

int FiniteGroup::mul_by_images(int a, int b) const {
  auto prod = compose(image(a), image(b), degree_);
  auto it = image_index_.find(image_key(prod.data(), degree_));
  return it->second;
}

std::optional<int> FiniteGroup::index_of_image(const std::vector<uint8_t>& img) const {
  auto it = image_index_.find(image_key(img.data(), degree_));
  if (it == image_index_.end()) return std::nullopt;
  return it->second;
}

int FiniteGroup::power(int g, long long e) const {
  if (e < 0) {
    g = inv(g);
    e = -e;
  }
  int acc = 0;
  int base = g;
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int g) const {
  int ord = 1;
  int cur = g;
  while (cur != 0) {
    cur = mul(cur, g);
    ++ord;
  }
  return ord;
}

int FiniteGroup::fixed_points(int g) const {
  const uint8_t* img = image(g);
  int c = 0;
  for (int i = 0; i < degree_; ++i) c += (img[i] == i);
  return c;
}

int FiniteGroup::cycle_count(int g) const { return static_cast<int>(cycle_type(g).size()); }

std::vector<int> FiniteGroup::cycle_type(int g) const {
  const uint8_t* img = image(g);
  std::vector<char> seen(static_cast<size_t>(degree_), 0);
  std::vector<int> lengths;
  for (int i = 0; i < degree_; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0;
    int j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = 1;
      j = img[j];
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return lengths;
}

bool FiniteGroup::is_abelian() const {
  if (!generator_indices_.empty()) {
    for (int a : generator_indices_)
      for (int b : generator_indices_)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::centralizer_order(int g) const {
  int c = 0;
  for (int x = 0; x < n_; ++x) c += (mul(x, g) == mul(g, x));
  return c;
}

void FiniteGroup::compute_classes() const {
  auto cache = std::make_shared<ClassCache>();
  cache->class_of.assign(static_cast<size_t>(n_), -1);
  // Conjugation orbits; conjugating by a generating set suffices, and for
  // table-built groups every element acts.
  const std::vector<int>* conjugators = &generator_indices_;
  std::vector<int> all;
  if (conjugators->empty()) {
    all.resize(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) all[static_cast<size_t>(i)] = i;
    conjugators = &all;
  }
  for (int x = 0; x < n_; ++x) {
    if (cache->class_of[static_cast<size_t>(x)] >= 0) continue;
    int id = static_cast<int>(cache->classes.size());
    ConjugacyClass cls;
    cls.representative = x;
    cls.members = SubsetMask(n_);
    std::deque<int> queue{x};
    cache->class_of[static_cast<size_t>(x)] = id;
    cls.members.set(x);
    while (!queue.empty()) {
      int y = queue.front();
      queue.pop_front();
      for (int g : *conjugators) {
        int z = conjugate(g, y);
        if (cache->class_of[static_cast<size_t>(z)] < 0) {
          cache->class_of[static_cast<size_t>(z)] = id;
          cls.members.set(z);
          queue.push_back(z);
        }
      }
    }
    cls.size = cls.members.count();
    cache->classes.push_back(std::move(cls));
  }
  class_cache_ = std::move(cache);
}

namespace {
std::mutex& class_cache_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

const std::vector<ConjugacyClass>& FiniteGroup::classes() const {
  std::lock_guard<std::mutex> lock(class_cache_mutex());
  if (!class_cache_) compute_classes();
  return class_cache_->classes;
}

int FiniteGroup::class_of(int g) const {
  classes();
  return class_cache_->class_of[static_cast<size_t>(g)];
}

}  // namespace thinbase
