#include "thinbase/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thinbase {

namespace {
constexpr double kOrthTol = 1e-9;
constexpr double kCountTol = 1e-6;
}  // namespace

std::string ValidationReport::summary() const {
  if (valid) return "valid";
  std::ostringstream os;
  os << issues.size() << " issue(s):";
  for (const auto& is : issues) {
    os << " [" << is.what;
    if (is.row >= 0) os << " row=" << is.row;
    if (is.col >= 0) os << " col=" << is.col;
    os << " residual=" << is.residual << "]";
  }
  return os.str();
}

int CharacterTable::identity_class() const {
  for (int j = 0; j < num_classes(); ++j)
    if (classes[static_cast<size_t>(j)].size == 1 && classes[static_cast<size_t>(j)].rep_order == 1) return j;
  throw std::invalid_argument("table has no identity class");
}

int CharacterTable::trivial_row() const {
  for (int r = 0; r < static_cast<int>(chars.size()); ++r) {
    bool all_one = true;
    for (const auto& v : chars[static_cast<size_t>(r)])
      if (std::abs(v - std::complex<double>(1.0, 0.0)) > 1e-9) {
        all_one = false;
        break;
      }
    if (all_one) return r;
  }
  throw std::invalid_argument("table has no trivial character");
}

ValidationReport CharacterTable::validate(const FiniteGroup* G) const {
  ValidationReport rep;
  auto fail = [&](std::string what, int row, int col, double residual) {
    rep.valid = false;
    rep.issues.push_back({std::move(what), row, col, residual});
  };

  const int c = num_classes();
  if (static_cast<int>(chars.size()) != c) {
    fail("character matrix is not square", static_cast<int>(chars.size()), c, 0);
    return rep;
  }
  for (int r = 0; r < c; ++r)
    if (static_cast<int>(chars[static_cast<size_t>(r)].size()) != c) {
      fail("row length mismatch", r, -1, 0);
      return rep;
    }

  long long size_sum = 0;
  for (const auto& cl : classes) size_sum += cl.size;
  if (size_sum != group_order) fail("class sizes do not sum to group order", -1, -1, static_cast<double>(size_sum - group_order));

  // Row orthogonality: sum_j |Cj| chi_r(j) conj(chi_s(j)) = delta_rs |G|.
  for (int r = 0; r < c; ++r)
    for (int s = r; s < c; ++s) {
      std::complex<double> acc = 0;
      for (int j = 0; j < c; ++j)
        acc += static_cast<double>(classes[static_cast<size_t>(j)].size) * chars[static_cast<size_t>(r)][static_cast<size_t>(j)] *
               std::conj(chars[static_cast<size_t>(s)][static_cast<size_t>(j)]);
      double expect = (r == s) ? static_cast<double>(group_order) : 0.0;
      double residual = std::abs(acc - expect);
      if (residual > kOrthTol * std::max(1.0, static_cast<double>(group_order)))
        fail("row orthogonality", r, s, residual);
    }

  // Column orthogonality: sum_r chi_r(j) conj(chi_r(j')) = delta_jj' |G|/|Cj|.
  for (int j = 0; j < c; ++j)
    for (int k = j; k < c; ++k) {
      std::complex<double> acc = 0;
      for (int r = 0; r < c; ++r)
        acc += chars[static_cast<size_t>(r)][static_cast<size_t>(j)] * std::conj(chars[static_cast<size_t>(r)][static_cast<size_t>(k)]);
      double expect = (j == k) ? static_cast<double>(group_order) / static_cast<double>(classes[static_cast<size_t>(j)].size) : 0.0;
      double residual = std::abs(acc - expect);
      if (residual > kOrthTol * std::max(1.0, static_cast<double>(group_order)))
        fail("column orthogonality", j, k, residual);
    }

  int trivial_rows = 0;
  for (int r = 0; r < c; ++r) {
    bool all_one = true;
    for (const auto& v : chars[static_cast<size_t>(r)])
      if (std::abs(v - std::complex<double>(1.0, 0.0)) > 1e-9) {
        all_one = false;
        break;
      }
    trivial_rows += all_one;
  }
  if (trivial_rows != 1) fail("expected exactly one trivial character", trivial_rows, -1, 0);

  try {
    int id = identity_class();
    double degsq = 0;
    for (int r = 0; r < c; ++r) {
      double d = chars[static_cast<size_t>(r)][static_cast<size_t>(id)].real();
      degsq += d * d;
    }
    if (std::abs(degsq - static_cast<double>(group_order)) > 1e-6) fail("sum of squared degrees != order", -1, id, degsq - static_cast<double>(group_order));
  } catch (const std::exception&) {
    fail("no identity class (size 1, order 1)", -1, -1, 0);
  }

  if (G) {
    if (G->order() != group_order) {
      fail("group order mismatch", -1, -1, static_cast<double>(G->order() - group_order));
    } else {
      std::multiset<std::pair<long long, int>> want, have;
      for (const auto& cl : classes) want.insert({cl.size, cl.rep_order});
      for (const auto& cl : G->classes()) have.insert({cl.size, G->element_order(cl.representative)});
      if (want != have) fail("class (size, rep order) signatures do not match group", -1, -1, 0);
    }
  }
  return rep;
}

double CharacterTable::frobenius_count(int c1, int c2, int c3) const {
  const int id = identity_class();
  std::complex<double> acc = 0;
  for (int r = 0; r < num_classes(); ++r) {
    const auto& row = chars[static_cast<size_t>(r)];
    acc += row[static_cast<size_t>(c1)] * row[static_cast<size_t>(c2)] * std::conj(row[static_cast<size_t>(c3)]) /
           row[static_cast<size_t>(id)];
  }
  double scale = static_cast<double>(classes[static_cast<size_t>(c1)].size) *
                 static_cast<double>(classes[static_cast<size_t>(c2)].size) / static_cast<double>(group_order);
  std::complex<double> val = scale * acc;
  if (std::abs(val.imag()) > kCountTol)
    throw std::domain_error("frobenius_count is not real (bad table): imag = " + std::to_string(val.imag()));
  double rounded = std::round(val.real());
  if (std::abs(val.real() - rounded) > kCountTol || rounded < -kCountTol)
    throw std::domain_error("frobenius_count is not a nonnegative integer (bad table): " + std::to_string(val.real()));
  return val.real();
}

std::complex<double> CharacterTable::char_sum(int c1, int c2, int c3) const {
  const int id = identity_class();
  const int triv = trivial_row();
  std::complex<double> acc = 0;
  for (int r = 0; r < num_classes(); ++r) {
    if (r == triv) continue;
    const auto& row = chars[static_cast<size_t>(r)];
    acc += row[static_cast<size_t>(c1)] * row[static_cast<size_t>(c2)] * std::conj(row[static_cast<size_t>(c3)]) /
           row[static_cast<size_t>(id)];
  }
  return acc;
}

std::vector<std::vector<std::vector<long long>>> class_product_counts(const FiniteGroup& G) {
  const auto& classes = G.classes();
  const int m = static_cast<int>(classes.size());
  const int n = G.order();
  std::vector<std::vector<std::vector<long long>>> totals(
      static_cast<size_t>(m), std::vector<std::vector<long long>>(static_cast<size_t>(m), std::vector<long long>(static_cast<size_t>(m), 0)));
  for (int x = 0; x < n; ++x) {
    int cx = G.class_of(x);
    for (int y = 0; y < n; ++y)
      ++totals[static_cast<size_t>(cx)][static_cast<size_t>(G.class_of(y))][static_cast<size_t>(G.class_of(G.mul(x, y)))];
  }
  // totals counts pairs landing anywhere in Ck; per fixed z it divides evenly.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        long long t = totals[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
        long long sz = classes[static_cast<size_t>(k)].size;
        if (t % sz != 0) throw std::logic_error("class product count does not divide class size");
        totals[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] = t / sz;
      }
  return totals;
}

ClassMatching match_classes(const CharacterTable& t, const FiniteGroup& G) {
  ClassMatching out;
  if (t.group_order != G.order()) {
    out.error = "order mismatch";
    return out;
  }
  const auto& gclasses = G.classes();
  const int m = t.num_classes();
  if (static_cast<int>(gclasses.size()) != m) {
    out.error = "class count mismatch";
    return out;
  }

  auto counts = class_product_counts(G);

  // Frobenius counts on the table side, rounded to integers.
  std::vector<std::vector<std::vector<long long>>> fcounts(
      static_cast<size_t>(m), std::vector<std::vector<long long>>(static_cast<size_t>(m), std::vector<long long>(static_cast<size_t>(m), 0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        fcounts[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] =
            std::llround(t.frobenius_count(i, j, k));

  // Candidate group classes per table class, by (size, rep order) signature.
  std::vector<std::vector<int>> candidates(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int g = 0; g < m; ++g)
      if (t.classes[static_cast<size_t>(i)].size == gclasses[static_cast<size_t>(g)].size &&
          t.classes[static_cast<size_t>(i)].rep_order == G.element_order(gclasses[static_cast<size_t>(g)].representative))
        candidates[static_cast<size_t>(i)].push_back(g);

  std::vector<int> assign(static_cast<size_t>(m), -1);
  std::vector<char> used(static_cast<size_t>(m), 0);

  // Assign scarce signatures first.
  std::vector<int> order(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return candidates[static_cast<size_t>(a)].size() < candidates[static_cast<size_t>(b)].size(); });

  auto consistent = [&](int just_assigned) {
    for (int i = 0; i < m; ++i) {
      if (assign[static_cast<size_t>(i)] < 0) continue;
      for (int j = 0; j < m; ++j) {
        if (assign[static_cast<size_t>(j)] < 0) continue;
        for (int k = 0; k < m; ++k) {
          if (assign[static_cast<size_t>(k)] < 0) continue;
          if (i != just_assigned && j != just_assigned && k != just_assigned) continue;
          if (fcounts[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] !=
              counts[static_cast<size_t>(assign[static_cast<size_t>(i)])][static_cast<size_t>(assign[static_cast<size_t>(j)])]
                    [static_cast<size_t>(assign[static_cast<size_t>(k)])])
            return false;
        }
      }
    }
    return true;
  };

  std::function<bool(size_t)> dfs = [&](size_t pos) -> bool {
    if (pos == order.size()) return true;
    int i = order[pos];
    for (int g : candidates[static_cast<size_t>(i)]) {
      if (used[static_cast<size_t>(g)]) continue;
      assign[static_cast<size_t>(i)] = g;
      used[static_cast<size_t>(g)] = 1;
      if (consistent(i) && dfs(pos + 1)) return true;
      assign[static_cast<size_t>(i)] = -1;
      used[static_cast<size_t>(g)] = 0;
    }
    return false;
  };

  if (!dfs(0)) {
    out.error = "no signature-consistent bijection matches all brute-force counts";
    return out;
  }
  out.ok = true;
  out.table_to_group = assign;
  return out;
}

}  // namespace thinbase
