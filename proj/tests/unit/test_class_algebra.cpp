#include <doctest.h>

#include <cmath>
#include <complex>

#include "thinbase/char_table.hpp"
#include "thinbase/io.hpp"

using namespace thinbase;

namespace {
FiniteGroup load(const std::string& stem) {
  return load_group(std::string(THINBASE_DATA_DIR) + "/groups/" + stem + ".json");
}
CharacterTable load_table(const std::string& stem) {
  return load_character_table(std::string(THINBASE_DATA_DIR) + "/tables/" + stem + ".json");
}

int class_by_label(const CharacterTable& t, const std::string& label) {
  for (int i = 0; i < t.num_classes(); ++i)
    if (t.classes[static_cast<size_t>(i)].label == label) return i;
  REQUIRE(false);
  return -1;
}
}  // namespace

TEST_CASE("inline Z/3 table validates") {
  CharacterTable t;
  t.group_order = 3;
  t.classes = {{"c0", 1, 1}, {"c1", 1, 3}, {"c2", 1, 3}};
  std::complex<double> w = std::polar(1.0, 2.0 * M_PI / 3.0);
  t.chars = {{1, 1, 1}, {1, w, w * w}, {1, w * w, w}};
  CHECK(t.validate().valid);

  // frobenius: 1 + 2 = 0 in Z/3, so the count is 1
  double c = t.frobenius_count(1, 2, 0);
  CHECK(std::abs(c - 1.0) < 1e-9);
}

TEST_CASE("shipped A5 table validates and has the right degrees") {
  CharacterTable t = load_table("a5");
  FiniteGroup a5 = load("a5");
  CHECK(t.validate(&a5).valid);
  double degsq = 0;
  for (int r = 0; r < t.num_classes(); ++r) degsq += t.degree(r) * t.degree(r);
  CHECK(degsq == doctest::Approx(60.0).epsilon(1e-12));
}

TEST_CASE("perturbed table is rejected") {
  CharacterTable t = load_table("a5");
  t.chars[2][3] += 1e-3;
  ValidationReport rep = t.validate();
  CHECK(!rep.valid);
  bool saw_orth = false;
  for (const auto& is : rep.issues)
    if (is.what.find("orthogonality") != std::string::npos) saw_orth = true;
  CHECK(saw_orth);
}

TEST_CASE("frobenius counts on A5") {
  CharacterTable t = load_table("a5");
  int id = class_by_label(t, "1a");
  int c5a = class_by_label(t, "5a");
  int c3 = class_by_label(t, "3a");

  // identity * C = C uniquely
  CHECK(t.frobenius_count(id, c3, c3) == doctest::Approx(1.0).epsilon(1e-9));
  // 5-cycles times 5-cycles hitting the identity: one per inverse pair
  CHECK(t.frobenius_count(c5a, c5a, id) == doctest::Approx(12.0).epsilon(1e-9));

  // char_sum relation and the worked value 4
  std::complex<double> cs = t.char_sum(c5a, c5a, id);
  CHECK(cs.real() == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(std::abs(cs.imag()) < 1e-9);

  // column-orthogonality special case: identity-class row gives |G|/|C| - 1
  std::complex<double> cs2 = t.char_sum(id, c5a, c5a);
  CHECK(cs2.real() == doctest::Approx(60.0 / 12.0 - 1.0).epsilon(1e-9));
}

TEST_CASE("char_sum has modulus 1 for abelian zero-count triples") {
  CharacterTable t = load_table("z5");
  // classes are residues; c1 + c2 != c3 picks count 0, so char_sum = -1
  double count = t.frobenius_count(1, 2, 4);
  CHECK(count == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(std::abs(t.char_sum(1, 2, 4)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("frobenius = brute force for every triple, and the exact char_sum relation") {
  for (const char* stem : {"z6", "s3", "d8", "q8", "a4", "s4", "a5"}) {
    FiniteGroup G = load(stem);
    CharacterTable t = load_table(stem);
    REQUIRE(t.validate(&G).valid);
    ClassMatching match = match_classes(t, G);
    REQUIRE(match.ok);

    auto counts = class_product_counts(G);
    const int m = t.num_classes();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
          double f = t.frobenius_count(i, j, k);
          long long brute = counts[static_cast<size_t>(match.table_to_group[static_cast<size_t>(i)])]
                                  [static_cast<size_t>(match.table_to_group[static_cast<size_t>(j)])]
                                  [static_cast<size_t>(match.table_to_group[static_cast<size_t>(k)])];
          CHECK(std::abs(f - static_cast<double>(brute)) < 1e-6);

          double s1 = static_cast<double>(t.classes[static_cast<size_t>(i)].size);
          double s2 = static_cast<double>(t.classes[static_cast<size_t>(j)].size);
          std::complex<double> cs = t.char_sum(i, j, k);
          double expect = f * static_cast<double>(t.group_order) / (s1 * s2) - 1.0;
          CHECK(std::abs(cs.real() - expect) < 1e-9);
          CHECK(std::abs(cs.imag()) < 1e-9);
        }
  }
}

TEST_CASE("counts over all target classes sum to |C1||C2|") {
  for (const char* stem : {"z12", "s4", "a5", "s5", "psl2_7"}) {
    CharacterTable t = load_table(stem);
    const int m = t.num_classes();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double total = 0;
        for (int k = 0; k < m; ++k)
          total += t.frobenius_count(i, j, k) * static_cast<double>(t.classes[static_cast<size_t>(k)].size);
        double expect = static_cast<double>(t.classes[static_cast<size_t>(i)].size) *
                        static_cast<double>(t.classes[static_cast<size_t>(j)].size);
        CHECK(total == doctest::Approx(expect).epsilon(1e-9));
      }
  }
}

TEST_CASE("the count criterion matches the char_sum criterion") {
  CharacterTable t = load_table("psl2_7");
  const int m = t.num_classes();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        double f = t.frobenius_count(i, j, k);
        double s1 = static_cast<double>(t.classes[static_cast<size_t>(i)].size);
        double s2 = static_cast<double>(t.classes[static_cast<size_t>(j)].size);
        bool count_large = f >= s1 * s2 / (2.0 * static_cast<double>(t.group_order)) - 1e-12;
        bool sum_large = (1.0 + t.char_sum(i, j, k).real()) >= 0.5 - 1e-12;
        CHECK(count_large == sum_large);
      }
}

TEST_CASE("class matching resolves ambiguous signatures") {
  // A5 has two size-12 order-5 classes; matching must try both bijections.
  FiniteGroup a5 = load("a5");
  ClassMatching m = match_classes(load_table("a5"), a5);
  CHECK(m.ok);

  // Z/7: six indistinguishable signatures, constraint propagation resolves.
  FiniteGroup z7 = load("z7");
  ClassMatching m7 = match_classes(load_table("z7"), z7);
  CHECK(m7.ok);

  // wrong group for the table
  ClassMatching bad = match_classes(load_table("a5"), load("s4"));
  CHECK(!bad.ok);
}
