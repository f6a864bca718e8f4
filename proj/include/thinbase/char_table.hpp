#ifndef THINBASE_CHAR_TABLE_HPP
#define THINBASE_CHAR_TABLE_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "thinbase/group.hpp"

namespace thinbase {

struct TableClass {
  std::string label;
  long long size = 0;
  int rep_order = 0;
};

struct ValidationIssue {
  std::string what;
  int row = -1;
  int col = -1;
  double residual = 0.0;
};

struct ValidationReport {
  bool valid = true;
  std::vector<ValidationIssue> issues;
  std::string summary() const;
};

// Ingested complex character table: one row per irreducible character, one
// column per conjugacy class.  Tables are data, never computed from group
// structure; validation is what keeps transcription honest.
class CharacterTable {
public:
  std::string group_name;
  long long group_order = 0;
  std::vector<TableClass> classes;
  std::vector<std::vector<std::complex<double>>> chars;

  int num_classes() const { return static_cast<int>(classes.size()); }
  int identity_class() const;  // class of size 1 and rep order 1
  int trivial_row() const;     // the identically-1 character
  double degree(int row) const { return chars[static_cast<size_t>(row)][static_cast<size_t>(identity_class())].real(); }

  // Checks class sizes, row/column orthogonality at 1e-9, a unique trivial
  // character, and sum of squared degrees; with a group attached also the
  // (size, representative order) signature multiset.
  ValidationReport validate(const FiniteGroup* G = nullptr) const;

  // (|C1||C2|/|G|) sum_chi chi(c1) chi(c2) conj(chi(c3)) / chi(1).
  // Throws when the result is non-real or non-integral beyond 1e-6.
  double frobenius_count(int c1, int c2, int c3) const;

  // Same sum restricted to nontrivial characters, unscaled; satisfies
  // char_sum = frobenius_count * |G| / (|C1||C2|) - 1 exactly.
  std::complex<double> char_sum(int c1, int c2, int c3) const;
};

// Exact class-product structure constants of a group: count[i][j][k] is the
// number of pairs (x,y) in Ci x Cj with x*y = z for a fixed z in Ck.
std::vector<std::vector<std::vector<long long>>> class_product_counts(const FiniteGroup& G);

struct ClassMatching {
  bool ok = false;
  std::vector<int> table_to_group;  // table class -> group class index
  std::string error;
};

// Bijection between table classes and group classes under which signatures
// match and every Frobenius count agrees with brute-force enumeration.
// Ambiguous signatures are resolved by backtracking over consistent
// bijections; any bijection under which all counts match is accepted.
ClassMatching match_classes(const CharacterTable& t, const FiniteGroup& G);

}  // namespace thinbase

#endif
