#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "coboundary/weights.hpp"

// Classical tableau and matching algorithms. Nothing here uses local rules;
// these are the reference implementations the growth diagrams are checked
// against.
namespace coboundary::oracles {

using weights::Partition;
using weights::Strip;

/// Young tableau in English notation: rows[0] is the top row.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  int size() const;
  int at(std::size_t row, std::size_t col) const { return rows[row][col]; }
  bool empty() const { return rows.empty(); }

  /// Rows separated by '/', e.g. "124/35". Entries are comma-separated
  /// within a row when any entry exceeds 9.
  std::string to_string() const;
  /// Accepts "124/35" (one digit per entry, spaces ignored) and "1,2,4/3,5".
  static Tableau parse(const std::string& text);

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

std::ostream& operator<<(std::ostream& os, const Tableau& t);

/// Shape is a partition and rows/columns increase strictly, entries 1..n once.
bool is_standard(const Tableau& t);
/// Weakly increasing rows, strictly increasing columns, entries >= 1.
bool is_semistandard(const Tableau& t);
/// Strictly increasing rows, weakly increasing columns, entries >= 1.
bool is_dual_semistandard(const Tableau& t);

/// Transpose.
Tableau conjugate(const Tableau& t);

/// All standard tableaux of a shape, in lexicographic order of their rows.
std::vector<Tableau> all_standard(const Partition& shape);
/// All semistandard tableaux whose shape fits inside `bound`, entries <= max_entry.
std::vector<Tableau> all_semistandard(const Partition& bound, int max_entry);

/// Shapes of the sub-tableaux of entries <= k, k = 0..n.
std::vector<Partition> shape_sequence(const Tableau& t, int n);
/// Inverse of shape_sequence; each step must be a strip of the given kind.
/// Throws StripViolation otherwise.
Tableau from_shape_sequence(const std::vector<Partition>& seq, Strip kind);

/// Gelfand-Tsetlin pattern of a semistandard tableau with entries <= n.
/// Throws StripViolation when the tableau is not semistandard.
std::vector<Partition> gt_pattern(const Tableau& t, int n);
/// Conjugates each partition of a sequence.
std::vector<Partition> conjugate_sequence(const std::vector<Partition>& seq);

/// Schutzenberger evacuation by repeated jeu de taquin deletion of the minimum.
Tableau evacuation_oracle(const Tableau& t);

/// Promotion: delete 1, slide the hole to an outer corner, decrement every
/// entry and put n in the vacated corner.
Tableau promotion_oracle(const Tableau& t);

/// Bender-Knuth involution b_i on a semistandard tableau: entries i with an
/// i+1 directly below, and entries i+1 with an i directly above, are frozen;
/// in each row the free run i^a (i+1)^b becomes i^b (i+1)^a.
Tableau bender_knuth(const Tableau& t, int i);

/// Dual Knuth move D_i on a standard tableau, 1 <= i <= n-2, using the
/// reading word (rows bottom to top, each left to right). If i+2 sits between
/// i and i+1 in the reading word, swap i and i+1; else if i sits between i+1
/// and i+2, swap i+1 and i+2; otherwise fixed.
Tableau dual_knuth(const Tableau& t, int i);

/// Perfect matching on 1..r as pairs (i,j), i<j, sorted by i.
struct Matching {
  int r = 0;
  std::vector<std::pair<int, int>> pairs;

  bool is_noncrossing() const;
  std::string to_string() const;
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Noncrossing matchings on r points.
std::vector<Matching> all_noncrossing(int r);

/// Two-row standard tableau -> matching: first-row entries are openers, each
/// closer pairs with the nearest unmatched opener to its left.
Matching matching_from_tableau(const Tableau& t);
Tableau tableau_from_matching(const Matching& m);

/// Action of s_{1,p}: pairs inside 1..p are reflected (i,j) -> (p-j+1,p-i+1),
/// pairs beyond p are fixed, and pairs crossing p keep their right ends while
/// their left ends move to p-i+1. The crossing pairs are then re-paired nested,
/// since reflecting two or more of them in place would make them cross.
Matching matching_s1p(const Matching& m, int p);
/// Action of s_{p,q}, reduced to s_{1,q} s_{1,q-p+1} s_{1,q}.
Matching matching_action(const Matching& m, int p, int q);

}  // namespace coboundary::oracles
