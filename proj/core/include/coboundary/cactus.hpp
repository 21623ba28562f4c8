#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coboundary/error.hpp"

namespace coboundary::cactus {

/// Generator s_{p,q}, 1 <= p < q <= r.
struct CactusGen {
  int p = 1;
  int q = 2;

  friend bool operator==(const CactusGen&, const CactusGen&) = default;
  friend auto operator<=>(const CactusGen&, const CactusGen&) = default;
  std::string to_string() const;
};

/// Element of the cactus group on r strands, kept as a word. The product
/// g*h means "apply h first": gens are listed left to right as written.
struct CactusWord {
  int r = 0;
  std::vector<CactusGen> gens;

  CactusWord() = default;
  CactusWord(int strands, std::vector<CactusGen> g);

  static CactusWord single(int r, CactusGen g) { return CactusWord(r, {g}); }

  CactusWord operator*(const CactusWord& rhs) const;
  friend bool operator==(const CactusWord&, const CactusWord&) = default;

  /// "s(1,4) s(2,3)"; the empty word prints as "".
  std::string to_string() const;
  /// Parses the text grammar; whitespace and commas between generators are optional.
  static CactusWord parse(int r, const std::string& text);
};

/// One-line notation: perm[i-1] = image of i.
using Permutation = std::vector<int>;

Permutation identity_perm(int r);
/// Product a*b acting on the right first: (a*b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation perm_image(const CactusGen& g, int r);
Permutation perm_image(const CactusWord& w);

/// s_{p,q} = s_{1,q} s_{1,q-p+1} s_{1,q}; s_{1,q} is returned unchanged.
CactusWord reduce_to_s1q(const CactusGen& g, int r);
/// Every generator replaced by its reduction.
CactusWord reduce_to_s1q(const CactusWord& w);

enum class Relation { Involution, Disjoint, Nested };

/// Both sides of a defining relation as words on r strands. Involution uses
/// only a; Disjoint needs a, b with disjoint intervals; Nested needs b inside a.
/// Throws BadParameter when the side condition fails.
std::pair<CactusWord, CactusWord> relation_sides(Relation kind, int r, CactusGen a, CactusGen b = {});

/// Checks a relation against an action by comparing act(lhs) and act(rhs).
template <typename Equal>
bool relation_check(Relation kind, int r, CactusGen a, CactusGen b, Equal&& same_action) {
  auto [lhs, rhs] = relation_sides(kind, r, a, b);
  return same_action(lhs, rhs);
}

/// All generators on r strands.
std::vector<CactusGen> all_generators(int r);

/// Words in the tau-generators, listed left to right as written.
using TauWord = std::vector<int>;

/// q_k = tau_1 (tau_2 tau_1) ... (tau_k ... tau_1); q_0 is empty.
TauWord q_word(int k);
/// s_{i,j} -> q_{j-1} q_{j-i} q_{j-1}.
TauWord s_to_tau(const CactusGen& g);
/// tau_1 -> s12; tau_2 -> s12 s13 s12; tau_i -> s1i s1(i+1) s1i s1(i-1).
CactusWord tau_to_s(int i, int r);

/// Permutation image of a tau-word: tau_i maps to the transposition (i i+1).
Permutation perm_image_tau(const TauWord& w, int r);

}  // namespace coboundary::cactus
