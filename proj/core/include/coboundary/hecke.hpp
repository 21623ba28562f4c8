#pragma once

#include <string>
#include <vector>

#include "coboundary/algebra.hpp"
#include "coboundary/cactus.hpp"
#include "coboundary/oracles.hpp"

namespace coboundary::hecke {

using algebra::QMatrix;
using algebra::RationalFunction;
using oracles::Partition;
using oracles::Tableau;

/// Contents c_T(k) = col - row of the box holding k (k = 1..n, stored 0-based).
struct ContentData {
  Tableau tableau;
  std::vector<int> contents;

  explicit ContentData(Tableau t);
  int content(int k) const { return contents[static_cast<std::size_t>(k - 1)]; }
  /// a_T(i) = c_T(i+1) - c_T(i).
  int axial(int i) const { return content(i + 1) - content(i); }
};

/// Seminormal representation of H_r(q) on standard tableaux of one shape.
/// Basis is lexicographic in the rows; matrices act on column vectors, so
/// column T holds the coordinates of the image of T.
class SeminormalRep {
 public:
  explicit SeminormalRep(const Partition& shape);

  const Partition& shape() const { return shape_; }
  int r() const { return r_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<ContentData>& basis() const { return basis_; }
  /// Index of a standard tableau in the basis, or dimension() if absent.
  std::size_t index_of(const Tableau& t) const;

 private:
  Partition shape_;
  int r_;
  std::vector<ContentData> basis_;
};

/// u_i: T -> -[a-1]/[a] T + s_iT (a > 0), -[a-1]/[a] T + [a-1][a+1]/[a]^2 s_iT (a < 0).
QMatrix u_matrix(const SeminormalRep& rep, int i);
/// t_i = q + u_i.
QMatrix t_matrix(const SeminormalRep& rep, int i);
/// t_i^{-1} = q^{-1} + u_i.
QMatrix t_inverse_matrix(const SeminormalRep& rep, int i);

/// J_i^{h/2} = diag q^{h c_T(i+1)} for h in {-2,-1,1,2}; J_0 is the identity.
QMatrix jm_matrix(const SeminormalRep& rep, int i, int twice_power);
/// J_i as the word (t_i ... t_1)(t_1 ... t_i).
QMatrix jm_word_product(const SeminormalRep& rep, int i);

/// tau_i = J_{i-1}^{1/2} t_i J_i^{-1/2}.
QMatrix tau_matrix(const SeminormalRep& rep, int i);
/// Product of tau matrices for a tau-word, in written order.
QMatrix tau_word_matrix(const SeminormalRep& rep, const cactus::TauWord& w);
/// Image of a cactus word through the tau presentation.
QMatrix cactus_matrix(const SeminormalRep& rep, const cactus::CactusWord& g);

/// 1 + (2/[2]) u_1.
QMatrix sigma_vv(const SeminormalRep& rep);
/// q^{-1} - ((q - q^{-1})/(q + q^{-1})) u_1.
QMatrix inv_sqrt_t1_squared(const SeminormalRep& rep);

/// The tau and t blocks for axial distance a > 1 on the ordered basis
/// (T, s_iT), in this library's orientation (rows = output coordinates).
QMatrix tau_block(int a);
QMatrix t_block(int a);

struct CheckResult {
  std::string name;
  bool ok;
};

/// Every defining relation and identity for one shape.
std::vector<CheckResult> check_shape(const Partition& shape);

}  // namespace coboundary::hecke
