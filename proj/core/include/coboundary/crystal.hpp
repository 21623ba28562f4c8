#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coboundary/weights.hpp"

namespace coboundary::crystal {

using weights::CartanContext;
using weights::Weight;

/// Element index inside a Crystal.
using Element = std::size_t;
inline constexpr Element kNone = static_cast<Element>(-1);

/// Default cap on materialized crystal sizes.
inline constexpr std::size_t kDefaultMaxSize = 1'000'000;

/// Finite normal crystal given by its raising operators.
///
/// Built from the minimal data (partial injective nilpotent e_i plus element
/// weights). The lowering operators f_i and the string lengths eps_i / phi_i
/// are derived on construction. Simple-root indices run 1..|I|.
class Crystal {
 public:
  /// raising[i-1][x] is e_i(x) or kNone. Throws CyclicGraph if some e_i has a
  /// cycle, BadParameter if some e_i is not injective or breaks weight shifts.
  Crystal(CartanContext context, std::vector<std::vector<Element>> raising, std::vector<Weight> weights,
          std::vector<std::string> labels);

  const CartanContext& context() const { return context_; }
  std::size_t size() const { return weights_.size(); }
  int num_indices() const { return static_cast<int>(raising_.size()); }

  Element e(int i, Element x) const { return raising_[idx(i)][x]; }
  Element f(int i, Element x) const { return lowering_[idx(i)][x]; }
  int eps(int i, Element x) const { return eps_[idx(i)][x]; }
  int phi(int i, Element x) const { return phi_[idx(i)][x]; }
  const Weight& weight(Element x) const { return weights_[x]; }
  const std::string& label(Element x) const { return labels_[x]; }

  bool is_highest_weight(Element x) const;
  std::optional<Element> find(const std::string& label) const;

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i - 1); }

  CartanContext context_;
  std::vector<std::vector<Element>> raising_;
  std::vector<std::vector<Element>> lowering_;
  std::vector<std::vector<int>> eps_;
  std::vector<std::vector<int>> phi_;
  std::vector<Weight> weights_;
  std::vector<std::string> labels_;
};

/// Tensor product B ⊗ C on B × C, element (x, y) stored at x * |C| + y.
/// e_i(x⊗y) = e_i(x)⊗y if phi_i(x) >= eps_i(y), else x⊗e_i(y).
Crystal tensor(const Crystal& b, const Crystal& c, std::size_t max_size = kDefaultMaxSize);

/// The trivial one-element crystal of weight zero.
Crystal trivial(const CartanContext& ctx);

std::vector<Element> highest_weight_elements(const Crystal& c);

/// The highest-weight element in the connected component of x.
Element rectify(const Crystal& c, Element x);

/// Connected component containing x.
std::vector<Element> component(const Crystal& c, Element x);

struct Minuscule {
  enum class Kind { Vector, Exterior, SL2 };
  Kind kind = Kind::Vector;
  int k = 1;  // exterior power degree

  static Minuscule vector() { return {Kind::Vector, 1}; }
  static Minuscule exterior(int k) { return {Kind::Exterior, k}; }
  static Minuscule sl2() { return {Kind::SL2, 1}; }
};

/// GL(n) vector and exterior powers, the SL2 doublet, and the Sp(2n) vector
/// representation. Throws BadParameter on unsupported combinations.
Crystal build_minuscule(const CartanContext& ctx, Minuscule which);

/// ⊗^r C with digit access to the factors (first factor most significant).
class TensorPower {
 public:
  TensorPower(Crystal base, int r, std::size_t max_size = kDefaultMaxSize);

  const Crystal& base() const { return base_; }
  const Crystal& crystal() const { return crystal_; }
  int length() const { return r_; }

  std::vector<Element> factors(Element x) const;
  Element element(const std::vector<Element>& factors) const;
  /// Partial weight sums wt(x_1 ⊗ ... ⊗ x_k), k = 0..r.
  std::vector<Weight> prefix_weights(Element x) const;

 private:
  Crystal base_;
  int r_;
  Crystal crystal_;
};

struct ComponentCensus {
  std::size_t count = 0;           // |B(omega)|
  std::size_t component_size = 0;  // |C(omega)|
};

/// Connected-component census of ⊗^r C grouped by highest weight.
std::map<Weight, ComponentCensus> decompose(const Crystal& c, int r, std::size_t max_size = kDefaultMaxSize);

}  // namespace coboundary::crystal
