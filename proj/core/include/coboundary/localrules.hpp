#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coboundary/weights.hpp"

namespace coboundary::localrules {

using weights::CartanContext;
using weights::Weight;

/// Minuscule crystal labelling one step of a highest-weight word.
///
/// Vector is the vector representation (GL, SL2, Sp). Exterior(k) is the
/// k-th exterior power of the GL vector representation; k = 0 (trivial) and
/// k = n are accepted so that Gelfand-Tsetlin data with empty strips fit.
struct StepCrystal {
  enum class Kind { Vector, Exterior };
  Kind kind = Kind::Vector;
  int k = 1;

  static StepCrystal vector() { return {Kind::Vector, 1}; }
  static StepCrystal exterior(int k) { return {Kind::Exterior, k}; }

  friend bool operator==(const StepCrystal& a, const StepCrystal& b) {
    return a.kind == b.kind && (a.kind == Kind::Vector || a.k == b.k);
  }
  /// "vector" or "exterior(k)".
  std::string to_string() const;
  static StepCrystal parse(const std::string& s);
};

/// Whether `to - from` is a weight of the step crystal and `to` is dominant.
bool valid_step(const Weight& from, const Weight& to, StepCrystal step);

/// All dominant weights reachable from `from` by one step.
std::vector<Weight> step_targets(const Weight& from, StepCrystal step);

/// Some step crystal for which `to - from` is a valid step, if any
/// (GL 0/1 vectors read as exterior powers).
std::optional<StepCrystal> infer_step(const Weight& from, const Weight& to);

/// Highest-weight word 0 = corners[0] -> corners[1] -> ... -> corners[r].
struct HighestWeightWord {
  CartanContext context;
  std::vector<StepCrystal> steps;
  std::vector<Weight> corners;

  int length() const { return static_cast<int>(steps.size()); }
  const Weight& shape() const { return corners.back(); }

  /// Throws InvalidStep describing the first broken step.
  void validate() const;

  /// Word with all steps labelled by the vector representation.
  static HighestWeightWord from_corners(const CartanContext& ctx, std::vector<Weight> corners);

  friend bool operator==(const HighestWeightWord& a, const HighestWeightWord& b) {
    return a.context == b.context && a.steps == b.steps && a.corners == b.corners;
  }
  /// Corner list such as "[] [1] [1,1] [1]".
  std::string to_string() const;
};

/// Completes a cell: mu = dom_W(kappa + nu - lambda).
///
/// `vertical` labels kappa -> lambda and mu -> nu; `horizontal` labels
/// lambda -> nu and kappa -> mu. Throws InvalidStep when an input edge or the
/// produced edges are not valid steps.
Weight complete_cell(const Weight& kappa, const Weight& lambda, const Weight& nu, StepCrystal vertical,
                     StepCrystal horizontal);

/// As above with the step crystals inferred from the input edges.
Weight complete_cell(const Weight& kappa, const Weight& lambda, const Weight& nu);

/// Local involution at interior corner i (1 <= i <= r-1): replaces corner i by
/// dom_W(corner[i-1] + corner[i+1] - corner[i]) and swaps steps i, i+1.
HighestWeightWord tau(const HighestWeightWord& w, int i);

/// tau_{r-1} ∘ ... ∘ tau_{split}: moves the factor at position `split` past
/// the rest of the word (1 <= split < r).
HighestWeightWord commutor_prefix(const HighestWeightWord& w, int split);

/// Every highest-weight word with the given step crystals.
std::vector<HighestWeightWord> all_words(const CartanContext& ctx, const std::vector<StepCrystal>& steps);

/// Every highest-weight word of length r in a single step crystal.
std::vector<HighestWeightWord> all_words(const CartanContext& ctx, StepCrystal step, int r);

}  // namespace coboundary::localrules
