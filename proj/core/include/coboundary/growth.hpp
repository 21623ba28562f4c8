#pragma once

#include <string>
#include <vector>

#include "coboundary/cactus.hpp"
#include "coboundary/localrules.hpp"

namespace coboundary::growth {

using localrules::HighestWeightWord;
using localrules::StepCrystal;
using weights::CartanContext;
using weights::Weight;

/// Rectangular diagram. grid[a][b], row 0 on top, weights grow upward and
/// rightward. vertical[a] labels the edges between rows a+1 and a;
/// horizontal[b] labels the edges between columns b and b+1.
struct RectDiagram {
  std::vector<std::vector<Weight>> grid;
  std::vector<StepCrystal> vertical;
  std::vector<StepCrystal> horizontal;

  int height() const { return static_cast<int>(vertical.size()); }
  int width() const { return static_cast<int>(horizontal.size()); }
  const Weight& at(int a, int b) const { return grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

  /// Bottom row as a highest-weight word (its base must be zero).
  HighestWeightWord bottom_word(const CartanContext& ctx) const;
  /// Right column read bottom to top.
  std::vector<Weight> right_column_up() const;
};

/// Fills a rectangle from its top row (left to right) and left column (top
/// to bottom, left_col[0] == top_row[0]). left_steps[a] labels the edge
/// between left_col[a+1] and left_col[a].
RectDiagram complete_rectangle(const std::vector<Weight>& top_row, const std::vector<StepCrystal>& top_steps,
                               const std::vector<Weight>& left_col, const std::vector<StepCrystal>& left_steps);

/// Commutor of the first m letters past the rest: the rectangle whose top row
/// is the suffix of w and whose left column is the prefix read backwards.
/// bottom_word() is the rectification of the suffix.
RectDiagram commutor_rectangle(const HighestWeightWord& w, int m);

/// Staircase gamma(i,j), 0 <= i <= j <= r, with gamma(i,i) = 0 and the
/// word on row 0.
struct TriDiagram {
  int r = 0;
  std::vector<std::vector<Weight>> cells;  // cells[i][j - i]
  std::vector<StepCrystal> steps;          // steps of the row-0 word

  const Weight& at(int i, int j) const {
    return cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i)];
  }
  /// Right column read bottom to top; steps reversed.
  HighestWeightWord right_edge(const CartanContext& ctx) const;
};

TriDiagram triangle(const HighestWeightWord& w);
HighestWeightWord evacuation(const HighestWeightWord& w);

/// Top row lambda_0..lambda_r and bottom row mu_1..mu_{r+1} shifted one step
/// right; mu_1 = 0 and mu_{r+1} = lambda_r.
struct TwoRowDiagram {
  HighestWeightWord top;
  HighestWeightWord bottom;
};

TwoRowDiagram two_row(const HighestWeightWord& w);
HighestWeightWord promotion(const HighestWeightWord& w);
/// Inverse of promotion, from the reflected local rule.
HighestWeightWord inverse_promotion(const HighestWeightWord& w);

/// Evacuation of the length-q prefix; corners after q are unchanged.
HighestWeightWord act_s1q(int q, const HighestWeightWord& w);
/// Action of a cactus word, rightmost generator first.
HighestWeightWord act(const cactus::CactusWord& g, const HighestWeightWord& w);
HighestWeightWord act(const cactus::CactusGen& g, const HighestWeightWord& w);
/// Action of a tau-word through the local involutions, rightmost first.
HighestWeightWord act_tau(const cactus::TauWord& t, const HighestWeightWord& w);

/// Consecutive rows of a cylindrical diagram. Row i holds gamma(i, i..i+r).
/// column[(j-1) mod r] is the crystal on horizontal edges into column j and
/// on vertical edges leaving row j upward.
struct CylWindow {
  CartanContext context;
  int r = 0;
  Weight lambda;
  std::vector<StepCrystal> column;
  int first_row = 0;
  std::vector<std::vector<Weight>> rows;

  int last_row() const { return first_row + static_cast<int>(rows.size()) - 1; }
  bool contains(int i, int j) const;
  const Weight& at(int i, int j) const;
  /// Row i as a highest-weight word.
  HighestWeightWord row_word(int i) const;
  /// Column j read from row lo to row hi.
  std::vector<Weight> column_values(int j, int lo, int hi) const;
};

/// Rows first_row..first_row+depth with `w` placed on row first_row.
CylWindow cylinder_from_row(const HighestWeightWord& w, int depth, int first_row = 0);

/// A path is a list of vertices (i,j) starting with i == j, each step being
/// (-1,0) or (0,1). `labels` is the highest-weight word read along it.
/// Produces rows lo..hi, filled from the path by the boundary conditions and
/// the local rules.
struct PathVertex {
  int i;
  int j;
  friend bool operator==(const PathVertex&, const PathVertex&) = default;
};
CylWindow cylinder_from_path(const std::vector<PathVertex>& path, const HighestWeightWord& labels, int lo, int hi);

/// Horizontal path along row i: (i,i), (i,i+1), ..., (i,i+r).
std::vector<PathVertex> horizontal_path(int i, int r);

/// Applies s_{p,q} by the wall-crossing operator on the cylinder whose top
/// row is window.row_word(0). The letters p..q span vertices p-1..q, so the
/// operator rewrites row p-1 from column q and then recovers row 0.
/// Returns a window of the same depth with the new word on row 0.
CylWindow wall_cross(const cactus::CactusGen& g, const CylWindow& window);

/// Cell-by-cell check of every unit square; returns the first failure, or
/// an empty string.
std::string validate(const CylWindow& window);
std::string validate(const RectDiagram& d);
std::string validate(const TriDiagram& d);

/// Grid of weight strings, each row indented by its first column.
std::string render_ascii(const CylWindow& window);
std::string render_ascii(const TriDiagram& d);
std::string render_ascii(const RectDiagram& d);

}  // namespace coboundary::growth
