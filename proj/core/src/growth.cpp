#include "coboundary/growth.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace coboundary::growth {

using localrules::complete_cell;
using localrules::valid_step;
using weights::dom_w;

namespace {

std::size_t idx(int k) { return static_cast<std::size_t>(k); }

int mod(int a, int r) { return ((a % r) + r) % r; }

// Checks one unit square; kappa bottom-left, lambda top-left, nu top-right,
// mu bottom-right.
std::string check_cell(const Weight& kappa, const Weight& lambda, const Weight& nu, const Weight& mu,
                       StepCrystal vertical, StepCrystal horizontal) {
  std::ostringstream os;
  os << "kappa=" << kappa << " lambda=" << lambda << " nu=" << nu << " mu=" << mu << ": ";
  if (!valid_step(kappa, lambda, vertical) || !valid_step(mu, nu, vertical)) return os.str() + "bad vertical edge";
  if (!valid_step(lambda, nu, horizontal) || !valid_step(kappa, mu, horizontal))
    return os.str() + "bad horizontal edge";
  if (!(mu == dom_w(kappa + nu - lambda))) return os.str() + "mu is not dom(kappa+nu-lambda)";
  if (!(lambda == dom_w(kappa + nu - mu))) return os.str() + "lambda is not dom(kappa+nu-mu)";
  return {};
}

}  // namespace

// ---------------------------------------------------------------------------
// Rectangles

HighestWeightWord RectDiagram::bottom_word(const CartanContext& ctx) const {
  return {ctx, horizontal, grid.back()};
}

std::vector<Weight> RectDiagram::right_column_up() const {
  std::vector<Weight> out;
  for (auto it = grid.rbegin(); it != grid.rend(); ++it) out.push_back(it->back());
  return out;
}

RectDiagram complete_rectangle(const std::vector<Weight>& top_row, const std::vector<StepCrystal>& top_steps,
                               const std::vector<Weight>& left_col, const std::vector<StepCrystal>& left_steps) {
  if (top_row.empty() || left_col.empty() || top_row.size() != top_steps.size() + 1 ||
      left_col.size() != left_steps.size() + 1)
    throw Error(ErrorCode::BadParameter, "rectangle boundary sizes do not match their step lists");
  if (!(top_row.front() == left_col.front()))
    throw Error(ErrorCode::InvalidStep, "top row and left column disagree at the corner");
  const std::size_t m = left_steps.size();
  const std::size_t n = top_steps.size();
  RectDiagram d{std::vector<std::vector<Weight>>(m + 1, std::vector<Weight>(n + 1, top_row.front())), left_steps,
                top_steps};
  d.grid[0] = top_row;
  for (std::size_t a = 0; a <= m; ++a) d.grid[a][0] = left_col[a];
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b)
      d.grid[a + 1][b + 1] =
          complete_cell(d.grid[a + 1][b], d.grid[a][b], d.grid[a][b + 1], left_steps[a], top_steps[b]);
  return d;
}

RectDiagram commutor_rectangle(const HighestWeightWord& w, int m) {
  if (m < 0 || m > w.length()) throw Error(ErrorCode::IndexOutOfRange, "split " + std::to_string(m));
  std::vector<Weight> top(w.corners.begin() + m, w.corners.end());
  std::vector<StepCrystal> top_steps(w.steps.begin() + m, w.steps.end());
  std::vector<Weight> left(w.corners.rend() - m - 1, w.corners.rend());
  // left[a] = corner m - a; edge between left[a+1] and left[a] is step m - a.
  std::vector<StepCrystal> left_steps;
  for (int a = 0; a < m; ++a) left_steps.push_back(w.steps[idx(m - a - 1)]);
  return complete_rectangle(top, top_steps, left, left_steps);
}

// ---------------------------------------------------------------------------
// Triangles

HighestWeightWord TriDiagram::right_edge(const CartanContext& ctx) const {
  HighestWeightWord out{ctx, {steps.rbegin(), steps.rend()}, {}};
  for (int i = r; i >= 0; --i) out.corners.push_back(at(i, r));
  return out;
}

TriDiagram triangle(const HighestWeightWord& w) {
  const int r = w.length();
  TriDiagram d{r, {}, w.steps};
  d.cells.resize(idx(r + 1));
  d.cells[0] = w.corners;
  for (int i = 1; i <= r; ++i) d.cells[idx(i)].assign(idx(r - i + 1), Weight::zero(w.context));
  auto cell = [&](int i, int j) -> Weight& { return d.cells[idx(i)][idx(j - i)]; };
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      cell(i + 1, j + 1) = complete_cell(cell(i + 1, j), cell(i, j), cell(i, j + 1), w.steps[idx(i)], w.steps[idx(j)]);
  return d;
}

HighestWeightWord evacuation(const HighestWeightWord& w) { return triangle(w).right_edge(w.context); }

// ---------------------------------------------------------------------------
// Promotion

TwoRowDiagram two_row(const HighestWeightWord& w) {
  const int r = w.length();
  HighestWeightWord bottom{w.context, {}, {Weight::zero(w.context)}};
  if (r == 0) return {w, w};
  for (int k = 1; k < r; ++k)
    bottom.corners.push_back(complete_cell(bottom.corners.back(), w.corners[idx(k)], w.corners[idx(k + 1)],
                                           w.steps[0], w.steps[idx(k)]));
  bottom.corners.push_back(w.shape());
  bottom.steps.assign(w.steps.begin() + 1, w.steps.end());
  bottom.steps.push_back(w.steps[0]);
  if (!valid_step(bottom.corners[idx(r - 1)], bottom.corners[idx(r)], w.steps[0]))
    throw Error(ErrorCode::InvalidStep, "promotion: last step " + bottom.corners[idx(r - 1)].to_string() + " -> " +
                                            bottom.corners[idx(r)].to_string() + " is not a " +
                                            w.steps[0].to_string() + " step");
  return {w, bottom};
}

HighestWeightWord promotion(const HighestWeightWord& w) { return two_row(w).bottom; }

HighestWeightWord inverse_promotion(const HighestWeightWord& w) {
  const int r = w.length();
  if (r == 0) return w;
  const StepCrystal wrapped = w.steps[idx(r - 1)];
  std::vector<Weight> out(idx(r + 1), Weight::zero(w.context));
  out[idx(r)] = w.shape();
  for (int k = r - 1; k >= 1; --k)
    out[idx(k)] = complete_cell(w.corners[idx(k - 1)], w.corners[idx(k)], out[idx(k + 1)], w.steps[idx(k - 1)], wrapped);
  if (!valid_step(out[0], out[1], wrapped))
    throw Error(ErrorCode::InvalidStep, "inverse promotion: first step " + out[1].to_string() + " is not a " +
                                            wrapped.to_string() + " step");
  HighestWeightWord res{w.context, {wrapped}, std::move(out)};
  res.steps.insert(res.steps.end(), w.steps.begin(), w.steps.end() - 1);
  return res;
}

// ---------------------------------------------------------------------------
// Cactus action

HighestWeightWord act_s1q(int q, const HighestWeightWord& w) {
  if (q < 1 || q > w.length())
    throw Error(ErrorCode::IndexOutOfRange, "s(1," + std::to_string(q) + ") on a word of length " +
                                                std::to_string(w.length()));
  HighestWeightWord prefix{w.context, {w.steps.begin(), w.steps.begin() + q},
                           {w.corners.begin(), w.corners.begin() + q + 1}};
  HighestWeightWord e = evacuation(prefix);
  HighestWeightWord out = w;
  std::copy(e.steps.begin(), e.steps.end(), out.steps.begin());
  std::copy(e.corners.begin(), e.corners.end(), out.corners.begin());
  return out;
}

HighestWeightWord act(const cactus::CactusGen& g, const HighestWeightWord& w) {
  return act(cactus::reduce_to_s1q(g, w.length()), w);
}

HighestWeightWord act(const cactus::CactusWord& g, const HighestWeightWord& w) {
  if (g.r != w.length())
    throw Error(ErrorCode::BadParameter, "cactus word on " + std::to_string(g.r) + " strands acting on a word of length " +
                                             std::to_string(w.length()));
  HighestWeightWord out = w;
  for (auto it = g.gens.rbegin(); it != g.gens.rend(); ++it) {
    if (it->p == 1) {
      out = act_s1q(it->q, out);
    } else {
      out = act(cactus::reduce_to_s1q(*it, g.r), out);
    }
  }
  return out;
}

HighestWeightWord act_tau(const cactus::TauWord& t, const HighestWeightWord& w) {
  HighestWeightWord out = w;
  for (auto it = t.rbegin(); it != t.rend(); ++it) out = localrules::tau(out, *it);
  return out;
}

// ---------------------------------------------------------------------------
// Cylinders

bool CylWindow::contains(int i, int j) const {
  return i >= first_row && i <= last_row() && j - i >= 0 && j - i <= r;
}

const Weight& CylWindow::at(int i, int j) const {
  if (!contains(i, j))
    throw Error(ErrorCode::IndexOutOfRange, "(" + std::to_string(i) + "," + std::to_string(j) + ") outside the window");
  return rows[idx(i - first_row)][idx(j - i)];
}

HighestWeightWord CylWindow::row_word(int i) const {
  if (i < first_row || i > last_row()) throw Error(ErrorCode::IndexOutOfRange, "row " + std::to_string(i));
  HighestWeightWord w{context, {}, rows[idx(i - first_row)]};
  for (int k = 1; k <= r; ++k) w.steps.push_back(column[idx(mod(i + k - 1, r))]);
  return w;
}

std::vector<Weight> CylWindow::column_values(int j, int lo, int hi) const {
  std::vector<Weight> out;
  for (int i = lo; i <= hi; ++i) out.push_back(at(i, j));
  return out;
}

CylWindow cylinder_from_row(const HighestWeightWord& w, int depth, int first_row) {
  const int r = w.length();
  if (r < 1) throw Error(ErrorCode::BadParameter, "cylinder needs a word of positive length");
  if (depth < 0) throw Error(ErrorCode::BadParameter, "negative depth");
  CylWindow c{w.context, r, w.shape(), std::vector<StepCrystal>(idx(r)), first_row, {}};
  for (int k = 1; k <= r; ++k) c.column[idx(mod(first_row + k - 1, r))] = w.steps[idx(k - 1)];
  HighestWeightWord row = w;
  c.rows.push_back(row.corners);
  for (int d = 0; d < depth; ++d) {
    row = promotion(row);
    c.rows.push_back(row.corners);
  }
  return c;
}

std::vector<PathVertex> horizontal_path(int i, int r) {
  std::vector<PathVertex> out;
  for (int j = i; j <= i + r; ++j) out.push_back({i, j});
  return out;
}

CylWindow cylinder_from_path(const std::vector<PathVertex>& path, const HighestWeightWord& labels, int lo, int hi) {
  const int r = labels.length();
  if (r < 1) throw Error(ErrorCode::BadPath, "path must have positive length");
  if (path.size() != idx(r + 1)) throw Error(ErrorCode::BadPath, "path and word lengths differ");
  if (path.front().i != path.front().j) throw Error(ErrorCode::BadPath, "path must start on the diagonal");
  if (lo > hi) throw Error(ErrorCode::BadPath, "empty row range");

  std::vector<std::optional<StepCrystal>> column(idx(r));
  auto assign = [&](int slot, StepCrystal s) {
    auto& c = column[idx(mod(slot, r))];
    if (c && !(*c == s)) throw Error(ErrorCode::BadPath, "inconsistent crystal labels along the path");
    c = s;
  };
  for (int k = 1; k <= r; ++k) {
    const PathVertex a = path[idx(k - 1)];
    const PathVertex b = path[idx(k)];
    if (b.i == a.i && b.j == a.j + 1) {
      assign(b.j - 1, labels.steps[idx(k - 1)]);
    } else if (b.i == a.i - 1 && b.j == a.j) {
      assign(b.i, labels.steps[idx(k - 1)]);
    } else {
      throw Error(ErrorCode::BadPath, "path step " + std::to_string(k) + " is neither (-1,0) nor (0,1)");
    }
  }

  int row_lo = lo;
  int row_hi = hi;
  for (const auto& v : path) {
    row_lo = std::min(row_lo, v.i);
    row_hi = std::max(row_hi, v.i);
  }

  std::map<std::pair<int, int>, Weight> known;
  auto put = [&](int i, int j, const Weight& w) {
    auto [it, fresh] = known.emplace(std::make_pair(i, j), w);
    if (!fresh && !(it->second == w))
      throw Error(ErrorCode::BadPath, "label at (" + std::to_string(i) + "," + std::to_string(j) +
                                          ") conflicts with the boundary conditions");
    return fresh;
  };
  for (int i = row_lo; i <= row_hi; ++i) {
    put(i, i, Weight::zero(labels.context));
    put(i, i + r, labels.shape());
  }
  for (int k = 0; k <= r; ++k) put(path[idx(k)].i, path[idx(k)].j, labels.corners[idx(k)]);

  auto get = [&](int i, int j) -> const Weight* {
    auto it = known.find({i, j});
    return it == known.end() ? nullptr : &it->second;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = row_lo; i < row_hi; ++i) {
      for (int j = i + 1; j <= i + r - 1; ++j) {
        const Weight* lambda = get(i, j);
        const Weight* nu = get(i, j + 1);
        const Weight* kappa = get(i + 1, j);
        const Weight* mu = get(i + 1, j + 1);
        const int have = (lambda != nullptr) + (nu != nullptr) + (kappa != nullptr) + (mu != nullptr);
        if (have != 3) continue;
        if (!mu) put(i + 1, j + 1, dom_w(*kappa + *nu - *lambda));
        if (!lambda) put(i, j, dom_w(*kappa + *nu - *mu));
        if (!kappa) put(i + 1, j, dom_w(*lambda + *mu - *nu));
        if (!nu) put(i, j + 1, dom_w(*lambda + *mu - *kappa));
        changed = true;
      }
    }
  }

  CylWindow c{labels.context, r, labels.shape(), {}, lo, {}};
  for (auto& col : column) c.column.push_back(*col);
  for (int i = lo; i <= hi; ++i) {
    std::vector<Weight> row;
    for (int j = i; j <= i + r; ++j) {
      const Weight* w = get(i, j);
      if (!w) throw Error(ErrorCode::BadPath, "path does not determine (" + std::to_string(i) + "," + std::to_string(j) + ")");
      row.push_back(*w);
    }
    c.rows.push_back(std::move(row));
  }
  const std::string problem = validate(c);
  if (!problem.empty()) throw Error(ErrorCode::InvalidStep, problem);
  return c;
}

CylWindow wall_cross(const cactus::CactusGen& g, const CylWindow& window) {
  const int r = window.r;
  if (g.p < 1 || g.p >= g.q || g.q > r)
    throw Error(ErrorCode::IndexOutOfRange, g.to_string() + " on words of length " + std::to_string(r));
  const int p0 = g.p - 1;
  const int depth = static_cast<int>(window.rows.size()) - 1;
  const HighestWeightWord top = window.row_word(window.first_row);
  const CylWindow full = cylinder_from_row(top, std::max(depth, g.q), 0);

  // Row p0 of the new diagram: reflected along column q inside [p0:q],
  // unchanged to the right of q.
  HighestWeightWord row = full.row_word(p0);
  for (int j = p0; j <= g.q; ++j) row.corners[idx(j - p0)] = full.at(p0 + g.q - j, g.q);
  for (int k = 1; k <= r; ++k) {
    const int j = p0 + k;
    if (j <= g.q) row.steps[idx(k - 1)] = full.column[idx(mod(p0 + g.q - j, r))];
  }
  for (int k = 0; k < p0; ++k) row = inverse_promotion(row);
  return cylinder_from_row(row, depth, window.first_row);
}

std::string validate(const CylWindow& c) {
  for (int i = c.first_row; i <= c.last_row(); ++i) {
    if (!c.at(i, i).is_zero()) return "row " + std::to_string(i) + " does not start at zero";
    if (!(c.at(i, i + c.r) == c.lambda)) return "row " + std::to_string(i) + " does not end at the shape";
    const auto w = c.row_word(i);
    for (int k = 0; k < c.r; ++k)
      if (!valid_step(w.corners[idx(k)], w.corners[idx(k + 1)], w.steps[idx(k)]))
        return "row " + std::to_string(i) + " step " + std::to_string(k + 1) + " is invalid";
  }
  for (int i = c.first_row; i < c.last_row(); ++i) {
    for (int j = i + 1; j <= i + c.r - 1; ++j) {
      const std::string problem = check_cell(c.at(i + 1, j), c.at(i, j), c.at(i, j + 1), c.at(i + 1, j + 1),
                                             c.column[idx(mod(i, c.r))], c.column[idx(mod(j, c.r))]);
      if (!problem.empty()) return "cell (" + std::to_string(i) + "," + std::to_string(j) + ") " + problem;
    }
  }
  return {};
}

std::string validate(const RectDiagram& d) {
  for (int a = 0; a < d.height(); ++a) {
    for (int b = 0; b < d.width(); ++b) {
      const std::string problem =
          check_cell(d.at(a + 1, b), d.at(a, b), d.at(a, b + 1), d.at(a + 1, b + 1), d.vertical[idx(a)],
                     d.horizontal[idx(b)]);
      if (!problem.empty()) return "cell (" + std::to_string(a) + "," + std::to_string(b) + ") " + problem;
    }
  }
  return {};
}

std::string validate(const TriDiagram& d) {
  for (int i = 0; i <= d.r; ++i)
    if (!d.at(i, i).is_zero()) return "diagonal entry " + std::to_string(i) + " is not zero";
  for (int i = 0; i < d.r; ++i) {
    for (int j = i + 1; j < d.r; ++j) {
      const std::string problem = check_cell(d.at(i + 1, j), d.at(i, j), d.at(i, j + 1), d.at(i + 1, j + 1),
                                             d.steps[idx(i)], d.steps[idx(j)]);
      if (!problem.empty()) return "cell (" + std::to_string(i) + "," + std::to_string(j) + ") " + problem;
    }
  }
  return {};
}

namespace {

std::string grid_text(const std::vector<std::pair<int, std::vector<Weight>>>& rows) {
  std::size_t width = 1;
  int min_offset = 0;
  for (const auto& [offset, row] : rows) {
    min_offset = std::min(min_offset, offset);
    for (const auto& w : row) width = std::max(width, w.to_string().size());
  }
  std::ostringstream os;
  for (const auto& [offset, row] : rows) {
    std::string line(idx(offset - min_offset) * (width + 1), ' ');
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::string s = row[k].to_string();
      s.resize(width, ' ');
      line += s;
      if (k + 1 < row.size()) line += ' ';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace

std::string render_ascii(const CylWindow& c) {
  std::vector<std::pair<int, std::vector<Weight>>> rows;
  for (int i = c.first_row; i <= c.last_row(); ++i) rows.emplace_back(i, c.rows[idx(i - c.first_row)]);
  return grid_text(rows);
}

std::string render_ascii(const TriDiagram& d) {
  std::vector<std::pair<int, std::vector<Weight>>> rows;
  for (int i = 0; i <= d.r; ++i) rows.emplace_back(i, d.cells[idx(i)]);
  return grid_text(rows);
}

std::string render_ascii(const RectDiagram& d) {
  std::vector<std::pair<int, std::vector<Weight>>> rows;
  for (const auto& row : d.grid) rows.emplace_back(0, row);
  return grid_text(rows);
}

}  // namespace coboundary::growth
