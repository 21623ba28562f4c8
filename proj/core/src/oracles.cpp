#include "coboundary/oracles.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace coboundary::oracles {

namespace {

using Grid = std::vector<std::vector<int>>;

constexpr int kInf = std::numeric_limits<int>::max();

// Jeu de taquin: slides the hole at (i,j) outward, filling it with the
// smaller of its right/lower neighbours. Returns the vacated outer corner.
std::pair<std::size_t, std::size_t> slide_out(Grid& g, std::size_t i, std::size_t j) {
  while (true) {
    const int right = j + 1 < g[i].size() ? g[i][j + 1] : kInf;
    const int down = i + 1 < g.size() && j < g[i + 1].size() ? g[i + 1][j] : kInf;
    if (right == kInf && down == kInf) break;
    if (right < down) {
      g[i][j] = right;
      ++j;
    } else {
      g[i][j] = down;
      ++i;
    }
  }
  g[i].pop_back();
  if (g[i].empty()) g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
  return {i, j};
}

Grid blank(const Partition& shape) {
  Grid g;
  for (int len : shape.trimmed()) g.emplace_back(static_cast<std::size_t>(len), 0);
  return g;
}

bool is_partition_shape(const Grid& g) {
  for (std::size_t r = 0; r < g.size(); ++r)
    if (g[r].empty() || (r > 0 && g[r].size() > g[r - 1].size())) return false;
  return true;
}

}  // namespace

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return Partition(parts);
}

int Tableau::size() const {
  int n = 0;
  for (const auto& row : rows) n += static_cast<int>(row.size());
  return n;
}

std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << t.to_string(); }

std::string Tableau::to_string() const {
  bool wide = false;
  for (const auto& row : rows)
    for (int x : row) wide = wide || x > 9 || x < 0;
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (wide && c) out += ',';
      out += std::to_string(rows[r][c]);
    }
  }
  return out;
}

Tableau Tableau::parse(const std::string& text) {
  Tableau t;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, '/')) {
    std::vector<int> entries;
    if (row.find(',') != std::string::npos) {
      std::string token;
      std::stringstream fields(row);
      while (std::getline(fields, token, ',')) {
        const auto first = token.find_first_not_of(' ');
        const auto last = token.find_last_not_of(' ');
        const std::string word = first == std::string::npos ? "" : token.substr(first, last - first + 1);
        if (word.empty() || word.size() > 6 ||
            !std::all_of(word.begin(), word.end(), [](unsigned char c) { return std::isdigit(c); }))
          throw Error(ErrorCode::ParseError, "bad tableau entry '" + word + "' in '" + text + "'");
        entries.push_back(std::stoi(word));
      }
    } else {
      for (char c : row) {
        if (c == ' ') continue;
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw Error(ErrorCode::ParseError, "bad tableau character '" + std::string(1, c) + "' in '" + text + "'");
        entries.push_back(c - '0');
      }
    }
    if (entries.empty()) throw Error(ErrorCode::ParseError, "empty tableau row in '" + text + "'");
    t.rows.push_back(std::move(entries));
  }
  if (!is_partition_shape(t.rows)) throw Error(ErrorCode::ParseError, "rows of '" + text + "' do not form a partition");
  return t;
}

bool is_semistandard(const Tableau& t) {
  if (!is_partition_shape(t.rows)) return false;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      const int x = t.rows[r][c];
      if (x < 1) return false;
      if (c > 0 && t.rows[r][c - 1] > x) return false;
      if (r > 0 && t.rows[r - 1][c] >= x) return false;
    }
  }
  return true;
}

bool is_dual_semistandard(const Tableau& t) {
  if (!is_partition_shape(t.rows)) return false;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      const int x = t.rows[r][c];
      if (x < 1) return false;
      if (c > 0 && t.rows[r][c - 1] >= x) return false;
      if (r > 0 && t.rows[r - 1][c] > x) return false;
    }
  }
  return true;
}

bool is_standard(const Tableau& t) {
  if (!is_semistandard(t)) return false;
  std::vector<int> all;
  for (const auto& row : t.rows) all.insert(all.end(), row.begin(), row.end());
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k] != static_cast<int>(k) + 1) return false;
  return true;
}

Tableau conjugate(const Tableau& t) {
  Tableau out;
  if (t.rows.empty()) return out;
  out.rows.resize(t.rows[0].size());
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size(); ++c) out.rows[c].push_back(row[c]);
  return out;
}

std::vector<Tableau> all_standard(const Partition& shape) {
  std::vector<Tableau> out;
  const auto parts = shape.trimmed();
  const int n = shape.size();
  Grid g = blank(shape);
  std::vector<std::size_t> filled(parts.size(), 0);
  // Place n, n-1, ... 1 at removable corners of the filled region, then read
  // off in lexicographic order.
  std::function<void(int)> rec = [&](int k) {
    if (k == 0) {
      out.push_back(Tableau{g});
      return;
    }
    for (std::size_t r = 0; r < parts.size(); ++r) {
      if (filled[r] == 0) continue;
      if (r + 1 < parts.size() && filled[r + 1] == filled[r]) continue;
      const std::size_t c = filled[r] - 1;
      g[r][c] = k;
      --filled[r];
      rec(k - 1);
      ++filled[r];
    }
  };
  for (std::size_t r = 0; r < parts.size(); ++r) filled[r] = static_cast<std::size_t>(parts[r]);
  rec(n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> all_semistandard(const Partition& bound, int max_entry) {
  std::vector<Tableau> out;
  std::vector<Partition> seq{Partition{}};
  const std::size_t rows = bound.trimmed().size();
  std::function<void()> rec = [&] {
    if (static_cast<int>(seq.size()) == max_entry + 1) {
      out.push_back(from_shape_sequence(seq, Strip::Horizontal));
      return;
    }
    const Partition prev = seq.back();
    std::vector<int> next(rows, 0);
    std::function<void(std::size_t)> choose = [&](std::size_t r) {
      if (r == rows) {
        seq.push_back(Partition(next));
        rec();
        seq.pop_back();
        return;
      }
      const int lo = prev.part(r);
      int hi = bound.part(r);
      if (r > 0) hi = std::min(hi, prev.part(r - 1));
      for (int v = lo; v <= hi; ++v) {
        next[r] = v;
        choose(r + 1);
      }
    };
    choose(0);
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> shape_sequence(const Tableau& t, int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> parts;
    for (const auto& row : t.rows) {
      const int len = static_cast<int>(std::count_if(row.begin(), row.end(), [k](int x) { return x <= k; }));
      parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    out.emplace_back(parts);
  }
  return out;
}

Tableau from_shape_sequence(const std::vector<Partition>& seq, Strip kind) {
  if (seq.empty()) throw Error(ErrorCode::StripViolation, "empty sequence");
  if (seq.front().size() != 0) throw Error(ErrorCode::StripViolation, "sequence must start at the empty partition");
  Grid g = blank(seq.back());
  for (std::size_t k = 1; k < seq.size(); ++k) {
    if (!weights::strip_check(seq[k - 1], seq[k], kind))
      throw Error(ErrorCode::StripViolation, seq[k - 1].to_string() + " -> " + seq[k].to_string() + " is not a " +
                                                 (kind == Strip::Horizontal ? "horizontal" : "vertical") + " strip");
    if (!seq.back().contains(seq[k]))
      throw Error(ErrorCode::StripViolation, "sequence is not increasing");
    for (std::size_t r = 0; r < seq[k].trimmed().size(); ++r)
      for (int c = seq[k - 1].part(r); c < seq[k].part(r); ++c) g[r][static_cast<std::size_t>(c)] = static_cast<int>(k);
  }
  return Tableau{g};
}

std::vector<Partition> gt_pattern(const Tableau& t, int n) {
  if (!is_semistandard(t)) throw Error(ErrorCode::StripViolation, t.to_string() + " is not semistandard");
  auto seq = shape_sequence(t, n);
  for (std::size_t k = 1; k < seq.size(); ++k)
    if (!weights::strip_check(seq[k - 1], seq[k], Strip::Horizontal))
      throw Error(ErrorCode::StripViolation, "step " + std::to_string(k) + " is not a horizontal strip");
  return seq;
}

std::vector<Partition> conjugate_sequence(const std::vector<Partition>& seq) {
  std::vector<Partition> out;
  for (const auto& p : seq) out.push_back(weights::conjugate(p));
  return out;
}

Tableau evacuation_oracle(const Tableau& t) {
  const int n = t.size();
  Grid g = t.rows;
  Grid result = blank(t.shape());
  for (int k = 1; k <= n; ++k) {
    auto [i, j] = slide_out(g, 0, 0);
    result[i][j] = n + 1 - k;
  }
  return Tableau{result};
}

Tableau promotion_oracle(const Tableau& t) {
  const int n = t.size();
  if (n == 0) return t;
  Grid g = t.rows;
  auto [i, j] = slide_out(g, 0, 0);
  for (auto& row : g)
    for (int& x : row) --x;
  if (i == g.size()) g.emplace_back();
  g[i].insert(g[i].begin() + static_cast<std::ptrdiff_t>(j), n);
  return Tableau{g};
}

Tableau bender_knuth(const Tableau& t, int i) {
  if (!is_semistandard(t)) throw Error(ErrorCode::BadParameter, t.to_string() + " is not semistandard");
  Grid g = t.rows;
  for (std::size_t r = 0; r < g.size(); ++r) {
    std::vector<std::size_t> free_cols;
    int lows = 0;
    for (std::size_t c = 0; c < g[r].size(); ++c) {
      const int x = t.rows[r][c];
      if (x == i) {
        const bool frozen = r + 1 < g.size() && c < g[r + 1].size() && t.rows[r + 1][c] == i + 1;
        if (!frozen) {
          free_cols.push_back(c);
          ++lows;
        }
      } else if (x == i + 1) {
        const bool frozen = r > 0 && t.rows[r - 1][c] == i;
        if (!frozen) free_cols.push_back(c);
      }
    }
    const std::size_t highs = free_cols.size() - static_cast<std::size_t>(lows);
    for (std::size_t k = 0; k < free_cols.size(); ++k) g[r][free_cols[k]] = k < highs ? i : i + 1;
  }
  return Tableau{g};
}

Tableau dual_knuth(const Tableau& t, int i) {
  const int n = t.size();
  if (i < 1 || i > n - 2) throw Error(ErrorCode::IndexOutOfRange, "D_" + std::to_string(i));
  std::map<int, int> pos;
  int p = 0;
  for (auto row = t.rows.rbegin(); row != t.rows.rend(); ++row)
    for (int x : *row) pos[x] = p++;
  auto between = [&](int mid, int a, int b) {
    return std::min(pos[a], pos[b]) < pos[mid] && pos[mid] < std::max(pos[a], pos[b]);
  };
  int x = 0;
  int y = 0;
  if (between(i + 2, i, i + 1)) {
    x = i;
    y = i + 1;
  } else if (between(i, i + 1, i + 2)) {
    x = i + 1;
    y = i + 2;
  } else {
    return t;
  }
  Tableau out = t;
  for (auto& row : out.rows)
    for (int& v : row) v = v == x ? y : v == y ? x : v;
  return out;
}

bool Matching::is_noncrossing() const {
  for (const auto& [i, j] : pairs)
    for (const auto& [k, l] : pairs)
      if (i < k && k < j && j < l) return false;
  return true;
}

std::string Matching::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    os << (k ? " " : "") << '(' << pairs[k].first << ',' << pairs[k].second << ')';
  return os.str();
}

std::vector<Matching> all_noncrossing(int r) {
  std::vector<Matching> out;
  if (r % 2 != 0) return out;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> open;
  std::function<void(int)> rec = [&](int v) {
    if (v > r) {
      if (open.empty()) {
        Matching m{r, pairs};
        std::sort(m.pairs.begin(), m.pairs.end());
        out.push_back(m);
      }
      return;
    }
    if (static_cast<int>(open.size()) < r - v + 1) {
      open.push_back(v);
      rec(v + 1);
      open.pop_back();
    }
    if (!open.empty()) {
      const int o = open.back();
      open.pop_back();
      pairs.emplace_back(o, v);
      rec(v + 1);
      pairs.pop_back();
      open.push_back(o);
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(), [](const Matching& a, const Matching& b) { return a.pairs < b.pairs; });
  return out;
}

Matching matching_from_tableau(const Tableau& t) {
  if (t.rows.size() != 2 || t.rows[0].size() != t.rows[1].size() || !is_standard(t))
    throw Error(ErrorCode::BadParameter, t.to_string() + " is not a standard tableau with two equal rows");
  const int r = t.size();
  std::vector<bool> opener(static_cast<std::size_t>(r + 1), false);
  for (int x : t.rows[0]) opener[static_cast<std::size_t>(x)] = true;
  Matching m{r, {}};
  std::vector<int> stack;
  for (int v = 1; v <= r; ++v) {
    if (opener[static_cast<std::size_t>(v)]) {
      stack.push_back(v);
    } else {
      m.pairs.emplace_back(stack.back(), v);
      stack.pop_back();
    }
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

Tableau tableau_from_matching(const Matching& m) {
  Tableau t{{{}, {}}};
  for (const auto& [i, j] : m.pairs) {
    t.rows[0].push_back(i);
    t.rows[1].push_back(j);
  }
  std::sort(t.rows[0].begin(), t.rows[0].end());
  std::sort(t.rows[1].begin(), t.rows[1].end());
  return t;
}

Matching matching_s1p(const Matching& m, int p) {
  if (p < 1 || p > m.r) throw Error(ErrorCode::IndexOutOfRange, "s(1," + std::to_string(p) + ")");
  Matching out{m.r, {}};
  std::vector<int> lefts, rights;
  for (const auto& [i, j] : m.pairs) {
    if (j <= p) {
      out.pairs.emplace_back(p - j + 1, p - i + 1);
    } else if (i <= p) {
      lefts.push_back(p - i + 1);
      rights.push_back(j);
    } else {
      out.pairs.emplace_back(i, j);
    }
  }
  // Crossing pairs: innermost reflected left end takes the nearest right end.
  std::sort(lefts.rbegin(), lefts.rend());
  std::sort(rights.begin(), rights.end());
  for (std::size_t k = 0; k < lefts.size(); ++k) out.pairs.emplace_back(lefts[k], rights[k]);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

Matching matching_action(const Matching& m, int p, int q) {
  if (p < 1 || p >= q || q > m.r)
    throw Error(ErrorCode::IndexOutOfRange, "s(" + std::to_string(p) + "," + std::to_string(q) + ")");
  if (p == 1) return matching_s1p(m, q);
  return matching_s1p(matching_s1p(matching_s1p(m, q), q - p + 1), q);
}

}  // namespace coboundary::oracles
