#include "coboundary/json_io.hpp"

#include <algorithm>

namespace coboundary::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_array(const json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

std::vector<int> trimmed_coords(const weights::Weight& w) {
  std::vector<int> c = w.coords;
  if (w.context.family != weights::Family::SL2)
    while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

}  // namespace

json to_json(const weights::CartanContext& ctx) {
  return {{"family", weights::to_string(ctx.family)}, {"rank", ctx.rank}};
}

weights::CartanContext context_from_json(const json& j) {
  const json& fam = field(j, "family");
  if (!fam.is_string()) bad("family must be a string");
  const auto family = weights::family_from_string(fam.get<std::string>());
  if (family == weights::Family::SL2) return weights::CartanContext::sl2();
  const int rank = as_int(field(j, "rank"), "rank");
  try {
    return family == weights::Family::GL ? weights::CartanContext::gl(rank) : weights::CartanContext::sp(rank);
  } catch (const Error& e) {
    bad(e.what());
  }
}

json to_json(const weights::Weight& w) {
  json j = to_json(w.context);
  j["coords"] = w.coords;
  return j;
}

weights::Weight weight_from_json(const json& j) {
  const auto ctx = context_from_json(j);
  auto coords = int_array(field(j, "coords"), "coords");
  if (coords.size() > static_cast<std::size_t>(ctx.rank)) bad("too many coordinates for " + ctx.to_string());
  coords.resize(static_cast<std::size_t>(ctx.rank), 0);
  return {ctx, coords};
}

json to_json(const localrules::HighestWeightWord& w) {
  json steps = json::array();
  for (const auto& s : w.steps) steps.push_back(s.to_string());
  json corners = json::array();
  for (const auto& c : w.corners) corners.push_back(trimmed_coords(c));
  return {{"context", to_json(w.context)}, {"steps", steps}, {"corners", corners}};
}

localrules::HighestWeightWord word_from_json(const json& j) {
  const auto ctx = context_from_json(field(j, "context"));
  const json& cs = field(j, "corners");
  if (!cs.is_array() || cs.empty()) bad("corners must be a nonempty array");
  localrules::HighestWeightWord w{ctx, {}, {}};
  for (const auto& c : cs) {
    auto coords = int_array(c, "corner");
    if (coords.size() > static_cast<std::size_t>(ctx.rank)) bad("corner too long for " + ctx.to_string());
    coords.resize(static_cast<std::size_t>(ctx.rank), 0);
    w.corners.push_back({ctx, coords});
  }
  if (j.contains("steps")) {
    const json& ss = j.at("steps");
    if (!ss.is_array()) bad("steps must be an array");
    for (const auto& s : ss) {
      if (!s.is_string()) bad("step descriptors must be strings");
      w.steps.push_back(localrules::StepCrystal::parse(s.get<std::string>()));
    }
  } else {
    w.steps.assign(w.corners.size() - 1, localrules::StepCrystal::vector());
  }
  w.validate();
  return w;
}

json to_json(const oracles::Tableau& t) { return t.rows; }

oracles::Tableau tableau_from_json(const json& j) {
  if (j.is_string()) return oracles::Tableau::parse(j.get<std::string>());
  if (!j.is_array()) bad("tableau must be an array of rows or a string");
  oracles::Tableau t;
  for (const auto& row : j) t.rows.push_back(int_array(row, "tableau row"));
  return t;
}

json to_json(const oracles::Matching& m) {
  json out = json::array();
  for (const auto& [a, b] : m.pairs) out.push_back({a, b});
  return out;
}

oracles::Matching matching_from_json(const json& j, int r) {
  if (!j.is_array()) bad("matching must be an array of pairs");
  oracles::Matching m{r, {}};
  for (const auto& p : j) {
    const auto v = int_array(p, "pair");
    if (v.size() != 2) bad("pairs must have two entries");
    m.pairs.emplace_back(std::min(v[0], v[1]), std::max(v[0], v[1]));
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

json to_json(const cactus::CactusWord& w) {
  json out = json::array();
  for (const auto& g : w.gens) out.push_back({g.p, g.q});
  return out;
}

cactus::CactusWord cactus_from_json(const json& j, int r) {
  if (j.is_string()) return cactus::CactusWord::parse(r, j.get<std::string>());
  if (!j.is_array()) bad("cactus word must be an array of [p,q] pairs or a string");
  std::vector<cactus::CactusGen> gens;
  for (const auto& g : j) {
    const auto v = int_array(g, "generator");
    if (v.size() != 2) bad("generators must be [p,q]");
    gens.push_back({v[0], v[1]});
  }
  try {
    return cactus::CactusWord(r, std::move(gens));
  } catch (const Error& e) {
    bad(e.what());
  }
}

json to_json(const growth::CylWindow& c) {
  json rows = json::array();
  for (const auto& row : c.rows) {
    json r = json::array();
    for (const auto& w : row) r.push_back(trimmed_coords(w));
    rows.push_back(r);
  }
  json column = json::array();
  for (const auto& s : c.column) column.push_back(s.to_string());
  return {{"context", to_json(c.context)}, {"r", c.r},        {"lambda", trimmed_coords(c.lambda)},
          {"column", column},              {"first_row", c.first_row}, {"rows", rows}};
}

growth::CylWindow window_from_json(const json& j) {
  growth::CylWindow c;
  c.context = context_from_json(field(j, "context"));
  const json& rows = field(j, "rows");
  if (!rows.is_array() || rows.empty()) bad("rows must be a nonempty array");
  const std::size_t rank = static_cast<std::size_t>(c.context.rank);
  for (const auto& row : rows) {
    if (!row.is_array()) bad("each row must be an array of weights");
    std::vector<weights::Weight> out;
    for (const auto& x : row) {
      auto coords = int_array(x, "weight");
      if (coords.size() > rank) bad("weight too long for " + c.context.to_string());
      coords.resize(rank, 0);
      out.push_back({c.context, coords});
    }
    if (!c.rows.empty() && out.size() != c.rows.front().size()) bad("rows have different lengths");
    c.rows.push_back(std::move(out));
  }
  c.r = static_cast<int>(c.rows.front().size()) - 1;
  if (c.r < 1) bad("rows need at least two entries");
  if (j.contains("r") && as_int(j.at("r"), "r") != c.r) bad("r does not match the row length");
  c.first_row = j.contains("first_row") ? as_int(j.at("first_row"), "first_row") : 0;
  if (j.contains("lambda")) {
    auto coords = int_array(j.at("lambda"), "lambda");
    if (coords.size() > rank) bad("lambda too long for " + c.context.to_string());
    coords.resize(rank, 0);
    c.lambda = {c.context, coords};
  } else {
    c.lambda = c.rows.front().back();
  }
  if (j.contains("column")) {
    const json& col = j.at("column");
    if (!col.is_array() || col.size() != static_cast<std::size_t>(c.r)) bad("column must list r step crystals");
    for (const auto& s : col) {
      if (!s.is_string()) bad("step descriptors must be strings");
      c.column.push_back(localrules::StepCrystal::parse(s.get<std::string>()));
    }
  } else {
    c.column.assign(static_cast<std::size_t>(c.r), localrules::StepCrystal::vector());
  }
  return c;
}

json to_json(const growth::TriDiagram& d) {
  json rows = json::array();
  for (const auto& row : d.cells) {
    json r = json::array();
    for (const auto& w : row) r.push_back(trimmed_coords(w));
    rows.push_back(r);
  }
  return {{"r", d.r}, {"rows", rows}};
}

json to_json(const growth::RectDiagram& d) {
  json rows = json::array();
  for (const auto& row : d.grid) {
    json r = json::array();
    for (const auto& w : row) r.push_back(trimmed_coords(w));
    rows.push_back(r);
  }
  return {{"rows", rows}};
}

json to_json(const algebra::QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

json to_json(const crystal::Crystal& c) {
  json elements = json::array();
  for (crystal::Element x = 0; x < c.size(); ++x) {
    json e = json::array();
    for (int i = 1; i <= c.num_indices(); ++i) {
      const auto y = c.e(i, x);
      e.push_back(y == crystal::kNone ? json(nullptr) : json(y));
    }
    elements.push_back({{"label", c.label(x)}, {"weight", c.weight(x).coords}, {"e", e}});
  }
  return {{"context", to_json(c.context())}, {"elements", elements}};
}

}  // namespace coboundary::json_io
