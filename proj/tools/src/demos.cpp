#include "coboundary_tools/demos.hpp"

#include <coboundary_fixtures.hpp>

#include <sstream>

#include "coboundary/bridge.hpp"
#include "coboundary/growth.hpp"
#include "coboundary/json_io.hpp"
#include "coboundary/oracles.hpp"

namespace coboundary::demos {

using json = nlohmann::json;
using localrules::HighestWeightWord;
using weights::CartanContext;
using weights::Partition;
using weights::Weight;

namespace {

json load(std::string_view text) { return json::parse(text); }

Partition partition(const json& j) { return Partition(j.get<std::vector<int>>()); }

std::vector<Partition> partitions(const json& j) {
  std::vector<Partition> out;
  for (const auto& p : j) out.push_back(partition(p));
  return out;
}

std::vector<Weight> corners(const CartanContext& ctx, const json& row) {
  std::vector<Weight> out;
  for (const auto& p : row) out.push_back(weights::from_partition(ctx, partition(p)));
  return out;
}

HighestWeightWord word(const CartanContext& ctx, const json& row) {
  return HighestWeightWord::from_corners(ctx, corners(ctx, row));
}

std::string text(const std::vector<Weight>& ws) {
  std::string out;
  for (const auto& w : ws) out += (out.empty() ? "" : " ") + w.to_string();
  return out;
}

std::string text(const std::vector<Partition>& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : " ") + p.to_string();
  return out;
}

template <typename T>
Item compare(const std::string& name, const T& got, const T& want) {
  if (got == want) return {name, true, {}};
  return {name, false, "got " + text(got) + ", want " + text(want)};
}

Item compare_tableau(const std::string& name, const oracles::Tableau& got, const oracles::Tableau& want) {
  if (got == want) return {name, true, {}};
  return {name, false, "got " + got.to_string() + ", want " + want.to_string()};
}

}  // namespace

bool DemoResult::ok() const { return passed() == items.size(); }

std::size_t DemoResult::passed() const {
  std::size_t n = 0;
  for (const auto& it : items) n += it.ok ? 1 : 0;
  return n;
}

json DemoResult::to_json() const {
  json items_j = json::array();
  for (const auto& it : items) {
    json e = {{"name", it.name}, {"ok", it.ok}};
    if (!it.detail.empty()) e["detail"] = it.detail;
    items_j.push_back(e);
  }
  return {{"demo", name}, {"ok", ok()}, {"passed", passed()}, {"total", items.size()}, {"items", items_j}};
}

DemoResult bender_knuth() {
  const json fx = load(fixtures::bk);
  DemoResult res{"bk", {}, {}};
  const auto t = json_io::tableau_from_json(fx.at("tableau"));
  const int i = fx.at("i").get<int>();
  const int n = fx.at("entries").get<int>();

  const auto gt = oracles::gt_pattern(t, n);
  res.items.push_back(compare("Gelfand-Tsetlin pattern", gt, partitions(fx.at("gt"))));
  const auto conj = oracles::conjugate_sequence(gt);
  res.items.push_back(compare("conjugate sequence", conj, partitions(fx.at("conjugate"))));

  const auto ctx = CartanContext::gl(std::max(2, weights::conjugate(t.shape()).length()));
  const auto& mv = fx.at("local_move");
  const Weight kappa = weights::from_partition(ctx, partition(mv.at("kappa")));
  const Weight lambda = weights::from_partition(ctx, partition(mv.at("lambda")));
  const Weight nu = weights::from_partition(ctx, partition(mv.at("nu")));
  const Weight mu = localrules::complete_cell(kappa, lambda, nu);
  res.items.push_back(compare("local move", std::vector<Weight>{mu},
                              std::vector<Weight>{weights::from_partition(ctx, partition(mv.at("mu")))}));

  const auto moved = bridge::sequence_from_word(localrules::tau(bridge::word_from_sequence(conj, ctx), i));
  res.items.push_back(compare("after tau_" + std::to_string(i), moved, partitions(fx.at("after_tau"))));
  const auto back = oracles::conjugate_sequence(moved);
  res.items.push_back(compare("conjugated back", back, partitions(fx.at("after_conjugate"))));
  const auto result = oracles::from_shape_sequence(back, weights::Strip::Horizontal);
  const auto want = json_io::tableau_from_json(fx.at("result"));
  res.items.push_back(compare_tableau("b_" + std::to_string(i) + "(T)", result, want));
  res.items.push_back(compare_tableau("direct Bender-Knuth", oracles::bender_knuth(t, i), want));

  std::ostringstream os;
  os << "T           " << t.to_string() << "\n"
     << "GT          " << text(gt) << "\n"
     << "conjugate   " << text(conj) << "\n"
     << "tau_" << i << "       " << text(moved) << "\n"
     << "conjugate   " << text(back) << "\n"
     << "b_" << i << "(T)     " << result.to_string() << "\n";
  res.rendering = os.str();
  return res;
}

DemoResult symplectic_cylinder() {
  const json fx = load(fixtures::ex_sp);
  DemoResult res{"ex-sp", {}, {}};
  const auto ctx = json_io::context_from_json(fx.at("context"));
  const auto& window = fx.at("window");
  const auto first = word(ctx, window.at(0));
  const auto cyl = growth::cylinder_from_row(first, static_cast<int>(window.size()) - 1);
  for (std::size_t k = 0; k < window.size(); ++k)
    res.items.push_back(compare("window row " + std::to_string(k + 1), cyl.rows[k], corners(ctx, window[k])));

  const auto start = word(ctx, fx.at("start"));
  res.items.push_back(compare("promotion of the start word", growth::promotion(start).corners,
                              corners(ctx, fx.at("promotion"))));
  res.items.push_back(compare("evacuation of the start word", growth::evacuation(start).corners,
                              corners(ctx, fx.at("evacuation"))));

  const auto& g = fx.at("generator");
  const cactus::CactusGen gen{g.at(0).get<int>(), g.at(1).get<int>()};
  const auto acted = growth::act(gen, first);
  res.items.push_back(
      compare(gen.to_string() + " result row", acted.corners, corners(ctx, fx.at("after_generator_window").at(0))));

  res.rendering = growth::render_ascii(cyl) + "\n" + gen.to_string() + " applied to row 1:\n" +
                  growth::render_ascii(growth::cylinder_from_row(acted, static_cast<int>(window.size()) - 1));
  return res;
}

DemoResult cactus_graph() {
  const json fx = load(fixtures::fig_cat);
  DemoResult res{"fig-cat", {}, {}};
  const auto ctx = CartanContext::gl(2);
  std::ostringstream os;
  for (const auto& e : fx.at("edges")) {
    const auto from_name = e.at(0).get<std::string>();
    const auto to_name = e.at(3).get<std::string>();
    const cactus::CactusGen gen{e.at(1).get<int>(), e.at(2).get<int>()};
    const auto from = json_io::tableau_from_json(fx.at("tableaux").at(from_name));
    const auto to = json_io::tableau_from_json(fx.at("tableaux").at(to_name));
    const std::string label = from_name + " " + gen.to_string() + " " + to_name;

    const auto got = bridge::tableau_from_word(growth::act(gen, bridge::word_from_tableau(from, ctx)));
    res.items.push_back(compare_tableau(label + " by local rules", got, to));
    const auto m = oracles::matching_action(oracles::matching_from_tableau(from), gen.p, gen.q);
    const auto m_want = oracles::matching_from_tableau(to);
    res.items.push_back(m == m_want ? Item{label + " by matchings", true, {}}
                                    : Item{label + " by matchings", false,
                                           "got " + m.to_string() + ", want " + m_want.to_string()});
    os << from.to_string() << " --" << gen.to_string() << "--> " << got.to_string() << "   "
       << oracles::matching_from_tableau(from).to_string() << " --> " << m.to_string() << "\n";
  }
  res.rendering = os.str();
  return res;
}

DemoResult gl_cylinder() {
  const json fx = load(fixtures::gl_cylinder);
  DemoResult res{"gl-cylinder", {}, {}};
  const auto ctx = json_io::context_from_json(fx.at("context"));
  const auto& rows = fx.at("rows");
  const auto cyl = growth::cylinder_from_row(word(ctx, rows.at(0)), static_cast<int>(rows.size()) - 1);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    res.items.push_back(compare("row " + std::to_string(k + 1), cyl.rows[k], corners(ctx, rows[k])));
    const auto t = bridge::tableau_from_word(cyl.row_word(static_cast<int>(k)));
    res.items.push_back({"row " + std::to_string(k + 1) + " is a standard tableau", oracles::is_standard(t),
                         t.to_string()});
  }
  res.rendering = growth::render_ascii(cyl);
  return res;
}

std::vector<std::string> names() { return {"bk", "ex-sp", "fig-cat", "gl-cylinder"}; }

DemoResult run(const std::string& name) {
  if (name == "bk") return bender_knuth();
  if (name == "ex-sp") return symplectic_cylinder();
  if (name == "fig-cat") return cactus_graph();
  if (name == "gl-cylinder") return gl_cylinder();
  throw Error(ErrorCode::BadParameter, "unknown demo '" + name + "'");
}

std::optional<HighestWeightWord> input_word(const std::string& name) {
  if (name == "ex-sp" || name == "ex-sp-row1") {
    const json fx = load(fixtures::ex_sp);
    const auto ctx = json_io::context_from_json(fx.at("context"));
    return word(ctx, name == "ex-sp" ? fx.at("start") : fx.at("window").at(0));
  }
  if (name == "gl-cylinder") {
    const json fx = load(fixtures::gl_cylinder);
    return word(json_io::context_from_json(fx.at("context")), fx.at("rows").at(0));
  }
  const std::string prefix = "fig-cat-";
  if (name.rfind(prefix, 0) == 0) {
    const json fx = load(fixtures::fig_cat);
    const auto key = name.substr(prefix.size());
    if (!fx.at("tableaux").contains(key)) return std::nullopt;
    return bridge::word_from_tableau(json_io::tableau_from_json(fx.at("tableaux").at(key)), CartanContext::gl(2));
  }
  return std::nullopt;
}

}  // namespace coboundary::demos
