#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "coboundary/bridge.hpp"
#include "coboundary/growth.hpp"
#include "coboundary/hecke.hpp"
#include "coboundary/json_io.hpp"
#include "coboundary_tools/demos.hpp"
#include "coboundary_tools/verify.hpp"

namespace {

using namespace coboundary;
using json = nlohmann::json;
using localrules::HighestWeightWord;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 1;
  std::size_t max_size = crystal::kDefaultMaxSize;
  bool ascii() const { return format == "ascii"; }
};

struct Input {
  std::string file;
  std::string inline_json;
  std::string demo;

  void attach(CLI::App* cmd) {
    cmd->add_option("--input", file, "JSON file ('-' for stdin)");
    cmd->add_option("--json", inline_json, "inline JSON");
    cmd->add_option("--demo", demo, "named example input (ex-sp, ex-sp-row1, gl-cylinder, fig-cat-A..E)");
  }

  json read_json() const {
    const int sources = !file.empty() + !inline_json.empty() + !demo.empty();
    if (sources > 1) throw UsageError("give exactly one of --input, --json, --demo");
    std::string text;
    if (!inline_json.empty()) {
      text = inline_json;
    } else if (!file.empty() && file != "-") {
      std::ifstream in(file);
      if (!in) throw UsageError("cannot open " + file);
      text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    }
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }

  HighestWeightWord word() const {
    if (!demo.empty()) {
      if (!file.empty() || !inline_json.empty()) throw UsageError("give exactly one of --input, --json, --demo");
      auto w = demos::input_word(demo);
      if (!w) throw UsageError("unknown demo input '" + demo + "'");
      return *w;
    }
    return json_io::word_from_json(read_json());
  }
};

void print_word(const HighestWeightWord& w, const Globals& g) {
  if (!g.ascii()) {
    std::cout << json_io::to_json(w).dump(2) << "\n";
    return;
  }
  std::cout << w.to_string() << "\n";
  const bool boxes = w.context.family == weights::Family::GL &&
                     std::all_of(w.steps.begin(), w.steps.end(),
                                 [](const auto& s) { return s == localrules::StepCrystal::vector(); });
  if (boxes) std::cout << "tableau " << bridge::tableau_from_word(w).to_string() << "\n";
}

void print_tableau(const oracles::Tableau& t, const Globals& g) {
  if (g.ascii())
    std::cout << t.to_string() << "\n";
  else
    std::cout << json_io::to_json(t).dump() << "\n";
}

weights::Partition parse_shape(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad shape '" + text + "'");
    }
  }
  for (std::size_t k = 0; k < parts.size(); ++k)
    if (parts[k] <= 0 || (k > 0 && parts[k] > parts[k - 1]))
      throw Error(ErrorCode::BadParameter, "shape '" + text + "' is not a partition");
  return weights::Partition(parts);
}

weights::CartanContext parse_context(const std::string& family, int rank) {
  const auto f = weights::family_from_string(family);
  if (f == weights::Family::SL2) return weights::CartanContext::sl2();
  return f == weights::Family::GL ? weights::CartanContext::gl(rank) : weights::CartanContext::sp(rank);
}

int report(const std::vector<verify::Report>& reports, const Globals& g) {
  bool ok = true;
  json all = json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    all.push_back(r.to_json());
  }
  if (g.ascii()) {
    for (const auto& r : reports) {
      std::cout << (r.ok() ? "pass " : "FAIL ") << r.suite << ": " << r.checked << " checked, " << r.failed
                << " failed\n";
      for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    }
  } else {
    std::cout << json{{"ok", ok}, {"reports", all}}.dump(2) << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

const char* kFooter =
    "Cactus words are written left to right and act right to left:\n"
    "act(g*h, w) = act(g, act(h, w)), so in \"s(1,4) s(2,3)\" s(2,3) acts first.\n"
    "Exit codes: 0 ok, 1 verification failure, 2 usage or parse error, 3 domain error.";

int run(int argc, char** argv) {
  CLI::App app{"Cactus group actions on highest-weight words via local rules and growth diagrams"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format,--render", g.format, "output format")->check(CLI::IsMember({"json", "ascii"}));
  app.add_option("--seed", g.seed, "seed for randomized property sampling");
  app.add_option("--max-size", g.max_size, "cap on materialized crystal sizes");

  std::function<int()> action;

  // act
  Input act_in;
  std::string act_word;
  auto* act_cmd = app.add_subcommand("act", "apply a cactus word to a highest-weight word");
  act_in.attach(act_cmd);
  act_cmd->add_option("--word", act_word, "cactus word such as \"s(1,4) s(2,3)\"")->required();
  act_cmd->callback([&] {
    action = [&] {
      const auto w = act_in.word();
      const auto gw = cactus::CactusWord::parse(w.length(), act_word);
      print_word(growth::act(gw, w), g);
      return kOk;
    };
  });

  // evacuate / promote / tau
  Input ev_in;
  auto* ev_cmd = app.add_subcommand("evacuate", "evacuation through the triangular growth diagram");
  ev_in.attach(ev_cmd);
  ev_cmd->callback([&] {
    action = [&] {
      const auto w = ev_in.word();
      if (g.ascii()) std::cout << growth::render_ascii(growth::triangle(w)) << "\n";
      print_word(growth::evacuation(w), g);
      return kOk;
    };
  });

  Input pr_in;
  bool pr_inverse = false;
  auto* pr_cmd = app.add_subcommand("promote", "promotion through the two-row growth diagram");
  pr_in.attach(pr_cmd);
  pr_cmd->add_flag("--inverse", pr_inverse, "inverse promotion");
  pr_cmd->callback([&] {
    action = [&] {
      const auto w = pr_in.word();
      if (pr_inverse) {
        print_word(growth::inverse_promotion(w), g);
        return kOk;
      }
      if (g.ascii()) std::cout << growth::render_ascii(growth::cylinder_from_row(w, 1)) << "\n";
      print_word(growth::promotion(w), g);
      return kOk;
    };
  });

  Input tau_in;
  int tau_i = 1;
  auto* tau_cmd = app.add_subcommand("tau", "local involution at one interior corner");
  tau_in.attach(tau_cmd);
  tau_cmd->add_option("--i", tau_i, "corner index, 1 <= i < length")->required();
  tau_cmd->callback([&] {
    action = [&] {
      print_word(localrules::tau(tau_in.word(), tau_i), g);
      return kOk;
    };
  });

  // cylinder
  Input cyl_in;
  int cyl_depth = 0;
  std::string cyl_wall;
  auto* cyl_cmd = app.add_subcommand("cylinder", "window of the cylindrical growth diagram");
  cyl_in.attach(cyl_cmd);
  cyl_cmd->add_option("--depth", cyl_depth, "number of promotion rows below the input")->required();
  cyl_cmd->add_option("--wall-cross", cyl_wall, "apply one generator s(p,q) by wall crossing");
  cyl_cmd->callback([&] {
    action = [&] {
      const auto w = cyl_in.word();
      auto window = growth::cylinder_from_row(w, cyl_depth);
      if (!cyl_wall.empty()) {
        const auto gw = cactus::CactusWord::parse(w.length(), cyl_wall);
        if (gw.gens.size() != 1) throw UsageError("--wall-cross takes a single generator");
        window = growth::wall_cross(gw.gens.front(), window);
      }
      if (g.ascii())
        std::cout << growth::render_ascii(window) << "\n";
      else
        std::cout << json_io::to_json(window).dump(2) << "\n";
      return kOk;
    };
  });

  // validate
  Input val_in;
  auto* val_cmd = app.add_subcommand("validate", "check a highest-weight word or cylinder window");
  val_in.attach(val_cmd);
  val_cmd->callback([&] {
    action = [&] {
      std::string kind = "word";
      if (val_in.demo.empty()) {
        const json j = val_in.read_json();
        if (j.is_object() && j.contains("rows")) {
          kind = "window";
          const std::string problem = growth::validate(json_io::window_from_json(j));
          if (!problem.empty()) throw Error(ErrorCode::InvalidStep, problem);
        } else {
          json_io::word_from_json(j);
        }
      } else {
        val_in.word();
      }
      if (g.ascii())
        std::cout << "valid " << kind << "\n";
      else
        std::cout << json{{"valid", true}, {"kind", kind}}.dump() << "\n";
      return kOk;
    };
  });

  // oracle
  std::string or_op, or_tableau;
  int or_i = 1;
  auto* or_cmd = app.add_subcommand("oracle", "classical tableau algorithms");
  or_cmd->add_option("op", or_op, "evacuate | promote | bk | dk")
      ->required()
      ->check(CLI::IsMember({"evacuate", "promote", "bk", "dk"}));
  or_cmd->add_option("--tableau", or_tableau, "tableau as \"124/35\" or a JSON array of rows")->required();
  or_cmd->add_option("--i", or_i, "index for bk and dk");
  or_cmd->callback([&] {
    action = [&] {
      json j;
      try {
        j = json::parse(or_tableau);
      } catch (const json::parse_error&) {
        j = or_tableau;
      }
      const auto t = json_io::tableau_from_json(j);
      if (or_op == "evacuate" || or_op == "promote" || or_op == "dk") {
        if (!oracles::is_standard(t)) throw Error(ErrorCode::BadParameter, t.to_string() + " is not standard");
      } else if (!oracles::is_semistandard(t)) {
        throw Error(ErrorCode::BadParameter, t.to_string() + " is not semistandard");
      }
      if (or_op == "evacuate") print_tableau(oracles::evacuation_oracle(t), g);
      if (or_op == "promote") print_tableau(oracles::promotion_oracle(t), g);
      if (or_op == "bk") print_tableau(oracles::bender_knuth(t, or_i), g);
      if (or_op == "dk") print_tableau(oracles::dual_knuth(t, or_i), g);
      return kOk;
    };
  });

  // hecke
  auto* hk_cmd = app.add_subcommand("hecke", "seminormal representations of the Hecke algebra");
  hk_cmd->require_subcommand(1);
  std::string hk_shape, hk_op = "tau";
  int hk_i = 1, hk_power = 2;
  auto* hk_check = hk_cmd->add_subcommand("check", "run every identity for one shape");
  hk_check->add_option("--shape", hk_shape, "partition such as 3,2,1")->required();
  hk_check->callback([&] {
    action = [&] {
      const auto results = hecke::check_shape(parse_shape(hk_shape));
      bool ok = true;
      json out = json::array();
      for (const auto& c : results) {
        ok = ok && c.ok;
        if (g.ascii()) std::cout << (c.ok ? "pass " : "FAIL ") << c.name << "\n";
        out.push_back({{"identity", c.name}, {"ok", c.ok}});
      }
      if (!g.ascii()) std::cout << json{{"shape", hk_shape}, {"ok", ok}, {"results", out}}.dump(2) << "\n";
      return ok ? kOk : kVerifyFailed;
    };
  });
  auto* hk_matrix = hk_cmd->add_subcommand("matrix", "print one exact matrix");
  hk_matrix->add_option("--shape", hk_shape, "partition such as 2,1")->required();
  hk_matrix->add_option("--op", hk_op, "u | t | tinv | tau | jm")->check(CLI::IsMember({"u", "t", "tinv", "tau", "jm"}));
  hk_matrix->add_option("--i", hk_i, "generator index");
  hk_matrix->add_option("--power", hk_power, "for jm: twice the exponent (-2, -1, 1, 2)");
  hk_matrix->callback([&] {
    action = [&] {
      const hecke::SeminormalRep rep(parse_shape(hk_shape));
      algebra::QMatrix m(0, 0);
      if (hk_op == "u") m = hecke::u_matrix(rep, hk_i);
      if (hk_op == "t") m = hecke::t_matrix(rep, hk_i);
      if (hk_op == "tinv") m = hecke::t_inverse_matrix(rep, hk_i);
      if (hk_op == "tau") m = hecke::tau_matrix(rep, hk_i);
      if (hk_op == "jm") m = hecke::jm_matrix(rep, hk_i, hk_power);
      if (g.ascii()) {
        for (const auto& cd : rep.basis()) std::cout << "# " << cd.tableau.to_string() << "\n";
        std::cout << m.to_string() << "\n";
      } else {
        json basis = json::array();
        for (const auto& cd : rep.basis()) basis.push_back(cd.tableau.to_string());
        std::cout << json{{"basis", basis}, {"matrix", json_io::to_json(m)}}.dump(2) << "\n";
      }
      return kOk;
    };
  });

  // verify
  std::string vf_suite;
  int vf_r = 0, vf_maxsize = 0, vf_samples = 0;
  bool vf_tiny = false;
  auto* vf_cmd = app.add_subcommand("verify", "run invariant suites");
  vf_cmd->add_option("suite", vf_suite, "cactus | hecke | oracle | crystal | wall | all")
      ->required()
      ->check(CLI::IsMember({"cactus", "hecke", "oracle", "crystal", "wall", "all"}));
  vf_cmd->add_option("--r", vf_r, "word length bound");
  vf_cmd->add_option("--maxsize", vf_maxsize, "box count bound");
  vf_cmd->add_option("--samples", vf_samples, "random words per family at length --r");
  vf_cmd->add_flag("--tiny", vf_tiny, "small bounds for smoke testing");
  vf_cmd->callback([&] {
    action = [&] {
      const int r = vf_r > 0 ? vf_r : vf_tiny ? 3 : 5;
      const int boxes = vf_maxsize > 0 ? vf_maxsize : vf_tiny ? 3 : 5;
      const bool all = vf_suite == "all";
      std::vector<verify::Report> reports;
      if (all || vf_suite == "cactus") {
        reports.push_back(verify::cactus_suite(verify::standard_families(), r));
        if (vf_samples > 0)
          reports.push_back(verify::cactus_sample_suite(verify::standard_families(), r, vf_samples, g.seed));
      }
      if (all || vf_suite == "hecke") reports.push_back(verify::hecke_suite(boxes, vf_tiny ? 2 : 6));
      if (all || vf_suite == "oracle") {
        reports.push_back(verify::oracle_suite(boxes));
        reports.push_back(vf_tiny ? verify::bender_knuth_suite({2, 1}, 3) : verify::bender_knuth_suite({4, 3, 2, 1}, 5));
      }
      if (all || vf_suite == "crystal") {
        reports.push_back(verify::crystal_suite(std::min(r, 5), vf_tiny ? 4 : 10, g.max_size));
        reports.push_back(verify::rectify_suite(std::min(r, 4), g.max_size));
      }
      if (all || vf_suite == "wall") reports.push_back(verify::wall_cross_suite(r));
      return report(reports, g);
    };
  });

  // demo
  std::string demo_name;
  auto* demo_cmd = app.add_subcommand("demo", "reproduce a worked example and diff it against stored values");
  demo_cmd->add_option("name", demo_name, "bk | ex-sp | fig-cat | gl-cylinder")
      ->required()
      ->check(CLI::IsMember(demos::names()));
  demo_cmd->callback([&] {
    action = [&] {
      const auto res = demos::run(demo_name);
      if (g.ascii()) {
        std::cout << res.rendering << "\n";
        for (const auto& it : res.items)
          std::cout << (it.ok ? "ok   " : "DIFF ") << it.name << (it.detail.empty() ? "" : ": " + it.detail) << "\n";
        std::cout << res.passed() << "/" << res.items.size() << " items match\n";
      } else {
        std::cout << res.to_json().dump(2) << "\n";
      }
      return res.ok() ? kOk : kVerifyFailed;
    };
  });

  // crystal
  auto* cr_cmd = app.add_subcommand("crystal", "minuscule crystals and tensor powers");
  cr_cmd->require_subcommand(1);
  std::string cr_family = "GL", cr_kind = "vector";
  int cr_rank = 2, cr_k = 1, cr_r = 1;
  auto crystal_opts = [&](CLI::App* c) {
    c->add_option("--family", cr_family, "GL | SL2 | Sp");
    c->add_option("--rank", cr_rank, "rank n of GL(n) or Sp(2n)");
    c->add_option("--kind", cr_kind, "vector | exterior")->check(CLI::IsMember({"vector", "exterior"}));
    c->add_option("--k", cr_k, "exterior power degree");
    c->add_option("--r", cr_r, "tensor power");
  };
  auto base_crystal = [&] {
    const auto ctx = parse_context(cr_family, cr_rank);
    crystal::Minuscule which = ctx.family == weights::Family::SL2 ? crystal::Minuscule::sl2()
                               : cr_kind == "exterior"            ? crystal::Minuscule::exterior(cr_k)
                                                                  : crystal::Minuscule::vector();
    return crystal::build_minuscule(ctx, which);
  };
  auto* cr_dump = cr_cmd->add_subcommand("dump", "elements, weights and raising edges");
  crystal_opts(cr_dump);
  cr_dump->callback([&] {
    action = [&] {
      if (cr_r < 1) throw Error(ErrorCode::BadParameter, "--r must be positive");
      const crystal::TensorPower tp(base_crystal(), cr_r, g.max_size);
      const auto& c = tp.crystal();
      if (g.ascii()) {
        for (crystal::Element x = 0; x < c.size(); ++x) {
          std::cout << c.label(x) << " " << c.weight(x);
          for (int i = 1; i <= c.num_indices(); ++i)
            if (c.e(i, x) != crystal::kNone) std::cout << "  e" << i << "->" << c.label(c.e(i, x));
          std::cout << "\n";
        }
      } else {
        std::cout << json_io::to_json(c).dump(2) << "\n";
      }
      return kOk;
    };
  });
  auto* cr_dec = cr_cmd->add_subcommand("decompose", "highest weights of the r-th tensor power");
  crystal_opts(cr_dec);
  cr_dec->callback([&] {
    action = [&] {
      const auto census = crystal::decompose(base_crystal(), cr_r, g.max_size);
      json out = json::array();
      for (const auto& [w, c] : census) {
        if (g.ascii())
          std::cout << w << "  multiplicity " << c.count << "  dimension " << c.component_size << "\n";
        out.push_back({{"highest_weight", w.coords}, {"count", c.count}, {"component_size", c.component_size}});
      }
      if (!g.ascii()) std::cout << out.dump(2) << "\n";
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  return action();
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const coboundary::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == coboundary::ErrorCode::ParseError ? kUsage : kDomain;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  }
}
