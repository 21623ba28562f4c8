#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coboundary/localrules.hpp"

// Reproductions of the worked examples stored under fixtures/.
namespace coboundary::demos {

struct Item {
  std::string name;
  bool ok;
  std::string detail;  // got/want on mismatch
};

struct DemoResult {
  std::string name;
  std::vector<Item> items;
  std::string rendering;

  bool ok() const;
  std::size_t passed() const;
  nlohmann::json to_json() const;
};

DemoResult bender_knuth();
DemoResult symplectic_cylinder();
DemoResult cactus_graph();
DemoResult gl_cylinder();

/// Demo names accepted by run().
std::vector<std::string> names();
/// Throws Error(BadParameter) for unknown names.
DemoResult run(const std::string& name);

/// Input words named after fixtures: "ex-sp" (the stated start word),
/// "ex-sp-row1" (first displayed window row), "gl-cylinder" (its first row),
/// "fig-cat-A" .. "fig-cat-E".
std::optional<localrules::HighestWeightWord> input_word(const std::string& name);

}  // namespace coboundary::demos
