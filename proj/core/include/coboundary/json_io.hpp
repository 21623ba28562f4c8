#pragma once

#include <nlohmann/json.hpp>

#include "coboundary/algebra.hpp"
#include "coboundary/cactus.hpp"
#include "coboundary/crystal.hpp"
#include "coboundary/growth.hpp"
#include "coboundary/oracles.hpp"

// JSON encodings. Every *_from_json throws Error(ParseError) on malformed input.
namespace coboundary::json_io {

using json = nlohmann::json;

json to_json(const weights::CartanContext& ctx);
weights::CartanContext context_from_json(const json& j);

/// {"family":"GL","rank":3,"coords":[2,1,0]}
json to_json(const weights::Weight& w);
weights::Weight weight_from_json(const json& j);

/// {"context":{...},"steps":["vector",...],"corners":[[...],...]}. "steps"
/// may be omitted (all vector). Corners are padded with zeros to the rank.
json to_json(const localrules::HighestWeightWord& w);
localrules::HighestWeightWord word_from_json(const json& j);

json to_json(const oracles::Tableau& t);
oracles::Tableau tableau_from_json(const json& j);

json to_json(const oracles::Matching& m);
oracles::Matching matching_from_json(const json& j, int r);

/// [[p,q],...]
json to_json(const cactus::CactusWord& w);
cactus::CactusWord cactus_from_json(const json& j, int r);

json to_json(const growth::CylWindow& c);
/// Same fields as to_json; "column" may be omitted (all vector), and
/// "lambda" defaults to the last corner of the first row.
growth::CylWindow window_from_json(const json& j);
json to_json(const growth::TriDiagram& d);
json to_json(const growth::RectDiagram& d);

/// Rows of entry strings in the Laurent grammar.
json to_json(const algebra::QMatrix& m);

/// {"context":..., "elements":[{"label":..,"weight":[..],"e":[target or null,...]}]}
json to_json(const crystal::Crystal& c);

}  // namespace coboundary::json_io
