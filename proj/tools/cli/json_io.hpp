#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "tropbip/cells.hpp"
#include "tropbip/counts.hpp"
#include "tropbip/diagram.hpp"
#include "tropbip/morphism.hpp"
#include "tropbip/subdivision.hpp"

namespace tropbip::io {

using json = nlohmann::ordered_json;

// Rationals are JSON integers when they fit in 64 bits and are whole, and
// "p/q" (or "p") strings otherwise. Floats are rejected on input.
json to_json(const Rat& r);
Rat rat_from_json(const json& j);

// {"m": int, "n": int, "entries": [[...], ...]}. Input may also be a bare
// array of rows.
json to_json(const RatMatrix& g);
RatMatrix matrix_from_json(const json& j);

// {"a": [...], "A": [...], "b": [...], "B": [...]}
json to_json(const ParamPoint& p);
ParamPoint params_from_json(const json& j);

json to_json(const RectRelation& r);
json to_json(const std::vector<RectRelation>& rels);
json to_json(const Diagram& d);
json to_json(const Cell& c);
json to_json(const Location& loc);
json to_json(const Decision& d);
json to_json(const FiberDescription& f);
json to_json(const SubdivisionReport& r);
json to_json(const CountReport& r);

// Parses text as JSON; malformed input raises StructuralError.
json parse_json(const std::string& text);

}  // namespace tropbip::io
