#include "json_io.hpp"

#include <cstdint>
#include <limits>

#include "tropbip/errors.hpp"

namespace tropbip::io {

namespace {

std::vector<Rat> rat_list(const json& j, const char* name) {
  if (!j.contains(name) || !j.at(name).is_array()) {
    throw StructuralError(std::string("parameter point needs an array \"") + name + "\"");
  }
  std::vector<Rat> out;
  for (const auto& v : j.at(name)) out.push_back(rat_from_json(v));
  return out;
}

json rat_array(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_json(r));
  return a;
}

std::string color_row(const Diagram& d, std::size_t p) {
  std::string s;
  for (std::size_t q = 0; q < d.col_order.size(); ++q) s += d.at(p, q) == Color::White ? 'W' : 'B';
  return s;
}

json labels(const std::vector<RegionLabel>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

}  // namespace

json to_json(const Rat& r) {
  if (r.is_integer()) {
    const mpz_class& z = r.raw().get_num();
    if (mpz_fits_slong_p(z.get_mpz_t())) return json(static_cast<std::int64_t>(z.get_si()));
  }
  return json(r.str());
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rat(j.get<std::uint64_t>());
    return Rat(j.get<std::int64_t>());
  }
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw StructuralError("rationals must be integers or \"p/q\" strings, got " + j.dump());
}

json to_json(const RatMatrix& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(to_json(g(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"m", g.rows()}, {"n", g.cols()}, {"entries", std::move(rows)}};
}

RatMatrix matrix_from_json(const json& j) {
  const json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) throw StructuralError("matrix needs \"entries\"");
    rows = &j.at("entries");
  }
  if (!rows->is_array() || rows->empty() || !rows->front().is_array() ||
      rows->front().empty()) {
    throw StructuralError("matrix entries must be a non-empty array of non-empty rows");
  }
  const std::size_t m = rows->size(), n = rows->front().size();
  std::vector<Rat> entries;
  for (const auto& row : *rows) {
    if (!row.is_array() || row.size() != n) throw StructuralError("matrix rows differ in length");
    for (const auto& v : row) entries.push_back(rat_from_json(v));
  }
  if (j.is_object()) {
    if ((j.contains("m") && j.at("m").get<std::size_t>() != m) ||
        (j.contains("n") && j.at("n").get<std::size_t>() != n)) {
      throw StructuralError("matrix shape does not match its entries");
    }
  }
  return RatMatrix(m, n, std::move(entries));
}

json to_json(const ParamPoint& p) {
  return json{{"a", rat_array(p.a)}, {"A", rat_array(p.A)}, {"b", rat_array(p.b)},
              {"B", rat_array(p.B)}};
}

ParamPoint params_from_json(const json& j) {
  if (!j.is_object()) throw StructuralError("parameter point must be a JSON object");
  ParamPoint p{rat_list(j, "a"), rat_list(j, "A"), rat_list(j, "b"), rat_list(j, "B")};
  p.validate();
  return p;
}

json to_json(const RectRelation& r) {
  return json{{"i1", r.i1}, {"i2", r.i2}, {"j1", r.j1}, {"j2", r.j2},
              {"kind", r.kind == RelKind::Eq ? "eq" : "gt"}, {"text", r.str()}};
}

json to_json(const std::vector<RectRelation>& rels) {
  json a = json::array();
  for (const auto& r : rels) a.push_back(to_json(r));
  return a;
}

json to_json(const Diagram& d) {
  json colors = json::array();
  for (std::size_t p = 0; p < d.row_order.size(); ++p) colors.push_back(color_row(d, p));
  return json{{"m", d.m}, {"n", d.n}, {"rowOrder", d.row_order}, {"colOrder", d.col_order},
              {"colors", std::move(colors)}, {"path", d.path}};
}

json to_json(const Cell& c) {
  return json{{"key", c.key().str()},
              {"sizeClass", to_string(c.size_class)},
              {"relations", to_json(c.relations)},
              {"representatives", labels(c.representatives)}};
}

json to_json(const Location& loc) {
  json containers = json::array();
  for (const auto& c : loc.closed_containers) containers.push_back(to_json(c));
  return json{{"interiorOf", loc.interior_of ? to_json(*loc.interior_of) : json(nullptr)},
              {"closedContainers", std::move(containers)}};
}

json to_json(const Decision& d) {
  json out{{"answer", d.yes ? "Yes" : "No"}};
  if (d.witness_region) out["witnessRegion"] = d.witness_region->str();
  if (d.preimage) out["preimage"] = to_json(*d.preimage);
  return out;
}

json to_json(const FiberDescription& f) {
  json apex = json::object();
  for (const auto& [ref, v] : f.apex) apex[ref.str()] = to_json(v);
  json regions = json::array();
  for (const auto& r : f.regions) {
    json free = json::array();
    for (const auto& fp : r.free) {
      free.push_back(json{{"param", fp.param.str()}, {"greaterThan", to_json(fp.lower_bound)}});
    }
    regions.push_back(json{{"label", r.label.str()},
                           {"sizeClass", to_string(r.size_class)},
                           {"northWest", r.corner_nw == Color::White ? "W" : "B"},
                           {"southEast", r.corner_se == Color::White ? "W" : "B"},
                           {"free", std::move(free)}});
  }
  return json{{"m", f.m},
              {"n", f.n},
              {"degenerate", f.degenerate},
              {"smallRegion", f.small_region.str()},
              {"gauge",
               json{{f.pinned[0].str(), to_json(f.pin_values[0])},
                    {f.pinned[1].str(), to_json(f.pin_values[1])}}},
              {"apex", std::move(apex)},
              {"apexPoint", to_json(f.apex_point)},
              {"regions", std::move(regions)},
              {"freeDOF", f.free_dof}};
}

json to_json(const SubdivisionReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item{{"name", c.name}, {"passed", c.passed}, {"examined", c.examined}};
    if (!c.counterexample.empty()) item["counterexample"] = c.counterexample;
    checks.push_back(std::move(item));
  }
  return json{{"m", r.m},
              {"n", r.n},
              {"samples", r.samples},
              {"seed", r.seed},
              {"cells", json{{"small", r.small_cells}, {"medium", r.medium_cells},
                             {"large", r.large_cells}}},
              {"checks", std::move(checks)},
              {"passed", r.passed()}};
}

json to_json(const CountReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json values = json::object();
    for (const auto& v : e.values) values[v.source] = to_json(v.value);
    json item{{"quantity", e.quantity}, {"m", e.m}, {"n", e.n}};
    if (e.k >= 0) item["k"] = e.k;
    item["values"] = std::move(values);
    entries.push_back(std::move(item));
  }
  json disc = json::array();
  for (const auto& d : r.discrepancies) {
    json item{{"quantity", d.quantity}, {"m", d.m}, {"n", d.n}, {"detail", d.detail}};
    if (d.k >= 0) item["k"] = d.k;
    disc.push_back(std::move(item));
  }
  return json{{"mMax", r.m_max}, {"nMax", r.n_max}, {"entries", std::move(entries)},
              {"discrepancies", std::move(disc)}, {"notes", r.notes}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw StructuralError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace tropbip::io
