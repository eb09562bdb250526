#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "tropbip/arrangement.hpp"
#include "tropbip/cells.hpp"
#include "tropbip/counts.hpp"
#include "tropbip/diagram.hpp"
#include "tropbip/errors.hpp"
#include "tropbip/fiber.hpp"
#include "tropbip/morphism.hpp"
#include "tropbip/random.hpp"
#include "tropbip/subdivision.hpp"

namespace tropbip::cli {

namespace {

using io::json;

struct Config {
  std::string format = "text";
  unsigned jobs = 1;
  std::optional<std::uint64_t> budget;
  int m = 0;
  int n = 0;
  std::string input;
  std::string matrix;
  std::string label;
  std::string x;
  std::string y;
  std::string version = "2";
  bool certificate = false;
  std::string pin;
  std::string what;
  std::string method;
  bool stream = false;
  std::string suite;
  std::size_t samples = 500;
  std::uint64_t seed = 1;

  bool as_json() const { return format == "json"; }
  Budget make_budget() const {
    Budget b = Budget::from_env();
    if (budget) b.max_labels = *budget;
    return b;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Inline JSON when the argument starts with '{' or '[', a file path otherwise.
json load_payload(const std::string& source, const char* what) {
  if (source.empty()) throw StructuralError(std::string("missing ") + what);
  const auto first = source.find_first_not_of(" \t\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
    return io::parse_json(source);
  }
  return io::parse_json(read_file(source));
}

MatrixPoint load_matrix(const Config& c) { return io::matrix_from_json(load_payload(c.matrix, "--matrix")); }

ParamPoint load_params(const Config& c) {
  const json j = load_payload(c.input, "--input");
  if (j.is_object() && j.contains("preimage")) return io::params_from_json(j.at("preimage"));
  return io::params_from_json(j);
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void print_matrix(std::ostream& out, const MatrixPoint& g) {
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) out << (j ? " " : "") << g(i, j);
    out << '\n';
  }
}

void print_relations(std::ostream& out, const std::vector<RectRelation>& rels) {
  for (const auto& r : rels) out << r << '\n';
}

std::string join(const std::vector<Rat>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + v[k].str();
  return s;
}

void print_params(std::ostream& out, const ParamPoint& p) {
  out << "a: " << join(p.a) << "\nA: " << join(p.A) << "\nb: " << join(p.b)
      << "\nB: " << join(p.B) << '\n';
}

json check_json(const CheckResult& c) {
  json j{{"name", c.name}, {"passed", c.passed}, {"examined", c.examined}};
  if (!c.counterexample.empty()) j["counterexample"] = c.counterexample;
  return j;
}

void print_checks(std::ostream& out, const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.examined << " examined)";
    if (!c.counterexample.empty()) out << ": " << c.counterexample;
    out << '\n';
  }
}

int cmd_eval(const Config& c, std::ostream& out) {
  const MatrixPoint g = eval_g(load_params(c));
  if (c.as_json()) print(out, io::to_json(g));
  else print_matrix(out, g);
  return kExitOk;
}

XYPoint load_xy(const Config& c) {
  return XYPoint{parse_rat_list(c.x), parse_rat_list(c.y)};
}

int cmd_region_of(const Config& c, std::ostream& out) {
  const RegionLabel r = region_of_point(load_xy(c));
  if (c.as_json()) print(out, json{{"region", r.str()}});
  else out << r << '\n';
  return kExitOk;
}

int cmd_face_of(const Config& c, std::ostream& out) {
  const FaceLabel f = face_of_point(load_xy(c));
  if (c.as_json()) print(out, json{{"face", f.str()}, {"dimension", face_dimension(f)}});
  else out << f << "\ndimension " << face_dimension(f) << '\n';
  return kExitOk;
}

int cmd_diagram(const Config& c, std::ostream& out) {
  const Diagram d = diagram_of(RegionLabel::parse(c.label));
  if (c.as_json()) print(out, io::to_json(d));
  else out << render(d);
  return kExitOk;
}

int cmd_relations(const Config& c, std::ostream& out) {
  const RegionLabel r = RegionLabel::parse(c.label);
  const auto v1 = relations_v1(r);
  const auto v2 = relations_v2(diagram_of(r));
  if (c.as_json()) {
    json j{{"region", r.str()}};
    if (c.version != "2") j["version1"] = io::to_json(v1);
    if (c.version != "1") j["version2"] = io::to_json(v2);
    if (c.version == "both") j["equal"] = canonical_set(v1) == canonical_set(v2);
    print(out, j);
  } else if (c.version == "both") {
    out << "version 1:\n";
    print_relations(out, v1);
    out << "version 2:\n";
    print_relations(out, v2);
    out << "equal: " << (canonical_set(v1) == canonical_set(v2) ? "yes" : "no") << '\n';
  } else {
    print_relations(out, c.version == "1" ? v1 : v2);
  }
  return kExitOk;
}

int cmd_dim(const Config& c, std::ostream& out) {
  const RegionLabel r = RegionLabel::parse(c.label);
  if (c.as_json()) print(out, json{{"region", r.str()}, {"dimension", image_dimension(r)}});
  else out << image_dimension(r) << '\n';
  return kExitOk;
}

int cmd_class(const Config& c, std::ostream& out) {
  const RegionLabel r = RegionLabel::parse(c.label);
  const std::string cls = to_string(cell_size_class(r));
  if (c.as_json()) print(out, json{{"region", r.str()}, {"sizeClass", cls}});
  else out << cls << '\n';
  return kExitOk;
}

CellTable build_table(const Config& c, int m, int n) {
  return CellTable::build(RegionAtlas::build(m, n, c.make_budget(), c.jobs), c.jobs);
}

int cmd_locate(const Config& c, std::ostream& out) {
  const MatrixPoint g = load_matrix(c);
  const CellTable table = build_table(c, static_cast<int>(g.rows()), static_cast<int>(g.cols()));
  const Location loc = locate_cells(g, table);
  if (c.as_json()) {
    print(out, io::to_json(loc));
    return kExitOk;
  }
  if (loc.interior_of) {
    out << "interior of small cell " << loc.interior_of->key() << '\n';
    print_relations(out, loc.interior_of->relations);
  } else {
    out << "interior of no small cell\n";
  }
  out << "closed containers: " << loc.closed_containers.size() << '\n';
  for (const auto& cell : loc.closed_containers) {
    out << "  " << to_string(cell.size_class) << ' ' << cell.key() << '\n';
  }
  return kExitOk;
}

int cmd_decide(const Config& c, std::ostream& out) {
  const MatrixPoint g = load_matrix(c);
  const RegionAtlas atlas = RegionAtlas::build(static_cast<int>(g.rows()),
                                               static_cast<int>(g.cols()), c.make_budget(), c.jobs);
  const Decision d = barvinok2_decide(g, atlas);
  if (c.as_json() || c.certificate) {
    print(out, io::to_json(d));
  } else {
    out << (d.yes ? "Yes" : "No") << '\n';
    if (d.witness_region) out << "region " << *d.witness_region << '\n';
  }
  return d.yes ? kExitOk : kExitNo;
}

int cmd_preimage(const Config& c, std::ostream& out) {
  const ParamPoint p = preimage_in_region(load_matrix(c), RegionLabel::parse(c.label));
  if (c.as_json()) print(out, io::to_json(p));
  else print_params(out, p);
  return kExitOk;
}

std::pair<Rat, Rat> parse_pins(const std::string& text) {
  Rat pin_A(0), pin_b(0);
  if (text.empty()) return {pin_A, pin_b};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw StructuralError("pins look like Am=V,bn=V");
    const std::string key = item.substr(0, eq);
    const Rat value = Rat::parse(item.substr(eq + 1));
    if (key == "Am") pin_A = value;
    else if (key == "bn") pin_b = value;
    else throw StructuralError("unknown pin '" + key + "', expected Am or bn");
  }
  return {pin_A, pin_b};
}

int cmd_fiber(const Config& c, std::ostream& out) {
  const MatrixPoint g = load_matrix(c);
  const auto [pin_A, pin_b] = parse_pins(c.pin);
  const CellTable table = build_table(c, static_cast<int>(g.rows()), static_cast<int>(g.cols()));
  const FiberDescription f = generic_fiber(g, table, pin_A, pin_b);
  if (c.as_json()) {
    print(out, io::to_json(f));
    return kExitOk;
  }
  out << "small region " << f.small_region << (f.degenerate ? " (degenerate shape)" : "") << '\n';
  out << "gauge " << f.pinned[0].str() << " = " << f.pin_values[0] << ", " << f.pinned[1].str()
      << " = " << f.pin_values[1] << '\n';
  out << "apex";
  for (const auto& [ref, v] : f.apex) out << ' ' << ref.str() << " = " << v;
  out << '\n';
  for (const auto& r : f.regions) {
    out << "region " << r.label << " [" << to_string(r.size_class) << "]: "
        << r.free[0].param.str() << " > " << r.free[0].lower_bound << ", "
        << r.free[1].param.str() << " > " << r.free[1].lower_bound << '\n';
  }
  for (const auto& s : f.free_dof) out << "global shift: " << s << '\n';
  return kExitOk;
}

int cmd_enumerate(const Config& c, std::ostream& out) {
  const Budget budget = c.make_budget();
  budget.check(c.m, c.n);
  if (c.what == "regions" || c.what == "faces") {
    const bool faces = c.what == "faces";
    if (c.stream || !c.as_json()) {
      if (faces) for_each_face(c.m, c.n, [&](const FaceLabel& f) { out << f << '\n'; });
      else for_each_region(c.m, c.n, [&](const RegionLabel& r) { out << r << '\n'; });
      return kExitOk;
    }
    json items = json::array();
    if (faces) {
      for_each_face(c.m, c.n, [&](const FaceLabel& f) {
        items.push_back(json{{"face", f.str()}, {"dimension", face_dimension(f)}});
      });
    } else {
      for_each_region(c.m, c.n, [&](const RegionLabel& r) { items.push_back(r.str()); });
    }
    print(out, json{{"what", c.what}, {"m", c.m}, {"n", c.n}, {"count", items.size()},
                    {"items", std::move(items)}});
    return kExitOk;
  }
  const SizeClass cls = c.what == "small-cells" ? SizeClass::Small : SizeClass::Large;
  const CellTable table = build_table(c, c.m, c.n);
  const auto& cells = table.cells(cls);
  if (c.stream || !c.as_json()) {
    for (const auto& cell : cells) out << cell.key() << '\n';
    return kExitOk;
  }
  json items = json::array();
  for (const auto& cell : cells) items.push_back(io::to_json(cell));
  print(out, json{{"what", c.what}, {"m", c.m}, {"n", c.n}, {"count", cells.size()},
                  {"items", std::move(items)}});
  return kExitOk;
}

int cmd_count(const Config& c, std::ostream& out) {
  const int m = c.m, n = c.n;
  auto unsupported = [&] {
    throw StructuralError("method '" + c.method + "' is not available for '" + c.what + "'");
  };
  if (c.what == "faces") {
    std::vector<Rat> by_dim;
    if (c.method == "brute") {
      c.make_budget().check(m, n);
      for (std::size_t v : face_tally(m, n)) by_dim.push_back(Rat(static_cast<unsigned long>(v)));
    } else if (c.method == "egf") {
      const Egf3 f = face_egf(m + n, m, n);
      for (int k = 0; k <= m + n; ++k) by_dim.push_back(f.coeff(k, m, n));
    } else {
      unsupported();
    }
    if (c.as_json()) {
      json arr = json::array();
      for (const auto& v : by_dim) arr.push_back(io::to_json(v));
      print(out, json{{"what", "faces"}, {"method", c.method}, {"m", m}, {"n", n},
                      {"byDimension", std::move(arr)}});
    } else {
      for (std::size_t k = 0; k < by_dim.size(); ++k) out << k << ' ' << by_dim[k] << '\n';
    }
    return kExitOk;
  }

  Rat value;
  json extra = json::object();
  if (c.what == "regions") {
    if (c.method == "brute") value = Rat(mpq_class(count_acyclic_bruteforce(m, n)));
    else if (c.method == "egf") value = region_egf(m, n).coeff(0, m, n);
    else if (c.method == "formula") value = Rat(mpq_class(acyclic_orientation_count(m, n)));
    else unsupported();
  } else if (c.what == "small") {
    if (c.method == "formula") {
      value = Rat(mpq_class(small_formula(m, n)));
    } else if (c.method == "brute") {
      const CellCount cc = count_cells(build_table(c, m, n), SizeClass::Small);
      value = Rat(static_cast<unsigned long>(cc.distinct_images));
      extra["positiveRegions"] = cc.positive_regions;
    } else {
      unsupported();
    }
  } else if (c.what == "large") {
    if (c.method == "egf") {
      value = large_egf(m, n).coeff(0, m, n);
    } else if (c.method == "brute") {
      const CellCount cc = count_cells(build_table(c, m, n), SizeClass::Large);
      value = Rat(static_cast<unsigned long>(cc.positive_regions));
      extra["distinctImages"] = cc.distinct_images;
    } else {
      unsupported();
    }
  } else {
    throw StructuralError("unknown count target '" + c.what + "'");
  }
  if (c.as_json()) {
    json j{{"what", c.what}, {"method", c.method}, {"m", m}, {"n", n}, {"value", io::to_json(value)}};
    for (auto& [k, v] : extra.items()) j[k] = v;
    print(out, j);
  } else {
    out << value << '\n';
  }
  return kExitOk;
}

std::vector<CheckResult> relations_suite(const Config& c) {
  c.make_budget().check(c.m, c.n);
  CheckResult same{"version 1 equals version 2", true, 0, {}};
  for_each_region(c.m, c.n, [&](const RegionLabel& r) {
    ++same.examined;
    if (same.passed && canonical_set(relations_v1(r)) != canonical_set(relations_v2(diagram_of(r)))) {
      same.passed = false;
      same.counterexample = "region " + r.str();
    }
  });
  CheckResult sampled{"sampled image points satisfy their region's relations", true, c.samples, {}};
  Rng rng(c.seed);
  for (std::size_t s = 0; s < c.samples && c.m > 0 && c.n > 0; ++s) {
    const ParamPoint p = random_generic_param_point(rng, c.m, c.n);
    const RegionLabel r = region_of_point(p.xy());
    if (!member(eval_g(p), r, MemberMode::Open)) {
      sampled.passed = false;
      sampled.counterexample = "sample " + std::to_string(s) + " in region " + r.str();
      break;
    }
  }
  return {same, sampled};
}

std::vector<CheckResult> dims_suite(const Config& c) {
  c.make_budget().check(c.m, c.n);
  CheckResult rank{"image dimension equals linearization rank", true, 0, {}};
  CheckResult extremal{"maximal dimension iff unique source and sink", true, 0, {}};
  const std::size_t top = c.m > 0 && c.n > 0 ? static_cast<std::size_t>(2 * c.m + 2 * c.n - 4) : 0;
  for_each_region(c.m, c.n, [&](const RegionLabel& r) {
    ++rank.examined;
    const std::size_t dim = image_dimension(r);
    if (rank.passed && dim != linearization_rank(r)) {
      rank.passed = false;
      rank.counterexample = "region " + r.str();
    }
    if (c.m < 2 || c.n < 2) return;
    ++extremal.examined;
    const Orientation o = orientation_of(r);
    int sources = 0, sinks = 0;
    for (int i = 1; i <= c.m; ++i) {
      bool out_all = true, in_all = true;
      for (int j = 1; j <= c.n; ++j) {
        out_all = out_all && o.toward_col(i, j);
        in_all = in_all && !o.toward_col(i, j);
      }
      sources += out_all;
      sinks += in_all;
    }
    for (int j = 1; j <= c.n; ++j) {
      bool out_all = true, in_all = true;
      for (int i = 1; i <= c.m; ++i) {
        out_all = out_all && !o.toward_col(i, j);
        in_all = in_all && o.toward_col(i, j);
      }
      sources += out_all;
      sinks += in_all;
    }
    if (extremal.passed && (dim == top) != (sources == 1 && sinks == 1)) {
      extremal.passed = false;
      extremal.counterexample = "region " + r.str();
    }
  });
  return {rank, extremal};
}

int cmd_verify(const Config& c, std::ostream& out) {
  std::vector<CheckResult> checks;
  json payload;
  if (c.suite == "relations") {
    checks = relations_suite(c);
  } else if (c.suite == "dims") {
    checks = dims_suite(c);
  } else if (c.suite == "subdivisions") {
    SubdivisionOptions o;
    o.samples = c.samples;
    o.seed = c.seed;
    o.jobs = c.jobs;
    o.budget = c.make_budget();
    const SubdivisionReport r = verify_subdivision(c.m, c.n, o);
    checks = r.checks;
    payload = io::to_json(r);
  } else if (c.suite == "counts") {
    CrosscheckOptions o;
    o.jobs = c.jobs;
    o.budget = c.make_budget();
    const CountReport r = crosscheck(c.m, c.n, o);
    CheckResult agree{"all sources agree", r.discrepancies.empty(), r.entries.size(), {}};
    if (!r.discrepancies.empty()) {
      const auto& d = r.discrepancies.front();
      agree.counterexample = d.quantity + " (" + std::to_string(d.m) + "," +
                             std::to_string(d.n) + "): " + d.detail;
    }
    checks = {agree};
    payload = io::to_json(r);
  } else {
    throw StructuralError("unknown suite '" + c.suite + "'");
  }
  const bool passed =
      std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.passed; });
  if (c.as_json()) {
    if (payload.is_null()) {
      json arr = json::array();
      for (const auto& r : checks) arr.push_back(check_json(r));
      payload = json{{"suite", c.suite}, {"m", c.m}, {"n", c.n}, {"samples", c.samples},
                     {"seed", c.seed}, {"checks", std::move(arr)}, {"passed", passed}};
    }
    print(out, payload);
  } else {
    print_checks(out, checks);
  }
  return passed ? kExitOk : kExitNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Tropical rank-two morphism: regions, cells, fibers and counts", "tropbip"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--jobs", c.jobs, "Worker threads for region scans and verification")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--budget", c.budget, "Maximum number of region labels to enumerate");

  auto shape = [&](CLI::App* s, bool required) {
    auto* m = s->add_option("--m", c.m, "Number of rows")->check(CLI::NonNegativeNumber);
    auto* n = s->add_option("--n", c.n, "Number of columns")->check(CLI::NonNegativeNumber);
    if (required) {
      m->required();
      n->required();
    }
  };

  auto* eval = app.add_subcommand("eval", "Evaluate g at a parameter point");
  eval->add_option("--input", c.input, "Parameter point JSON (file or inline)")->required();

  auto* region_of = app.add_subcommand("region-of", "Region containing a point (x, y)");
  region_of->add_option("--x", c.x, "Comma-separated rationals")->required();
  region_of->add_option("--y", c.y, "Comma-separated rationals")->required();

  auto* face_of = app.add_subcommand("face-of", "Face containing a point (x, y)");
  face_of->add_option("--x", c.x, "Comma-separated rationals")->required();
  face_of->add_option("--y", c.y, "Comma-separated rationals")->required();

  auto* diagram = app.add_subcommand("diagram", "Diagram of a region");
  diagram->add_option("--label", c.label, "Region label")->required();

  auto* relations = app.add_subcommand("relations", "Rectangle relations of a region");
  relations->add_option("--label", c.label, "Region label")->required();
  relations->add_option("--version", c.version, "1, 2 or both")
      ->check(CLI::IsMember({"1", "2", "both"}))
      ->capture_default_str();

  auto* dim = app.add_subcommand("dim", "Dimension of the image of a region");
  dim->add_option("--label", c.label, "Region label")->required();

  auto* cls = app.add_subcommand("class", "Size class of a region's cell");
  cls->add_option("--label", c.label, "Region label")->required();

  auto* locate = app.add_subcommand("locate", "Maximum-dimensional cells containing a matrix");
  locate->add_option("--matrix", c.matrix, "Matrix JSON (file or inline)")->required();

  auto* decide = app.add_subcommand("decide", "Decide Barvinok rank at most 2");
  decide->add_option("--matrix", c.matrix, "Matrix JSON (file or inline)")->required();
  decide->add_flag("--certificate", c.certificate, "Emit the decision with its preimage as JSON");

  auto* preimage = app.add_subcommand("preimage", "Preimage of a matrix inside a region");
  preimage->add_option("--matrix", c.matrix, "Matrix JSON (file or inline)")->required();
  preimage->add_option("--label", c.label, "Region label")->required();

  auto* fiber = app.add_subcommand("fiber", "Fiber of a generic image point");
  fiber->add_option("--matrix", c.matrix, "Matrix JSON (file or inline)")->required();
  fiber->add_option("--pin", c.pin, "Gauge pins, e.g. Am=0,bn=0");

  auto* enumerate = app.add_subcommand("enumerate", "List regions, faces or cells");
  enumerate->add_option("--what", c.what, "regions, faces, small-cells or large-cells")
      ->required()
      ->check(CLI::IsMember({"regions", "faces", "small-cells", "large-cells"}));
  enumerate->add_flag("--stream", c.stream, "One item per line while enumerating");
  shape(enumerate, true);

  auto* count = app.add_subcommand("count", "Count faces, regions or cells");
  count->add_option("--what", c.what, "regions, faces, small or large")
      ->required()
      ->check(CLI::IsMember({"regions", "faces", "small", "large"}));
  count->add_option("--method", c.method, "brute, egf or formula")
      ->required()
      ->check(CLI::IsMember({"brute", "egf", "formula"}));
  shape(count, true);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", c.suite, "relations, dims, subdivisions or counts")
      ->required()
      ->check(CLI::IsMember({"relations", "dims", "subdivisions", "counts"}));
  verify->add_option("--samples", c.samples, "Random samples")->capture_default_str();
  verify->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  shape(verify, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(c, out);
    if (region_of->parsed()) return cmd_region_of(c, out);
    if (face_of->parsed()) return cmd_face_of(c, out);
    if (diagram->parsed()) return cmd_diagram(c, out);
    if (relations->parsed()) return cmd_relations(c, out);
    if (dim->parsed()) return cmd_dim(c, out);
    if (cls->parsed()) return cmd_class(c, out);
    if (locate->parsed()) return cmd_locate(c, out);
    if (decide->parsed()) return cmd_decide(c, out);
    if (preimage->parsed()) return cmd_preimage(c, out);
    if (fiber->parsed()) return cmd_fiber(c, out);
    if (enumerate->parsed()) return cmd_enumerate(c, out);
    if (count->parsed()) return cmd_count(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tropbip::cli
