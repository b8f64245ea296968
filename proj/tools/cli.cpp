#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "cayley/aut_search.hpp"
#include "cayley/classify.hpp"
#include "cayley/constructors.hpp"
#include "cayley/error.hpp"
#include "cayley/group_spec.hpp"
#include "cayley/presentation.hpp"
#include "cayley/rigidity.hpp"
#include "cayley/suites.hpp"

namespace cayley::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  const RunConfig& cfg;
  std::ostream& out;
  std::ostream& err;
  ResultCache cache;
};

std::string hex(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

// Orders are JSON numbers while they fit in 64 bits, decimal strings beyond.
json order_json(const BigOrder& o) {
  if (o <= BigOrder(std::numeric_limits<std::uint64_t>::max())) return o.convert_to<std::uint64_t>();
  return o.str();
}

std::string json_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

SearchLimits limits_of(const RunConfig& cfg) {
  SearchLimits l;
  l.node_budget = cfg.node_budget;
  l.explicit_cap = cfg.explicit_cap;
  l.full_aut_vertex_cap = cfg.vertex_cap;
  return l;
}

GroupSpec resolve_group(const RunConfig& cfg) {
  const int sources = !cfg.group.empty() + !cfg.presentation.empty() + !cfg.presentation_file.empty();
  if (sources != 1) throw UsageError("give exactly one of --group, --presentation, --presentation-file");
  if (!cfg.group.empty()) return parse_group_spec(cfg.group, cfg.coset_cap);
  std::string text = cfg.presentation;
  if (!cfg.presentation_file.empty()) {
    std::ifstream in(cfg.presentation_file);
    if (!in) throw UsageError("cannot read presentation file '" + cfg.presentation_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  // Newlines are allowed in files; the spec language is single-line.
  std::replace(text.begin(), text.end(), '\n', ' ');
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.erase(text.begin());
  if (text.empty() || text.front() != '<') text = "<" + text + ">";
  return parse_group_spec("presentation:" + text, cfg.coset_cap);
}

GeneratingSet resolve_genset(const GroupSpec& spec, const RunConfig& cfg) {
  if (cfg.full && !cfg.gens.empty()) throw UsageError("--full and --gens are exclusive");
  if (cfg.radius == 0) throw UsageError("--radius must be at least 1");
  GeneratingSet s = cfg.gens.empty() ? full_genset(spec.group)
                                     : make_genset(spec.group, parse_elements(*spec.group, cfg.gens), true);
  if (cfg.radius > 1) s = ball(s, cfg.radius);
  return s;
}

void maybe_emit_dot(const RunConfig& cfg, const CayleyGraph& graph) {
  if (cfg.emit_dot.empty()) return;
  std::ofstream out(cfg.emit_dot);
  if (!out) throw UsageError("cannot write '" + cfg.emit_dot + "'");
  out << graph.to_dot();
}

// --- plain output -----------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

using Row = std::vector<std::string>;

void print_rows(std::ostream& out, Format format, const Row& header, const std::vector<Row>& rows) {
  if (format == Format::Csv) {
    auto line = [&](const Row& r) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
      out << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const Row& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << r[i];
      if (i + 1 < r.size()) out << std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

json stabilizer_json(const Stabilizer& xi) {
  json elems = json::array();
  for (const auto& p : xi.elements) elems.push_back(p.images());
  return {{"kind", "colour-stabilizer"},
          {"order", xi.order()},
          {"base_graph_digest", hex(xi.base_graph_digest)},
          {"elements", elems}};
}

json aut_json(const AutGroup& g, bool with_elements) {
  json gens = json::array();
  for (const auto& p : g.generators) gens.push_back(p.images());
  json rec = {{"kind", to_string(g.kind)},
              {"order", order_json(g.order)},
              {"base_graph_digest", hex(g.base_graph_digest)},
              {"generators", gens}};
  if (with_elements && g.elements) {
    json elems = json::array();
    for (const auto& p : *g.elements) elems.push_back(p.images());
    rec["elements"] = elems;
  }
  return rec;
}

// --- group ------------------------------------------------------------------

json classification_json(const FiniteGroup& g, const Classification& c) {
  json rec = {{"case", to_string(c.group_case)},
              {"predicted_xi_order", c.predicted_xi_order},
              {"dihedral_reading_only", c.dihedral_reading_only}};
  if (c.witness) {
    json a = json::array();
    for (Element e : c.witness->subgroup) a.push_back(g.name(e));
    rec["witness"] = {{"subgroup", a}, {"x", g.name(c.witness->x)}};
  }
  if (c.factors) {
    json q = json::array(), b = json::array();
    for (Element e : c.factors->q8) q.push_back(g.name(e));
    for (Element e : c.factors->boolean) b.push_back(g.name(e));
    rec["q8_factor"] = q;
    rec["boolean_factor"] = b;
  }
  return rec;
}

int cmd_group(Context& c) {
  const GroupSpec spec = resolve_group(c.cfg);
  const FiniteGroup& g = *spec.group;
  if (c.cfg.subcommand == "classify") {
    const Classification cl = classify(g);
    json rec = classification_json(g, cl);
    rec["schema"] = "cayley.classification.v1";
    rec["group_spec"] = spec.canonical;
    rec["order"] = g.order();
    if (c.cfg.format == Format::Json) {
      c.out << rec.dump(2) << "\n";
      return kExitOk;
    }
    std::vector<Row> rows{{"group_spec", spec.canonical}, {"order", std::to_string(g.order())},
                          {"case", to_string(cl.group_case)},
                          {"predicted_xi_order", std::to_string(cl.predicted_xi_order)},
                          {"dihedral_reading_only", cl.dihedral_reading_only ? "true" : "false"}};
    if (rec.contains("witness")) {
      std::string a;
      for (const auto& e : rec["witness"]["subgroup"]) a += (a.empty() ? "" : ", ") + e.get<std::string>();
      rows.push_back({"witness_subgroup", "{" + a + "}"});
      rows.push_back({"witness_x", rec["witness"]["x"].get<std::string>()});
    }
    if (cl.factors) {
      rows.push_back({"q8_factor_size", std::to_string(cl.factors->q8.size())});
      rows.push_back({"boolean_factor_size", std::to_string(cl.factors->boolean.size())});
    }
    print_rows(c.out, c.cfg.format, {"field", "value"}, rows);
    return kExitOk;
  }

  if (c.cfg.format == Format::Table) {
    c.out << describe(spec);
    return kExitOk;
  }
  if (c.cfg.format == Format::Csv) {
    std::vector<Row> rows;
    for (Element e = 0; e < g.order(); ++e) rows.push_back({std::to_string(e), g.name(e), std::to_string(g.element_order(e))});
    print_rows(c.out, Format::Csv, {"index", "name", "order"}, rows);
    return kExitOk;
  }
  json elems = json::array();
  for (Element e = 0; e < g.order(); ++e)
    elems.push_back({{"index", e}, {"name", g.name(e)}, {"order", g.element_order(e)}});
  json rec = {{"schema", "cayley.group.v1"}, {"group_spec", spec.canonical}, {"order", g.order()},
              {"identity", g.identity()}, {"digest", hex(g.digest())}, {"elements", elems}, {"table", g.table()}};
  c.out << rec.dump(2) << "\n";
  return kExitOk;
}

// --- xi / aut ---------------------------------------------------------------

int cmd_xi(Context& c) {
  const GroupSpec spec = resolve_group(c.cfg);
  const GeneratingSet s = resolve_genset(spec, c.cfg);
  const CayleyGraph graph = build_graph(s);
  maybe_emit_dot(c.cfg, graph);

  const std::string key = cache_key({{"op", "xi"}, {"table", hex(spec.group->digest())}, {"genset", s.elements()},
                                     {"node_budget", c.cfg.node_budget}});
  json xi;
  if (auto hit = c.cache.get(key)) {
    xi = *hit;
  } else {
    xi = stabilizer_json(xi_stabilizer(graph, c.cfg.node_budget));
    c.cache.put(key, xi);
  }
  const std::size_t order = xi["order"].get<std::size_t>();
  const std::size_t n = spec.group->order();

  if (c.cfg.format == Format::Json) {
    json rec = {{"schema", "cayley.xi.v1"}, {"group_spec", spec.canonical}, {"genset", s.to_string()},
                {"genset_size", s.size()}, {"radius", c.cfg.radius}, {"colour_aut_order", n * order}};
    rec["stabilizer"] = xi;
    c.out << rec.dump(2) << "\n";
    return kExitOk;
  }
  const Row header{"group_spec", "genset", "radius", "xi_order", "colour_aut_order"};
  print_rows(c.out, c.cfg.format, header,
             {{spec.canonical, s.to_string(), std::to_string(c.cfg.radius), std::to_string(order), std::to_string(n * order)}});
  if (c.cfg.format == Format::Table && c.cfg.list_elements) {
    c.out << "elements:\n";
    for (const auto& p : xi["elements"]) c.out << "  " << Permutation(p.get<std::vector<Element>>()).to_string() << "\n";
  }
  return kExitOk;
}

int cmd_aut(Context& c) {
  const GroupSpec spec = resolve_group(c.cfg);
  const GeneratingSet s = resolve_genset(spec, c.cfg);
  const CayleyGraph graph = build_graph(s);
  maybe_emit_dot(c.cfg, graph);
  const SearchLimits limits = limits_of(c.cfg);

  const std::string key =
      cache_key({{"op", "aut"}, {"table", hex(spec.group->digest())}, {"genset", s.elements()},
                 {"node_budget", limits.node_budget}, {"explicit_cap", limits.explicit_cap},
                 {"vertex_cap", limits.full_aut_vertex_cap}, {"elements", c.cfg.list_elements}});
  json groups;
  if (auto hit = c.cache.get(key)) {
    groups = *hit;
  } else {
    const Stabilizer xi = xi_stabilizer(graph, limits.node_budget);
    groups = json::array({aut_json(left_translations(graph), c.cfg.list_elements),
                          aut_json(colour_group(graph, xi, limits), c.cfg.list_elements),
                          aut_json(full_aut(graph, limits), c.cfg.list_elements)});
    c.cache.put(key, groups);
  }

  if (c.cfg.format == Format::Json) {
    json rec = {{"schema", "cayley.aut.v1"}, {"group_spec", spec.canonical}, {"genset", s.to_string()},
                {"genset_size", s.size()}, {"groups", groups}};
    c.out << rec.dump(2) << "\n";
    return kExitOk;
  }
  std::vector<Row> rows;
  for (const auto& g : groups)
    rows.push_back({g["kind"].get<std::string>(), json_text(g["order"]), std::to_string(g["generators"].size())});
  print_rows(c.out, c.cfg.format, {"kind", "order", "generators"}, rows);
  return kExitOk;
}

// --- index ------------------------------------------------------------------

const Row kIndexColumns{"group_spec",      "genset",       "genset_size", "full_aut_order", "colour_aut_order",
                        "cayley_index",    "colour_index", "exhaustive",  "seed"};

json index_record(const GroupSpec& spec, const IndexReport& r) {
  return {{"schema", "cayley.index.v1"},
          {"group_spec", spec.canonical},
          {"genset", r.genset},
          {"genset_size", r.genset_size},
          {"full_aut_order", order_json(r.full_aut_order)},
          {"colour_aut_order", order_json(r.colour_aut_order)},
          {"cayley_index", order_json(r.cayley_index)},
          {"colour_index", r.colour_index},
          {"exhaustive", nullptr},
          {"seed", nullptr}};
}

int cmd_index(Context& c) {
  const RunConfig& cfg = c.cfg;
  if (cfg.exhaustive && cfg.sampled) throw UsageError("--exhaustive and --sampled are exclusive");
  const GroupSpec spec = resolve_group(cfg);
  const SearchLimits limits = limits_of(cfg);
  json rec;

  if (!cfg.gens.empty() || cfg.full) {
    const GeneratingSet s = resolve_genset(spec, cfg);
    maybe_emit_dot(cfg, build_graph(s));
    const std::string key = cache_key({{"op", "index_of"}, {"table", hex(spec.group->digest())}, {"genset", s.elements()},
                                       {"vertex_cap", limits.full_aut_vertex_cap}, {"node_budget", limits.node_budget}});
    if (auto hit = c.cache.get(key)) {
      rec = *hit;
    } else {
      rec = index_record(spec, index_of(s, limits));
      c.cache.put(key, rec);
    }
  } else {
    IndexSearchOptions opts;
    opts.mode = cfg.exhaustive ? SearchMode::Exhaustive : cfg.sampled ? SearchMode::Sampled : SearchMode::Auto;
    opts.budget = cfg.budget;
    opts.seed = cfg.seed;
    opts.limits = limits;
    const std::string key =
        cache_key({{"op", "index_search"}, {"table", hex(spec.group->digest())}, {"mode", static_cast<int>(opts.mode)},
                   {"budget", opts.budget}, {"seed", opts.seed}, {"vertex_cap", limits.full_aut_vertex_cap},
                   {"node_budget", limits.node_budget}});
    if (auto hit = c.cache.get(key)) {
      rec = *hit;
    } else {
      const SearchResult r = cayley_index_search(spec.group, opts);
      rec = index_record(spec, index_of(*r.witness, limits));
      rec["exhaustive"] = r.exhaustive;
      rec["sets_examined"] = r.sets_examined;
      if (r.seed) rec["seed"] = *r.seed;
      c.cache.put(key, rec);
    }
    if (!cfg.emit_dot.empty()) {
      const auto elems = parse_elements(*spec.group, rec["genset"].get<std::string>().substr(1, rec["genset"].get<std::string>().size() - 2));
      maybe_emit_dot(cfg, build_graph(make_genset(spec.group, elems, false)));
    }
  }
  rec["group_spec"] = spec.canonical;

  if (cfg.format == Format::Json) {
    c.out << rec.dump(2) << "\n";
    return kExitOk;
  }
  Row row;
  for (const auto& col : kIndexColumns) {
    const json& v = rec[col];
    row.push_back(v.is_null() ? "" : v.is_boolean() ? (v.get<bool>() ? "true" : "false") : json_text(v));
  }
  print_rows(c.out, cfg.format, kIndexColumns, {row});
  return kExitOk;
}

// --- verify -----------------------------------------------------------------

CheckReport thm2_report(const std::string& text, const RunConfig& cfg) {
  const GroupSpec spec = parse_group_spec(text, cfg.coset_cap);
  const FiniteGroup& g = *spec.group;
  const Classification cl = classify(g);
  CheckReport r;
  r.name = "thm2 " + spec.canonical;
  if (g.order() == 1) {
    r.add("trivial group: xi_G = {id}", true, "Boolean");
    return r;
  }
  const Stabilizer xi = xi_of_group(spec.group, cfg.node_budget);
  std::string detail = std::string(to_string(cl.group_case)) + ", predicted " + std::to_string(cl.predicted_xi_order) +
                       ", computed " + std::to_string(xi.order());
  if (cl.dihedral_reading_only) detail += ", dicyclic only under the literal x^4 = 1 reading";
  r.add("|xi_G| = predicted", xi.order() == cl.predicted_xi_order, detail);
  r.add("xi_G has the predicted elements", xi.elements == predicted_xi(g, cl));
  return r;
}

CheckReport quant_report(const std::string& label, const GeneratingSet& s) {
  const QuantitativeReport q = verify_quantitative(s);
  CheckReport r;
  r.name = "quant " + label;
  r.add("xi over S^<=k equals xi_G", q.pass,
        std::string(to_string(q.group_case)) + ", k = " + std::to_string(q.radius) + ", |xi_ball| = " +
            std::to_string(q.xi_ball_order) + ", |xi_G| = " + std::to_string(q.xi_group_order));
  return r;
}

std::size_t parse_count(const std::string& text) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size()) throw UsageError("expected a number, got '" + text + "'");
  return v;
}

CheckReport example_report(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) throw UsageError("example name must look like product:3,3, q8:1, h:4 or k:1");
  const std::string kind = name.substr(0, colon), arg = name.substr(colon + 1);
  if (kind == "product") {
    const auto comma = arg.find(',');
    if (comma == std::string::npos) throw UsageError("product example needs two sizes, e.g. product:3,4");
    return optimality_example_product(parse_count(arg.substr(0, comma)), parse_count(arg.substr(comma + 1)));
  }
  if (kind == "q8") return optimality_example_q8(parse_count(arg));
  if (kind == "h") return optimality_example_h(parse_count(arg));
  if (kind == "k") return optimality_example_k(parse_count(arg));
  throw UsageError("unknown example '" + kind + "'");
}

std::vector<CheckReport> lemma_reports(const RunConfig& cfg) {
  std::vector<CheckReport> out;
  auto lemma = [&](const std::string& group_text, std::size_t rank) {
    const GroupSpec spec = parse_group_spec(group_text, cfg.coset_cap);
    CheckReport r;
    r.name = "lemma boolean factor " + spec.canonical + " x boolean:" + std::to_string(rank);
    r.add("xi_{G x B} is the lift of xi_G", check_boolean_factor_lemma(spec.group, boolean_group(rank)));
    out.push_back(std::move(r));
  };
  if (!cfg.group.empty()) {
    lemma(cfg.group, cfg.boolean_rank);
    return out;
  }
  lemma("q8", 1);
  lemma("cyclic:5", 1);
  lemma("hgroup:3", 1);
  lemma("cyclic:3", 0);

  CheckReport dichotomy;
  dichotomy.name = "lemma a0 dichotomy";
  for (const auto& text : small_suite()) {
    const GroupSpec spec = parse_group_spec(text, cfg.coset_cap);
    const Classification cl = classify(*spec.group);
    if (!cl.witness) continue;
    bool a0_found = true;
    try {
      find_a0(*spec.group, *cl.witness);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PreconditionViolation) throw;
      a0_found = false;
    }
    const bool q8b = cl.group_case == GroupCase::Q8TimesBoolean;
    dichotomy.add(spec.canonical, a0_found != q8b, std::string(to_string(cl.group_case)) + (a0_found ? ", a0 found" : ", no a0"));
  }
  out.push_back(std::move(dichotomy));

  CheckReport prop;
  prop.name = "lemma propagation";
  {
    const GroupWithGenset q = example_q8_boolean(1);
    const FiniteGroup& g = *q.group;
    const Element s = g.parse_element("(i,1)"), t = g.parse_element("(j,1)");
    prop.add("Q8 x Z/2, T = S_1^<=3, S0 = {s, t, st}",
             check_propagation(build_graph(ball(q.genset, 3)), q.genset, {s, t, g(s, t)}));
  }
  {
    GroupPtr z6 = share(cyclic(6));
    const Element one[] = {1};
    const GeneratingSet s = make_genset(z6, one, true);
    prop.add("Z/6, T = S^<=2, S0 = {1}", check_propagation(build_graph(ball(s, 2)), s, {1}));
  }
  {
    const HGroup h = h_group(4);
    const bool holds = check_propagation(build_graph(ball(h.genset, 2)), h.genset, {});
    prop.add("H_4, T = S^<=2, S0 = {} fails as expected", !holds);
  }
  out.push_back(std::move(prop));
  return out;
}

std::vector<std::string> family(const std::string& name) {
  if (name == "smallsuite") return small_suite();
  if (name == "tiny") return small_suite_upto(8);
  throw UsageError("unknown family '" + name + "' (known: smallsuite, tiny)");
}

int cmd_verify(Context& c) {
  const RunConfig& cfg = c.cfg;
  const std::string& what = cfg.subcommand;
  std::vector<CheckReport> reports;

  if (what == "thm2" || what == "all") {
    const auto groups = (what == "thm2" && (!cfg.group.empty() || !cfg.presentation.empty() || !cfg.presentation_file.empty()))
                            ? std::vector<std::string>{resolve_group(cfg).canonical}
                            : family(cfg.family.empty() ? "smallsuite" : cfg.family);
    for (const auto& g : groups) reports.push_back(thm2_report(g, cfg));
  }
  if (what == "quant" || what == "all") {
    if (what == "quant" && (!cfg.group.empty() || !cfg.presentation.empty() || !cfg.presentation_file.empty())) {
      const GroupSpec spec = resolve_group(cfg);
      RunConfig plain = cfg;
      plain.radius = 1;
      const GeneratingSet s = resolve_genset(spec, plain);
      reports.push_back(quant_report(spec.canonical + " " + s.to_string(), s));
    } else {
      for (const auto& q : quant_suite()) {
        const GroupSpec spec = parse_group_spec(q.group, cfg.coset_cap);
        reports.push_back(quant_report(q.label, make_genset(spec.group, parse_elements(*spec.group, q.gens), true)));
      }
    }
  }
  if (what == "example" || what == "all") {
    if (what == "example" && cfg.name.empty()) throw UsageError("verify example needs --name (or --name all)");
    if (what == "all" || cfg.name == "all") {
      for (const auto& n : example_names()) reports.push_back(example_report(n));
    } else {
      reports.push_back(example_report(cfg.name));
    }
  }
  if (what == "lemma" || what == "all") {
    RunConfig lemma_cfg = cfg;
    if (what == "all") lemma_cfg.group.clear();
    for (auto& r : lemma_reports(lemma_cfg)) reports.push_back(std::move(r));
  }

  const bool pass = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass(); });
  if (cfg.format == Format::Json) {
    json arr = json::array();
    for (const auto& r : reports) {
      json checks = json::array();
      for (const auto& ch : r.checks) checks.push_back({{"label", ch.label}, {"pass", ch.pass}, {"detail", ch.detail}});
      arr.push_back({{"name", r.name}, {"pass", r.pass()}, {"checks", checks}});
    }
    c.out << json{{"schema", "cayley.verify.v1"}, {"pass", pass}, {"reports", arr}}.dump(2) << "\n";
  } else if (cfg.format == Format::Csv) {
    std::vector<Row> rows;
    for (const auto& r : reports)
      for (const auto& ch : r.checks) rows.push_back({r.name, ch.label, ch.pass ? "true" : "false", ch.detail});
    print_rows(c.out, Format::Csv, {"report", "check", "pass", "detail"}, rows);
  } else {
    std::size_t total = 0, passed = 0;
    for (const auto& r : reports)
      for (const auto& ch : r.checks) {
        ++total;
        passed += ch.pass;
        c.out << (ch.pass ? "PASS  " : "FAIL  ") << r.name << ": " << ch.label;
        if (!ch.detail.empty()) c.out << " (" << ch.detail << ")";
        c.out << "\n";
      }
    c.out << passed << "/" << total << " checks passed\n";
  }
  return pass ? kExitOk : kExitCheckFailed;
}

// --- report -----------------------------------------------------------------

int cmd_report(Context& c) {
  const RunConfig& cfg = c.cfg;
  const auto groups = family(cfg.family.empty() ? "smallsuite" : cfg.family);
  Row header{"group_spec", "order", "case", "predicted_xi_order", "xi_order", "match", "dihedral_reading_only"};
  if (cfg.with_index) header.insert(header.end(), {"cayley_index", "exhaustive", "genset"});
  std::vector<Row> rows;
  json arr = json::array();
  for (const auto& text : groups) {
    const GroupSpec spec = parse_group_spec(text, cfg.coset_cap);
    const Classification cl = classify(*spec.group);
    const std::size_t xi = spec.group->order() == 1 ? 1 : xi_of_group(spec.group, cfg.node_budget).order();
    json rec = {{"group_spec", spec.canonical},
                {"order", spec.group->order()},
                {"case", to_string(cl.group_case)},
                {"predicted_xi_order", cl.predicted_xi_order},
                {"xi_order", xi},
                {"match", xi == cl.predicted_xi_order},
                {"dihedral_reading_only", cl.dihedral_reading_only}};
    if (cfg.with_index) {
      IndexSearchOptions opts;
      opts.budget = cfg.budget;
      opts.seed = cfg.seed;
      opts.limits = limits_of(cfg);
      const std::string key =
          cache_key({{"op", "report_index"}, {"table", hex(spec.group->digest())}, {"budget", opts.budget},
                     {"seed", opts.seed}, {"vertex_cap", opts.limits.full_aut_vertex_cap}});
      json idx;
      if (auto hit = c.cache.get(key)) {
        idx = *hit;
      } else {
        const SearchResult r = cayley_index_search(spec.group, opts);
        idx = {{"cayley_index", order_json(r.best_index)}, {"exhaustive", r.exhaustive}, {"genset", r.witness->to_string()}};
        c.cache.put(key, idx);
      }
      rec.update(idx);
    }
    Row row;
    for (const auto& col : header) {
      const json& v = rec[col];
      row.push_back(v.is_boolean() ? (v.get<bool>() ? "true" : "false") : json_text(v));
    }
    rows.push_back(std::move(row));
    arr.push_back(std::move(rec));
  }
  if (cfg.format == Format::Json) {
    c.out << json{{"schema", "cayley.report.v1"}, {"rows", arr}}.dump(2) << "\n";
  } else {
    print_rows(c.out, cfg.format, header, rows);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string cache_path;
  CLI::App app{"Colour-preserving and full automorphisms of Cayley graphs of finite groups", "cayley"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "Group spec, e.g. cyclic:5, q8, dic:cyclic:6@3, hgroup:4");
    sub->add_option("--presentation", cfg.presentation, "Finite presentation, e.g. \"<a,b | a^4, b^2 = a^2, b a b^-1 = a^-1>\"");
    sub->add_option("--presentation-file", cfg.presentation_file, "File holding a presentation");
    sub->add_option("--coset-cap", cfg.coset_cap, "Live coset limit for coset enumeration")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "table, json or csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--cache", cache_path, "JSON-lines result cache (overrides CAYLEY_CACHE)");
    sub->add_flag("--no-cache", cfg.no_cache, "Ignore any cache");
    sub->add_option("--node-budget", cfg.node_budget, "Node budget of the colour-automorphism search")->check(CLI::PositiveNumber);
  };
  auto graph_opts = [&](CLI::App* sub) {
    sub->add_option("--gens", cfg.gens, "Comma-separated element names or indices; inverses are added");
    sub->add_flag("--full", cfg.full, "Use G \\ {1} (the default when --gens is absent)");
    sub->add_option("--radius", cfg.radius, "Replace S by the ball S^{<=k}");
    sub->add_option("--emit-dot", cfg.emit_dot, "Write the Cayley graph as Graphviz DOT");
    sub->add_option("--vertex-cap", cfg.vertex_cap, "Largest graph full_aut accepts")->check(CLI::PositiveNumber);
    sub->add_option("--explicit-cap", cfg.explicit_cap, "Store group elements up to this order")->check(CLI::PositiveNumber);
  };

  auto* group = app.add_subcommand("group", "Inspect a group");
  group->require_subcommand(1);
  auto* describe_cmd = group->add_subcommand("describe", "Elements and multiplication table");
  auto* classify_cmd = group->add_subcommand("classify", "Case predicting xi_G, with structural witnesses");
  common(describe_cmd);
  common(classify_cmd);

  auto* xi = app.add_subcommand("xi", "Stabilizer of the identity in the colour-preserving group");
  common(xi);
  graph_opts(xi);
  xi->add_flag("--elements", cfg.list_elements, "List the stabilizer elements (table format)");

  auto* aut = app.add_subcommand("aut", "Labelled, colour-preserving and full automorphism groups");
  common(aut);
  graph_opts(aut);
  aut->add_flag("--elements", cfg.list_elements, "Include explicit elements in JSON output");

  auto* index = app.add_subcommand("index", "Cayley index of one generating set, or a search over all of them");
  common(index);
  graph_opts(index);
  index->add_flag("--exhaustive", cfg.exhaustive, "Enumerate every symmetric generating set");
  index->add_flag("--sampled", cfg.sampled, "Random symmetric generating sets");
  index->add_option("--seed", cfg.seed, "Seed for sampled mode");
  index->add_option("--budget", cfg.budget, "Generating sets to evaluate")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run theorem checks; exit 1 on any failure");
  common(verify);
  verify->add_option("what", cfg.subcommand, "thm2, quant, example, lemma or all")
      ->required()
      ->check(CLI::IsMember({"thm2", "quant", "example", "lemma", "all"}));
  verify->add_option("--family", cfg.family, "Group family: smallsuite or tiny");
  verify->add_option("--name", cfg.name, "Example: product:M,N, q8:N, h:N, k:N or all");
  verify->add_option("--gens", cfg.gens, "Generating set for verify quant");
  verify->add_option("--boolean-rank", cfg.boolean_rank, "Rank of B for verify lemma --group");

  auto* report = app.add_subcommand("report", "Classification and xi_G for a family, optionally with Cayley indices");
  common(report);
  report->add_option("--family", cfg.family, "smallsuite or tiny");
  report->add_flag("--index", cfg.with_index, "Also search the Cayley index (slow for order 16)");
  report->add_option("--seed", cfg.seed, "Seed for sampled searches");
  std::size_t report_budget = 2000;
  report->add_option("--budget", report_budget, "Generating sets per search (default 2000)")->check(CLI::PositiveNumber);
  report->add_option("--vertex-cap", cfg.vertex_cap, "Largest graph full_aut accepts")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (describe_cmd->parsed()) cfg.command = "group", cfg.subcommand = "describe";
  if (classify_cmd->parsed()) cfg.command = "group", cfg.subcommand = "classify";
  for (auto* sub : {xi, aut, index, verify, report})
    if (sub->parsed()) cfg.command = sub->get_name();

  if (report->parsed()) cfg.budget = report_budget;
  if (!cache_path.empty()) cfg.cache_path = cache_path;
  if (!cfg.cache_path)
    if (const char* env = std::getenv("CAYLEY_CACHE"); env && *env) cfg.cache_path = env;

  try {
    Context ctx{cfg, out, err, (cfg.cache_path && !cfg.no_cache) ? ResultCache(*cfg.cache_path) : ResultCache()};
    if (cfg.command == "group") return cmd_group(ctx);
    if (cfg.command == "xi") return cmd_xi(ctx);
    if (cfg.command == "aut") return cmd_aut(ctx);
    if (cfg.command == "index") return cmd_index(ctx);
    if (cfg.command == "verify") return cmd_verify(ctx);
    if (cfg.command == "report") return cmd_report(ctx);
    throw UsageError("no command given");
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::ResourceLimit ? kExitResource : kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cayley::cli
