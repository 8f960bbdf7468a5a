#include "ctop/instance_io.hpp"

#include <fstream>
#include <utility>

namespace ctop {

namespace {

constexpr const char* kKindNames[] = {
    "relation", "per",     "cnt-morphism", "witness", "category",
    "functor",  "nat-trans", "etale",      "cset",    "equivariant",
};

[[noreturn]] void fail(const std::string& what) { throw input_error("input.format", what); }

bool is_natural(const Json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0);
}

Nat as_natural(const Json& v) {
  return v.is_number_unsigned() ? v.get<Nat>() : static_cast<Nat>(v.get<long long>());
}

Nat get_nat(const Json& j, const std::string& key) {
  if (!j.contains(key) || !is_natural(j[key]))
    fail("expected unsigned number at \"" + key + "\"");
  return as_natural(j[key]);
}

std::vector<Nat> get_nat_array(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array()) fail("expected array at \"" + key + "\"");
  std::vector<Nat> out;
  for (const Json& v : j[key]) {
    if (!is_natural(v)) fail("expected unsigned numbers in \"" + key + "\"");
    out.push_back(as_natural(v));
  }
  return out;
}

std::set<Nat> get_nat_set(const Json& j, const std::string& key) {
  auto v = get_nat_array(j, key);
  return std::set<Nat>(v.begin(), v.end());
}

std::set<std::pair<Nat, Nat>> get_pair_set(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array()) fail("expected array at \"" + key + "\"");
  std::set<std::pair<Nat, Nat>> out;
  for (const Json& entry : j[key]) {
    if (!entry.is_array() || entry.size() != 2 || !is_natural(entry[0]) || !is_natural(entry[1]))
      fail("expected [a, b] pairs in \"" + key + "\"");
    out.insert({as_natural(entry[0]), as_natural(entry[1])});
  }
  return out;
}

// A nested component: an inline object, or a path string to a sibling file.
Json resolve(const Json& j, const std::string& key, const std::filesystem::path& base_dir,
             std::filesystem::path& dir_out) {
  if (!j.contains(key)) fail("missing component \"" + key + "\"");
  const Json& v = j[key];
  if (v.is_object()) {
    dir_out = base_dir;
    return v;
  }
  if (v.is_string()) {
    const std::filesystem::path path = base_dir / v.get<std::string>();
    std::ifstream in(path);
    if (!in) fail("cannot open referenced file " + path.string());
    Json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw input_error("input.parse", path.string() + ": " + e.what());
    }
    dir_out = path.parent_path();
    return doc;
  }
  fail("component \"" + key + "\" must be an object or a path string");
}

void check_kind(const Json& doc, Kind expected) {
  if (doc.contains("kind") && doc["kind"].is_string() &&
      doc["kind"].get<std::string>() != kind_name(expected))
    fail("component of kind \"" + doc["kind"].get<std::string>() + "\" where \"" +
         kind_name(expected) + "\" expected");
}

TransitiveRelation parse_relation(const Json& doc, const LoadOptions& options) {
  check_kind(doc, Kind::relation);
  TransitiveRelation r{get_nat(doc, "carrier"), get_pair_set(doc, "pairs")};
  if (options.closure) r = transitive_closure(r);
  return r;
}

Per parse_per(const Json& doc, const LoadOptions& options) {
  check_kind(doc, Kind::per);
  Per p{get_nat(doc, "carrier"), get_pair_set(doc, "pairs")};
  if (options.closure)
    p.pairs = transitive_closure(TransitiveRelation{p.carrier, p.pairs}).pairs;
  return p;
}

TransitiveRelation resolve_relation(const Json& j, const std::string& key,
                                    const std::filesystem::path& base_dir,
                                    const LoadOptions& options) {
  std::filesystem::path dir;
  return parse_relation(resolve(j, key, base_dir, dir), options);
}

Per resolve_per(const Json& j, const std::string& key, const std::filesystem::path& base_dir,
                const LoadOptions& options) {
  std::filesystem::path dir;
  return parse_per(resolve(j, key, base_dir, dir), options);
}

PerMorphism parse_morphism(const Json& doc, const std::filesystem::path& base_dir,
                           const LoadOptions& options) {
  check_kind(doc, Kind::cnt_morphism);
  PerMorphism m;
  m.src = resolve_per(doc, "src", base_dir, options);
  m.tar = resolve_per(doc, "tar", base_dir, options);
  m.graph = get_pair_set(doc, "graph");
  if (options.closure) m.graph = saturate_graph(std::move(m.graph), m.src, m.tar);
  return m;
}

OvertDiscreteWitness parse_witness(const Json& doc, const std::filesystem::path& base_dir,
                                   const LoadOptions& options) {
  check_kind(doc, Kind::witness);
  OvertDiscreteWitness w;
  w.relation = resolve_relation(doc, "relation", base_dir, options);
  w.nonempty = get_nat_set(doc, "nonempty");
  w.equality = get_pair_set(doc, "equality");
  return w;
}

CategoryInstance parse_category(const Json& doc, const std::filesystem::path& base_dir,
                                const LoadOptions& options) {
  check_kind(doc, Kind::category);
  CategoryInstance c;
  c.obj_space = resolve_relation(doc, "objects", base_dir, options);
  c.mor_space = resolve_relation(doc, "morphisms", base_dir, options);
  c.src_table = get_nat_array(doc, "src");
  c.tar_table = get_nat_array(doc, "tar");
  c.id_table = get_nat_array(doc, "id");
  if (!doc.contains("comp") || !doc["comp"].is_array()) fail("expected array at \"comp\"");
  for (const Json& entry : doc["comp"]) {
    if (!entry.is_array() || entry.size() != 3 || !is_natural(entry[0]) ||
        !is_natural(entry[1]) || !is_natural(entry[2]))
      fail("expected [g, f, g*f] triples in \"comp\"");
    c.comp_table[{as_natural(entry[0]), as_natural(entry[1])}] = as_natural(entry[2]);
  }
  return c;
}

CategoryInstance resolve_category(const Json& j, const std::string& key,
                                  const std::filesystem::path& base_dir,
                                  const LoadOptions& options) {
  std::filesystem::path dir;
  const Json doc = resolve(j, key, base_dir, dir);
  return parse_category(doc, dir, options);
}

std::set<std::pair<Nat, Nat>> parse_graph_entry(const Json& entry, const std::string& key) {
  Json holder;
  holder[key] = entry;
  return get_pair_set(holder, key);
}

FunctorInstance parse_functor(const Json& doc, const std::filesystem::path& base_dir,
                              const LoadOptions& options) {
  check_kind(doc, Kind::functor);
  FunctorInstance f;
  f.over = resolve_category(doc, "category", base_dir, options);

  if (!doc.contains("objects") || !doc["objects"].is_array())
    fail("expected array at \"objects\"");
  for (const Json& entry : doc["objects"]) {
    if (!entry.is_object()) fail("functor object entries must be per documents");
    f.obj_table.push_back(parse_per(entry, options));
  }

  if (!doc.contains("morphisms") || !doc["morphisms"].is_array())
    fail("expected array at \"morphisms\"");
  const std::size_t n_mor = doc["morphisms"].size();
  if (f.over.src_table.size() != n_mor || f.over.tar_table.size() != n_mor)
    fail("functor morphism table does not match the category's morphism points");
  std::size_t idx = 0;
  for (const Json& entry : doc["morphisms"]) {
    PerMorphism m;
    m.graph = parse_graph_entry(entry, "morphisms");
    const Nat s = f.over.src_table[idx], t = f.over.tar_table[idx];
    if (s >= f.obj_table.size() || t >= f.obj_table.size())
      fail("category source/target index outside the functor's object table");
    m.src = f.obj_table[static_cast<std::size_t>(s)];
    m.tar = f.obj_table[static_cast<std::size_t>(t)];
    if (options.closure) m.graph = saturate_graph(std::move(m.graph), m.src, m.tar);
    f.mor_table.push_back(std::move(m));
    ++idx;
  }
  return f;
}

FunctorInstance resolve_functor(const Json& j, const std::string& key,
                                const std::filesystem::path& base_dir,
                                const LoadOptions& options) {
  std::filesystem::path dir;
  const Json doc = resolve(j, key, base_dir, dir);
  return parse_functor(doc, dir, options);
}

NatTransInstance parse_nat_trans(const Json& doc, const std::filesystem::path& base_dir,
                                 const LoadOptions& options) {
  check_kind(doc, Kind::nat_trans);
  NatTransInstance n;
  n.from = resolve_functor(doc, "from", base_dir, options);
  n.to = resolve_functor(doc, "to", base_dir, options);
  if (!doc.contains("eta") || !doc["eta"].is_array()) fail("expected array at \"eta\"");
  if (doc["eta"].size() != n.from.obj_table.size() ||
      n.from.obj_table.size() != n.to.obj_table.size())
    fail("component table does not match the functors' object tables");
  std::size_t idx = 0;
  for (const Json& entry : doc["eta"]) {
    PerMorphism m;
    m.graph = parse_graph_entry(entry, "eta");
    m.src = n.from.obj_table[idx];
    m.tar = n.to.obj_table[idx];
    if (options.closure) m.graph = saturate_graph(std::move(m.graph), m.src, m.tar);
    n.eta.push_back(std::move(m));
    ++idx;
  }
  return n;
}

EtaleInstance parse_etale(const Json& doc, const std::filesystem::path& base_dir,
                          const LoadOptions& options) {
  check_kind(doc, Kind::etale);
  EtaleInstance e;
  e.total_space = resolve_relation(doc, "total", base_dir, options);
  e.base_space = resolve_relation(doc, "base", base_dir, options);
  e.p_table = get_nat_array(doc, "p");
  if (!doc.contains("charts") || !doc["charts"].is_array()) fail("expected array at \"charts\"");
  for (const Json& entry : doc["charts"]) {
    if (!entry.is_object()) fail("chart entries must be objects");
    SectionChart chart;
    chart.total_open = get_nat_set(entry, "total_open");
    chart.base_open = get_nat_set(entry, "base_open");
    for (const auto& [y, x] : get_pair_set(entry, "section")) chart.section[y] = x;
    if (entry["section"].size() != chart.section.size())
      fail("section table has duplicate base points");
    e.charts.push_back(std::move(chart));
  }
  return e;
}

EtaleInstance resolve_etale(const Json& j, const std::string& key,
                            const std::filesystem::path& base_dir, const LoadOptions& options) {
  std::filesystem::path dir;
  const Json doc = resolve(j, key, base_dir, dir);
  return parse_etale(doc, dir, options);
}

ActionInstance parse_cset(const Json& doc, const std::filesystem::path& base_dir,
                          const LoadOptions& options) {
  check_kind(doc, Kind::cset);
  ActionInstance a;
  a.category = resolve_category(doc, "category", base_dir, options);
  a.etale = resolve_etale(doc, "etale", base_dir, options);
  if (!doc.contains("action") || !doc["action"].is_array()) fail("expected array at \"action\"");
  for (const Json& entry : doc["action"]) {
    if (!entry.is_array() || entry.size() != 3 || !is_natural(entry[0]) ||
        !is_natural(entry[1]) || !is_natural(entry[2]))
      fail("expected [f, x, f.x] triples in \"action\"");
    a.act_table[{as_natural(entry[0]), as_natural(entry[1])}] = as_natural(entry[2]);
  }
  return a;
}

ActionInstance resolve_cset(const Json& j, const std::string& key,
                            const std::filesystem::path& base_dir, const LoadOptions& options) {
  std::filesystem::path dir;
  const Json doc = resolve(j, key, base_dir, dir);
  return parse_cset(doc, dir, options);
}

EquivariantMapInstance parse_equivariant(const Json& doc, const std::filesystem::path& base_dir,
                                         const LoadOptions& options) {
  check_kind(doc, Kind::equivariant);
  EquivariantMapInstance m;
  m.from = resolve_cset(doc, "from", base_dir, options);
  m.to = resolve_cset(doc, "to", base_dir, options);
  m.h_table = get_nat_array(doc, "map");
  return m;
}

Json pairs_to_json(const std::set<std::pair<Nat, Nat>>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back(Json::array({a, b}));
  return out;
}

Json set_to_json(const std::set<Nat>& s) {
  Json out = Json::array();
  for (Nat a : s) out.push_back(a);
  return out;
}

Json vector_to_json(const std::vector<Nat>& v) {
  Json out = Json::array();
  for (Nat a : v) out.push_back(a);
  return out;
}

Json relation_body(const TransitiveRelation& r, bool echo_points) {
  Json out = Json::object();
  out["carrier"] = r.carrier;
  out["pairs"] = pairs_to_json(r.pairs);
  if (echo_points) {
    Json pts = Json::array();
    for (const PointSet& p : enumerate_ideals(r)) pts.push_back(set_to_json(p));
    out["points"] = std::move(pts);
  }
  return out;
}

Json per_body(const Per& p) {
  Json out = Json::object();
  out["carrier"] = p.carrier;
  out["pairs"] = pairs_to_json(p.pairs);
  return out;
}

Json category_body(const CategoryInstance& c, bool echo_points) {
  Json out = Json::object();
  out["objects"] = relation_body(c.obj_space, echo_points);
  out["morphisms"] = relation_body(c.mor_space, echo_points);
  out["src"] = vector_to_json(c.src_table);
  out["tar"] = vector_to_json(c.tar_table);
  out["id"] = vector_to_json(c.id_table);
  Json comp = Json::array();
  for (const auto& [gf, h] : c.comp_table)
    comp.push_back(Json::array({gf.first, gf.second, h}));
  out["comp"] = std::move(comp);
  return out;
}

Json etale_body(const EtaleInstance& e, bool echo_points) {
  Json out = Json::object();
  out["total"] = relation_body(e.total_space, echo_points);
  out["base"] = relation_body(e.base_space, echo_points);
  out["p"] = vector_to_json(e.p_table);
  Json charts = Json::array();
  for (const SectionChart& chart : e.charts) {
    Json c = Json::object();
    c["total_open"] = set_to_json(chart.total_open);
    c["base_open"] = set_to_json(chart.base_open);
    Json section = Json::array();
    for (const auto& [y, x] : chart.section) section.push_back(Json::array({y, x}));
    c["section"] = std::move(section);
    charts.push_back(std::move(c));
  }
  out["charts"] = std::move(charts);
  return out;
}

Json functor_body(const FunctorInstance& f, bool echo_points) {
  Json out = Json::object();
  out["category"] = category_body(f.over, echo_points);
  Json objects = Json::array();
  for (const Per& p : f.obj_table) objects.push_back(per_body(p));
  out["objects"] = std::move(objects);
  Json morphisms = Json::array();
  for (const PerMorphism& m : f.mor_table) morphisms.push_back(pairs_to_json(m.graph));
  out["morphisms"] = std::move(morphisms);
  return out;
}

Json cset_body(const ActionInstance& a, bool echo_points) {
  Json out = Json::object();
  out["category"] = category_body(a.category, echo_points);
  out["etale"] = etale_body(a.etale, echo_points);
  Json action = Json::array();
  for (const auto& [fx, y] : a.act_table)
    action.push_back(Json::array({fx.first, fx.second, y}));
  out["action"] = std::move(action);
  return out;
}

}  // namespace

std::string kind_name(Kind k) { return kKindNames[static_cast<int>(k)]; }

Kind kind_from_name(const std::string& name) {
  for (int i = 0; i < 10; ++i)
    if (name == kKindNames[i]) return static_cast<Kind>(i);
  throw input_error("input.kind", "unknown instance kind \"" + name + "\"");
}

Kind kind_of(const Instance& inst) { return static_cast<Kind>(inst.index()); }

Instance parse_instance(const Json& doc, const std::filesystem::path& base_dir,
                        const LoadOptions& options) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    fail("instance document needs a \"kind\" string");
  switch (kind_from_name(doc["kind"].get<std::string>())) {
    case Kind::relation: return parse_relation(doc, options);
    case Kind::per: return parse_per(doc, options);
    case Kind::cnt_morphism: return parse_morphism(doc, base_dir, options);
    case Kind::witness: return parse_witness(doc, base_dir, options);
    case Kind::category: return parse_category(doc, base_dir, options);
    case Kind::functor: return parse_functor(doc, base_dir, options);
    case Kind::nat_trans: return parse_nat_trans(doc, base_dir, options);
    case Kind::etale: return parse_etale(doc, base_dir, options);
    case Kind::cset: return parse_cset(doc, base_dir, options);
    case Kind::equivariant: return parse_equivariant(doc, base_dir, options);
  }
  fail("unreachable kind");
}

Instance load_instance(const std::filesystem::path& file, const LoadOptions& options) {
  std::ifstream in(file);
  if (!in) throw input_error("input.file", "cannot open " + file.string());
  Json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("input.parse", file.string() + ": " + e.what());
  }
  return parse_instance(doc, file.parent_path(), options);
}

Json to_json(const TransitiveRelation& r, bool echo_points) {
  Json out = Json::object();
  out["kind"] = kind_name(Kind::relation);
  const Json body = relation_body(r, echo_points);
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

Json to_json(const Per& p) {
  Json out = Json::object();
  out["kind"] = kind_name(Kind::per);
  out["carrier"] = p.carrier;
  out["pairs"] = pairs_to_json(p.pairs);
  return out;
}

Json to_json(const PerMorphism& m) {
  Json out = Json::object();
  out["kind"] = kind_name(Kind::cnt_morphism);
  out["graph"] = pairs_to_json(m.graph);
  out["src"] = per_body(m.src);
  out["tar"] = per_body(m.tar);
  return out;
}

Json to_json(const OvertDiscreteWitness& w) {
  Json out = Json::object();
  out["kind"] = kind_name(Kind::witness);
  out["relation"] = relation_body(w.relation, false);
  out["nonempty"] = set_to_json(w.nonempty);
  out["equality"] = pairs_to_json(w.equality);
  return out;
}

Json to_json(const CategoryInstance& c, bool echo_points) {
  Json out = Json::object();
  out["kind"] = kind_name(Kind::category);
  const Json body = category_body(c, echo_points);
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

Json to_json(const FunctorInstance& f, bool echo_points) {
  Json out = Json::object();
  out["kind"] = kind_name(Kind::functor);
  const Json body = functor_body(f, echo_points);
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

Json to_json(const NatTransInstance& n, bool echo_points) {
  Json out = Json::object();
  out["kind"] = kind_name(Kind::nat_trans);
  out["from"] = functor_body(n.from, echo_points);
  out["to"] = functor_body(n.to, echo_points);
  Json eta = Json::array();
  for (const PerMorphism& m : n.eta) eta.push_back(pairs_to_json(m.graph));
  out["eta"] = std::move(eta);
  return out;
}

Json to_json(const EtaleInstance& e, bool echo_points) {
  Json out = Json::object();
  out["kind"] = kind_name(Kind::etale);
  const Json body = etale_body(e, echo_points);
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

Json to_json(const ActionInstance& a, bool echo_points) {
  Json out = Json::object();
  out["kind"] = kind_name(Kind::cset);
  const Json body = cset_body(a, echo_points);
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

Json to_json(const EquivariantMapInstance& m, bool echo_points) {
  Json out = Json::object();
  out["kind"] = kind_name(Kind::equivariant);
  out["from"] = cset_body(m.from, echo_points);
  out["to"] = cset_body(m.to, echo_points);
  out["map"] = vector_to_json(m.h_table);
  return out;
}

Json instance_to_json(const Instance& inst, bool echo_points) {
  return std::visit(
      [echo_points](const auto& value) -> Json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, Per>)
          return to_json(value);
        else if constexpr (std::is_same_v<T, PerMorphism>)
          return to_json(value);
        else if constexpr (std::is_same_v<T, OvertDiscreteWitness>)
          return to_json(value);
        else
          return to_json(value, echo_points);
      },
      inst);
}

namespace {

void dump_to(const Json& j, std::string& out, int indent) {
  auto pad = [&out](int n) { out.append(2 * static_cast<std::size_t>(n), ' '); };
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      pad(indent + 1);
      out += Json(it.key()).dump();
      out += ": ";
      dump_to(it.value(), out, indent + 1);
    }
    out += "\n";
    pad(indent);
    out += "}";
  } else if (j.is_array()) {
    bool has_object = false;
    for (const Json& v : j)
      if (v.is_object() || v.is_string()) has_object = true;
    const std::string compact = j.dump();
    if (!has_object && compact.size() <= 72) {
      out += compact;
      return;
    }
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    bool first = true;
    for (const Json& v : j) {
      if (!first) out += ",\n";
      first = false;
      pad(indent + 1);
      dump_to(v, out, indent + 1);
    }
    out += "\n";
    pad(indent);
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump_canonical(const Json& doc) {
  std::string out;
  dump_to(doc, out, 0);
  out += "\n";
  return out;
}

void write_instance(const std::filesystem::path& file, const Json& doc) {
  std::ofstream out(file);
  if (!out) throw input_error("input.file", "cannot write " + file.string());
  out << dump_canonical(doc);
}

}  // namespace ctop
