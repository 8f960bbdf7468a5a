#include "ctop/commands.hpp"

#include <algorithm>
#include <sstream>

namespace ctop {

namespace {

std::string status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::violation: return "violation";
    case Status::input_error: return "input-error";
  }
  return "input-error";
}

int status_code(Status s) {
  switch (s) {
    case Status::ok: return 0;
    case Status::violation: return 1;
    case Status::input_error: return 2;
  }
  return 2;
}

Json findings_json(const Report& rep) {
  Json out = Json::array();
  for (const Finding& f : rep.findings) {
    Json entry = Json::object();
    entry["rule"] = f.rule;
    entry["witness"] = f.witness;
    out.push_back(std::move(entry));
  }
  return out;
}

CommandResult make_result(const std::string& command, const std::string& input, Status status,
                          const Report& rep) {
  CommandResult res;
  res.exit_code = status_code(status);
  res.json = Json::object();
  res.json["command"] = command;
  res.json["input"] = input;
  res.json["status"] = status_name(status);
  res.json["findings"] = findings_json(rep);

  std::ostringstream text;
  text << command << " " << input << ": " << status_name(status) << "\n";
  for (const Finding& f : rep.findings) text << "  " << f.rule << ": " << f.witness << "\n";
  res.text = text.str();
  return res;
}

CommandResult input_error_result(const std::string& command, const std::string& input,
                                 const input_error& e) {
  Report rep;
  rep.add(e.rule(), e.what());
  return make_result(command, input, Status::input_error, rep);
}

template <typename Fn>
CommandResult guarded(const std::string& command, const std::string& input, Fn&& fn) {
  try {
    return fn();
  } catch (const input_error& e) {
    return input_error_result(command, input, e);
  }
}

// Unit laws for a valid PER morphism.
void morphism_unit_laws(const PerMorphism& m, Report& rep) {
  if (compose_morphisms(identity_morphism(m.tar), m).graph != m.graph)
    rep.add("cnt.unit-left", "composition with the target identity changes the graph");
  if (compose_morphisms(m, identity_morphism(m.src)).graph != m.graph)
    rep.add("cnt.unit-right", "composition with the source identity changes the graph");
}

Report laws_relation(const TransitiveRelation& r) {
  Report rep = check_relation(r);
  if (!rep.ok()) return rep;
  // Cross-check the principal-lower-set enumeration against the subset scan.
  if (r.carrier <= 12) {
    const std::vector<PointSet> points = enumerate_ideals(r);
    std::set<PointSet> expected;
    for (Nat mask = 0; mask < (Nat{1} << r.carrier); ++mask) {
      PointSet s;
      for (Nat e = 0; e < r.carrier; ++e)
        if (mask & (Nat{1} << e)) s.insert(e);
      if (is_ideal(r, s)) expected.insert(std::move(s));
    }
    if (std::set<PointSet>(points.begin(), points.end()) != expected)
      rep.add("relation.ideal-oracle", "enumerated points differ from the subset scan");
  }
  return rep;
}

Report laws_per(const Per& p) {
  Report rep = check_per(p);
  if (!rep.ok()) return rep;
  const std::vector<PointSet> classes = per_classes(p);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      PointSet common;
      std::set_intersection(classes[i].begin(), classes[i].end(), classes[j].begin(),
                            classes[j].end(), std::inserter(common, common.begin()));
      if (!common.empty())
        rep.add("per.class-disjoint", "classes " + std::to_string(i) + " and " +
                                          std::to_string(j) + " overlap");
    }
  const PerMorphism id = identity_morphism(p);
  rep.merge_at("identity morphism", check_morphism(id));
  if (rep.ok()) morphism_unit_laws(id, rep);
  return rep;
}

Report laws_witness(const OvertDiscreteWitness& w) {
  Report rep = check_witness(w);
  if (!rep.ok()) return rep;
  try {
    spatialize(w);  // verifies the recovered maps are mutually inverse
  } catch (const input_error& e) {
    rep.add("spatialize.inverse", e.what());
  }
  return rep;
}

Report laws_nat_trans(const NatTransInstance& n) {
  Report rep = check_nat_trans(n);
  if (!rep.ok()) return rep;
  const NatTransInstance left = vertical_compose(identity_nat_trans(n.to), n);
  const NatTransInstance right = vertical_compose(n, identity_nat_trans(n.from));
  for (std::size_t c = 0; c < n.eta.size(); ++c) {
    if (left.eta[c].graph != n.eta[c].graph)
      rep.add("nat.unit-left", "composition with the identity transformation changes component " +
                                   std::to_string(c));
    if (right.eta[c].graph != n.eta[c].graph)
      rep.add("nat.unit-right", "composition with the identity transformation changes component " +
                                    std::to_string(c));
  }
  return rep;
}

Report roundtrip_nat_trans(const NatTransInstance& n) {
  Report rep;
  const NatTransInstance back = equivariant_to_nat_trans(nat_trans_to_equivariant(n));
  for (std::size_t c = 0; c < n.eta.size(); ++c)
    if (back.eta[c].graph != n.eta[c].graph)
      rep.add("roundtrip.nat", "component " + std::to_string(c) + " graph not reproduced");
  return rep;
}

}  // namespace

Report check_instance(const Instance& inst) {
  return std::visit(
      [](const auto& value) -> Report {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, TransitiveRelation>) return check_relation(value);
        else if constexpr (std::is_same_v<T, Per>) return check_per(value);
        else if constexpr (std::is_same_v<T, PerMorphism>) return check_morphism(value);
        else if constexpr (std::is_same_v<T, OvertDiscreteWitness>) return check_witness(value);
        else if constexpr (std::is_same_v<T, CategoryInstance>) return check_category(value);
        else if constexpr (std::is_same_v<T, FunctorInstance>) return check_functor(value);
        else if constexpr (std::is_same_v<T, NatTransInstance>) return check_nat_trans(value);
        else if constexpr (std::is_same_v<T, EtaleInstance>) return check_etale(value);
        else if constexpr (std::is_same_v<T, ActionInstance>) return check_action(value);
        else return check_equivariant(value);
      },
      inst);
}

Report laws_instance(const Instance& inst) {
  return std::visit(
      [](const auto& value) -> Report {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, TransitiveRelation>) {
          return laws_relation(value);
        } else if constexpr (std::is_same_v<T, Per>) {
          return laws_per(value);
        } else if constexpr (std::is_same_v<T, PerMorphism>) {
          Report rep = check_morphism(value);
          if (rep.ok()) morphism_unit_laws(value, rep);
          return rep;
        } else if constexpr (std::is_same_v<T, OvertDiscreteWitness>) {
          return laws_witness(value);
        } else if constexpr (std::is_same_v<T, CategoryInstance>) {
          return check_category(value);
        } else if constexpr (std::is_same_v<T, FunctorInstance>) {
          return check_functor(value);
        } else if constexpr (std::is_same_v<T, NatTransInstance>) {
          return laws_nat_trans(value);
        } else if constexpr (std::is_same_v<T, EtaleInstance>) {
          Report rep = check_etale(value);
          if (rep.ok()) rep.merge(check_section_membership(value));
          return rep;
        } else if constexpr (std::is_same_v<T, ActionInstance>) {
          Report rep = check_action(value);
          if (rep.ok()) rep.merge(check_section_membership(value.etale));
          return rep;
        } else {
          return check_equivariant(value);
        }
      },
      inst);
}

Report roundtrip_instance(const Instance& inst) {
  return std::visit(
      [](const auto& value) -> Report {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, FunctorInstance>) {
          return roundtrip_functor(value);
        } else if constexpr (std::is_same_v<T, NatTransInstance>) {
          return roundtrip_nat_trans(value);
        } else if constexpr (std::is_same_v<T, ActionInstance>) {
          return roundtrip_cset(value).report;
        } else if constexpr (std::is_same_v<T, EquivariantMapInstance>) {
          return roundtrip_equivariant(value);
        } else {
          throw input_error("input.kind",
                            "roundtrip expects a functor, nat-trans, cset, or equivariant file");
        }
      },
      inst);
}

CommandResult cmd_check(const std::filesystem::path& file, const CommandOptions& opt) {
  return guarded("check", file.string(), [&] {
    const Instance inst = load_instance(file, {opt.closure});
    const Report rep = check_instance(inst);
    return make_result("check", file.string(), rep.status(), rep);
  });
}

CommandResult cmd_ideals(const std::filesystem::path& file, const CommandOptions& opt) {
  return guarded("ideals", file.string(), [&] {
    const Instance inst = load_instance(file, {opt.closure});
    const auto* rel = std::get_if<TransitiveRelation>(&inst);
    if (!rel) throw input_error("input.kind", "ideals expects a relation file");
    const Report rep = check_relation(*rel);
    CommandResult res = make_result("ideals", file.string(), rep.status(), rep);
    if (!rep.ok()) return res;

    const std::vector<PointSet> points = enumerate_ideals(*rel);
    Json pts = Json::array();
    std::ostringstream text;
    text << res.text << points.size() << " points\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
      Json p = Json::array();
      text << "  " << i << ": [";
      bool first = true;
      for (Nat a : points[i]) {
        p.push_back(a);
        text << (first ? "" : ",") << a;
        first = false;
      }
      text << "]\n";
      pts.push_back(std::move(p));
    }
    res.json["points"] = std::move(pts);
    res.text = text.str();
    return res;
  });
}

CommandResult cmd_spatialize(const std::filesystem::path& file, const CommandOptions& opt) {
  return guarded("spatialize", file.string(), [&] {
    const Instance inst = load_instance(file, {opt.closure});
    const auto* w = std::get_if<OvertDiscreteWitness>(&inst);
    if (!w) throw input_error("input.kind", "spatialize expects a witness file");
    const Report rep = check_witness(*w);
    CommandResult res = make_result("spatialize", file.string(), rep.status(), rep);
    if (!rep.ok()) return res;

    const SpatializationResult result = spatialize(*w);
    res.json["per"] = to_json(result.per);
    Json g = Json::array(), h = Json::array();
    for (Nat v : result.g_map) g.push_back(v);
    for (Nat v : result.h_map) h.push_back(v);
    res.json["g"] = std::move(g);
    res.json["h"] = std::move(h);

    std::ostringstream text;
    text << res.text << "recovered per with " << per_classes(result.per).size() << " classes\n";
    res.text = text.str();
    return res;
  });
}

CommandResult cmd_compose(const std::filesystem::path& first, const std::filesystem::path& second,
                          const CommandOptions& opt) {
  const std::string input = first.string() + " " + second.string();
  return guarded("compose", input, [&] {
    const Instance a = load_instance(first, {opt.closure});
    const Instance b = load_instance(second, {opt.closure});
    if (kind_of(a) != kind_of(b))
      throw input_error("input.kind", "compose expects two files of the same kind");

    Report rep;
    Json result;
    if (const auto* after = std::get_if<PerMorphism>(&a)) {
      const auto& before = std::get<PerMorphism>(b);
      rep.merge_at("first", check_morphism(*after));
      rep.merge_at("second", check_morphism(before));
      if (rep.ok()) {
        const PerMorphism composite = compose_morphisms(*after, before);
        rep.merge_at("composite", check_morphism(composite));
        result = to_json(composite);
      }
    } else if (const auto* after_nat = std::get_if<NatTransInstance>(&a)) {
      const auto& before = std::get<NatTransInstance>(b);
      rep.merge_at("first", check_nat_trans(*after_nat));
      rep.merge_at("second", check_nat_trans(before));
      if (rep.ok()) {
        const NatTransInstance composite = vertical_compose(*after_nat, before);
        rep.merge_at("composite", check_nat_trans(composite));
        result = to_json(composite);
      }
    } else {
      throw input_error("input.kind", "compose expects cnt-morphism or nat-trans files");
    }

    CommandResult res = make_result("compose", input, rep.status(), rep);
    if (!result.is_null()) {
      res.json["result"] = result;
      res.text += dump_canonical(result);
    }
    return res;
  });
}

CommandResult cmd_laws(const std::filesystem::path& file, const CommandOptions& opt) {
  return guarded("laws", file.string(), [&] {
    const Instance inst = load_instance(file, {opt.closure});
    const Report rep = laws_instance(inst);
    return make_result("laws", file.string(), rep.status(), rep);
  });
}

namespace {

CommandResult construction_command(const std::string& command, const std::filesystem::path& file,
                                   const std::optional<std::filesystem::path>& out,
                                   const CommandOptions& opt, Kind expect,
                                   Instance (*construct)(const Instance&)) {
  return guarded(command, file.string(), [&] {
    const Instance inst = load_instance(file, {opt.closure});
    if (kind_of(inst) != expect)
      throw input_error("input.kind", command + " expects a " + kind_name(expect) + " file");
    const Report pre = check_instance(inst);
    CommandResult res = make_result(command, file.string(), pre.status(), pre);
    if (!pre.ok()) return res;

    const Instance built = construct(inst);
    const Report post = check_instance(built);
    res = make_result(command, file.string(), post.status(), post);
    const Json doc = instance_to_json(built, true);
    res.json["result"] = doc;
    if (out) {
      write_instance(*out, doc);
      res.text += "wrote " + out->string() + "\n";
    } else {
      res.text += dump_canonical(doc);
    }
    return res;
  });
}

}  // namespace

CommandResult cmd_to_etale(const std::filesystem::path& file,
                           const std::optional<std::filesystem::path>& out,
                           const CommandOptions& opt) {
  return construction_command("to-etale", file, out, opt, Kind::functor, [](const Instance& inst) {
    return Instance{functor_to_cset(std::get<FunctorInstance>(inst))};
  });
}

CommandResult cmd_to_functor(const std::filesystem::path& file,
                             const std::optional<std::filesystem::path>& out,
                             const CommandOptions& opt) {
  return construction_command("to-functor", file, out, opt, Kind::cset, [](const Instance& inst) {
    return Instance{cset_to_functor(std::get<ActionInstance>(inst))};
  });
}

CommandResult cmd_roundtrip(const std::filesystem::path& file, const CommandOptions& opt) {
  return guarded("roundtrip", file.string(), [&] {
    const Instance inst = load_instance(file, {opt.closure});
    const Report pre = check_instance(inst);
    if (!pre.ok()) return make_result("roundtrip", file.string(), pre.status(), pre);
    const Report rep = roundtrip_instance(inst);
    return make_result("roundtrip", file.string(), rep.status(), rep);
  });
}

CommandResult cmd_suite(const std::filesystem::path& dir, const CommandOptions& opt) {
  return guarded("suite", dir.string(), [&] {
    if (!std::filesystem::is_directory(dir))
      throw input_error("input.file", dir.string() + " is not a directory");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    Status worst = Status::ok;
    Json file_reports = Json::array();
    std::ostringstream text;
    for (const std::filesystem::path& file : files) {
      Report rep;
      Status status = Status::ok;
      try {
        const Instance inst = load_instance(file, {opt.closure});
        rep = laws_instance(inst);
        const Kind k = kind_of(inst);
        if (rep.ok() && (k == Kind::functor || k == Kind::nat_trans || k == Kind::cset ||
                         k == Kind::equivariant))
          rep.merge(roundtrip_instance(inst));
        status = rep.status();
      } catch (const input_error& e) {
        rep.add(e.rule(), e.what());
        status = Status::input_error;
      }
      if (status_code(status) > status_code(worst)) worst = status;

      Json entry = Json::object();
      entry["file"] = file.filename().string();
      entry["status"] = status_name(status);
      entry["findings"] = findings_json(rep);
      file_reports.push_back(std::move(entry));

      text << file.filename().string() << ": " << status_name(status) << "\n";
      for (const Finding& f : rep.findings) text << "  " << f.rule << ": " << f.witness << "\n";
    }

    CommandResult res;
    res.exit_code = status_code(worst);
    res.json = Json::object();
    res.json["command"] = "suite";
    res.json["input"] = dir.string();
    res.json["status"] = status_name(worst);
    res.json["files"] = std::move(file_reports);
    res.text = "suite " + dir.string() + ": " + status_name(worst) + "\n" + text.str();
    return res;
  });
}

}  // namespace ctop
