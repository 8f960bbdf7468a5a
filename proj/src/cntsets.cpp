#include "ctop/cntsets.hpp"

#include <algorithm>
#include <string>

namespace ctop {

namespace {

std::string pair_text(Nat a, Nat b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void require_in_carrier(Nat carrier, Nat e, const char* what) {
  if (e >= carrier)
    throw input_error("input.range",
                      std::string(what) + " " + std::to_string(e) +
                          " outside carrier " + std::to_string(carrier));
}

}  // namespace

bool same_per(const Per& a, const Per& b) { return a.pairs == b.pairs; }

Report check_per(const Per& p) {
  for (const auto& [a, b] : p.pairs) {
    require_in_carrier(p.carrier, a, "per element");
    require_in_carrier(p.carrier, b, "per element");
  }
  Report rep;
  for (const auto& [a, b] : p.pairs)
    if (!p.related(b, a))
      rep.add("per.symmetry", pair_text(a, b) + " present but " + pair_text(b, a) + " missing");
  for (const auto& [a, b] : p.pairs)
    for (const auto& [c, d] : p.pairs)
      if (b == c && !p.related(a, d))
        rep.add("per.transitivity",
                pair_text(a, b) + " and " + pair_text(c, d) + " without " + pair_text(a, d));
  return rep;
}

TransitiveRelation class_space(const Per& p) { return TransitiveRelation{p.carrier, p.pairs}; }

std::vector<PointSet> per_classes(const Per& p) { return enumerate_ideals(class_space(p)); }

bool same_morphism(const PerMorphism& a, const PerMorphism& b) {
  return a.graph == b.graph && same_per(a.src, b.src) && same_per(a.tar, b.tar);
}

PerMorphism identity_morphism(const Per& p) { return PerMorphism{p.pairs, p, p}; }

Report check_morphism(const PerMorphism& m) {
  Report rep;
  rep.merge_at("src per", check_per(m.src));
  rep.merge_at("tar per", check_per(m.tar));
  for (const auto& [a, b] : m.graph) {
    require_in_carrier(m.src.carrier, a, "graph source element");
    require_in_carrier(m.tar.carrier, b, "graph target element");
  }

  for (const auto& [a, b] : m.graph) {
    if (!m.src.related(a, a) || !m.tar.related(b, b))
      rep.add("cnt.defined", pair_text(a, b) + " relates non-reflexive elements");
  }
  for (const auto& [a, b] : m.graph) {
    for (Nat a2 = 0; a2 < m.src.carrier; ++a2)
      if (m.src.related(a, a2) && m.graph.count({a2, b}) == 0)
        rep.add("cnt.src-saturation",
                pair_text(a, b) + " with " + std::to_string(a) + "~" + std::to_string(a2) +
                    " but " + pair_text(a2, b) + " missing");
    for (Nat b2 = 0; b2 < m.tar.carrier; ++b2)
      if (m.tar.related(b, b2) && m.graph.count({a, b2}) == 0)
        rep.add("cnt.tar-saturation",
                pair_text(a, b) + " with " + std::to_string(b) + "~" + std::to_string(b2) +
                    " but " + pair_text(a, b2) + " missing");
  }
  for (const auto& [a, b] : m.graph)
    for (const auto& [a2, b2] : m.graph)
      if (a == a2 && !m.tar.related(b, b2))
        rep.add("cnt.single-valued",
                pair_text(a, b) + " and " + pair_text(a2, b2) + " with unrelated targets");
  for (Nat a = 0; a < m.src.carrier; ++a) {
    if (!m.src.related(a, a)) continue;
    bool has_image = false;
    for (const auto& [a2, b] : m.graph)
      if (a2 == a) {
        has_image = true;
        break;
      }
    if (!has_image)
      rep.add("cnt.total", "reflexive " + std::to_string(a) + " has no image");
  }
  return rep;
}

std::set<std::pair<Nat, Nat>> saturate_graph(std::set<std::pair<Nat, Nat>> graph,
                                             const Per& src, const Per& tar) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<std::pair<Nat, Nat>> next = graph;
    for (const auto& [a, b] : graph) {
      for (Nat a2 = 0; a2 < src.carrier; ++a2)
        if (src.related(a, a2) && next.insert({a2, b}).second) changed = true;
      for (Nat b2 = 0; b2 < tar.carrier; ++b2)
        if (tar.related(b, b2) && next.insert({a, b2}).second) changed = true;
    }
    graph = std::move(next);
  }
  return graph;
}

PerMorphism compose_morphisms(const PerMorphism& after, const PerMorphism& before) {
  if (!same_per(before.tar, after.src))
    throw input_error("input.morphism-mismatch", "morphisms are not composable");
  PerMorphism out{{}, before.src, after.tar};
  for (const auto& [a, b] : before.graph)
    for (const auto& [b2, c] : after.graph)
      if (b == b2) out.graph.insert({a, c});
  return out;
}

EnumOperator morphism_operator(const PerMorphism& m) {
  EnumOperator op{class_space(m.src), class_space(m.tar), {}};
  for (const auto& [a, b] : m.graph) op.graph.insert({PointSet{a}, b});
  return op;
}

Report check_witness(const OvertDiscreteWitness& w) {
  for (Nat a : w.nonempty) require_in_carrier(w.relation.carrier, a, "nonempty-witness element");
  for (const auto& [a, b] : w.equality) {
    require_in_carrier(w.relation.carrier, a, "equality-witness element");
    require_in_carrier(w.relation.carrier, b, "equality-witness element");
  }

  Report rep = check_relation(w.relation);
  if (!rep.ok()) return rep;

  const std::vector<PointSet> points = enumerate_ideals(w.relation);

  // nonempty = { a | [a] is nonempty }
  std::set<Nat> occupied;
  for (const PointSet& point : points) occupied.insert(point.begin(), point.end());
  for (Nat a : w.nonempty)
    if (occupied.count(a) == 0)
      rep.add("witness.nonempty-unsound",
              "basic open of " + std::to_string(a) + " is empty");
  for (Nat a : occupied)
    if (w.nonempty.count(a) == 0)
      rep.add("witness.nonempty-incomplete",
              "basic open of " + std::to_string(a) + " is nonempty but unlisted");

  for (const auto& [a, b] : w.equality)
    if (w.nonempty.count(a) == 0 || w.nonempty.count(b) == 0)
      rep.add("witness.equality-support",
              pair_text(a, b) + " not supported on the nonempty witness");

  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) {
      bool witnessed = false;
      for (const auto& [a, b] : w.equality)
        if (points[i].count(a) && points[j].count(b)) {
          witnessed = true;
          break;
        }
      if (i == j && !witnessed)
        rep.add("witness.equality-incomplete",
                "point " + std::to_string(i) + " has no self-witness");
      if (i != j && witnessed)
        rep.add("witness.equality-unsound",
                "distinct points " + std::to_string(i) + "," + std::to_string(j) +
                    " witnessed equal");
    }
  return rep;
}

SpatializationResult spatialize(const OvertDiscreteWitness& w) {
  Report validity = check_witness(w);
  if (!validity.ok())
    throw input_error("witness.invalid",
                      "witness fails validation: " + validity.findings.front().rule);

  const TransitiveRelation& rel = w.relation;
  std::set<Nat> selected;
  for (Nat c : w.nonempty) {
    for (const auto& [a, b] : w.equality)
      if (rel.related(a, c) && rel.related(b, c)) {
        selected.insert(c);
        break;
      }
  }

  Per per;
  per.carrier = rel.carrier;
  for (Nat a : selected)
    for (Nat b : selected)
      for (Nat c : selected)
        if (rel.related(a, c) && rel.related(b, c)) {
          per.pairs.insert({a, b});
          break;
        }

  const std::vector<PointSet> rel_points = enumerate_ideals(rel);
  const std::vector<PointSet> per_points = per_classes(per);

  SpatializationResult out;
  out.per = per;
  for (const PointSet& point : rel_points) {
    PointSet image;
    for (Nat a : point)
      if (per.related(a, a)) image.insert(a);
    out.g_map.push_back(point_index(per_points, image));
  }
  for (const PointSet& cls : per_points) {
    PointSet image;
    for (Nat b : selected)
      for (Nat a : cls)
        if (rel.related(b, a)) {
          image.insert(b);
          break;
        }
    out.h_map.push_back(point_index(rel_points, image));
  }

  for (std::size_t i = 0; i < out.g_map.size(); ++i)
    if (out.h_map[static_cast<std::size_t>(out.g_map[i])] != i)
      throw input_error("witness.invalid", "recovered maps are not mutually inverse");
  for (std::size_t j = 0; j < out.h_map.size(); ++j)
    if (out.g_map[static_cast<std::size_t>(out.h_map[j])] != j)
      throw input_error("witness.invalid", "recovered maps are not mutually inverse");
  return out;
}

OvertDiscreteWitness canonical_witness(const Per& p) {
  OvertDiscreteWitness w;
  w.relation = class_space(p);
  for (Nat a = 0; a < p.carrier; ++a)
    if (p.related(a, a)) w.nonempty.insert(a);
  w.equality = p.pairs;
  return w;
}

}  // namespace ctop
