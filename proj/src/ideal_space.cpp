#include "ctop/ideal_space.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>

namespace ctop {

namespace {

std::string pair_text(Nat a, Nat b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void require_in_carrier(const TransitiveRelation& r, Nat e, const char* what) {
  if (e >= r.carrier)
    throw input_error("input.range",
                      std::string(what) + " " + std::to_string(e) +
                          " outside carrier " + std::to_string(r.carrier));
}

}  // namespace

Report check_relation(const TransitiveRelation& r) {
  for (const auto& [a, b] : r.pairs) {
    require_in_carrier(r, a, "relation element");
    require_in_carrier(r, b, "relation element");
  }
  Report rep;
  for (const auto& [a, b] : r.pairs)
    for (const auto& [c, d] : r.pairs)
      if (b == c && !r.related(a, d))
        rep.add("relation.transitivity",
                pair_text(a, b) + " and " + pair_text(c, d) + " without " + pair_text(a, d));
  return rep;
}

TransitiveRelation transitive_closure(const TransitiveRelation& r) {
  TransitiveRelation out = r;
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<std::pair<Nat, Nat>> next = out.pairs;
    for (const auto& [a, b] : out.pairs)
      for (const auto& [c, d] : out.pairs)
        if (b == c && next.insert({a, d}).second) changed = true;
    out.pairs = std::move(next);
  }
  return out;
}

bool is_ideal(const TransitiveRelation& r, const PointSet& s) {
  for (Nat a : s) require_in_carrier(r, a, "ideal element");
  if (s.empty()) return false;
  // lower set
  for (Nat a : s)
    for (Nat b = 0; b < r.carrier; ++b)
      if (r.related(b, a) && s.count(b) == 0) return false;
  // directed
  for (Nat a : s)
    for (Nat b : s) {
      bool bounded = false;
      for (Nat c : s)
        if (r.related(a, c) && r.related(b, c)) {
          bounded = true;
          break;
        }
      if (!bounded) return false;
    }
  return true;
}

std::vector<PointSet> enumerate_ideals(const TransitiveRelation& r, Nat max_carrier) {
  if (r.carrier > max_carrier)
    throw input_error("input.capacity",
                      "carrier " + std::to_string(r.carrier) + " over the enumeration bound " +
                          std::to_string(max_carrier));
  std::set<PointSet> ideals;
  for (Nat c = 0; c < r.carrier; ++c) {
    if (!r.related(c, c)) continue;
    PointSet down;
    for (Nat a = 0; a < r.carrier; ++a)
      if (r.related(a, c)) down.insert(a);
    ideals.insert(std::move(down));
  }
  return std::vector<PointSet>(ideals.begin(), ideals.end());
}

Nat point_index(const std::vector<PointSet>& points, const PointSet& point) {
  auto it = std::lower_bound(points.begin(), points.end(), point);
  if (it == points.end() || *it != point)
    throw input_error("input.point", "element set is not a point of the space");
  return static_cast<Nat>(it - points.begin());
}

bool open_contains(const CeOpen& u, const Ideal& point) {
  if (!(u.over == point.over))
    throw input_error("input.space-mismatch", "open and point live over different relations");
  auto extent = u.generators.finite_extent();
  if (!extent)
    throw input_error("input.precondition", "exact membership needs a finite generator extent");
  for (Nat a : *extent)
    if (point.elements.count(a)) return true;
  return false;
}

Semi open_contains_fueled(const CeOpen& u, const Enumeration& point_elements, Fuel fuel) {
  Enumeration merged = dovetail({u.generators.items, point_elements});
  std::set<Nat> gens, elems;
  for (Nat t = 0; t < fuel.max_steps; ++t) {
    if (auto code = merged.at(t)) {
      auto [src, item] = pair_decode(*code);
      (src == 0 ? gens : elems).insert(item);
      if (src == 0 ? elems.count(item) != 0 : gens.count(item) != 0) return Semi::yes;
    }
  }
  return Semi::unknown;
}

EnumOperator identity_operator(const TransitiveRelation& r) {
  EnumOperator op{r, r, {}};
  for (Nat a = 0; a < r.carrier; ++a) op.graph.insert({PointSet{a}, a});
  return op;
}

PointSet apply_operator_raw(const EnumOperator& op, const PointSet& elements) {
  PointSet out;
  for (const auto& [premise, b] : op.graph)
    if (std::includes(elements.begin(), elements.end(), premise.begin(), premise.end()))
      out.insert(b);
  return out;
}

Ideal apply_operator(const EnumOperator& op, const Ideal& point) {
  if (!(op.source == point.over))
    throw input_error("input.space-mismatch", "operator applied to a point of the wrong space");
  PointSet image = apply_operator_raw(op, point.elements);
  if (!is_ideal(op.target, image))
    throw input_error("operator.ideal-preservation", "image fails the ideal conditions");
  return Ideal{op.target, std::move(image)};
}

Enumeration apply_operator_stream(const EnumOperator& op, Enumeration input) {
  auto graph = std::make_shared<std::set<std::pair<PointSet, Nat>>>(op.graph);
  auto fn = [graph, input](Nat step) -> std::optional<Nat> {
    // Replay the first step+1 rounds; round t reads input step t and then
    // emits the least not-yet-emitted enabled output, if any.
    PointSet seen, emitted;
    std::optional<Nat> last;
    for (Nat t = 0; t <= step; ++t) {
      if (auto item = input.at(t)) seen.insert(*item);
      last = std::nullopt;
      for (const auto& [premise, b] : *graph) {
        if (emitted.count(b)) continue;
        if (std::includes(seen.begin(), seen.end(), premise.begin(), premise.end())) {
          emitted.insert(b);
          last = b;
          break;
        }
      }
    }
    return last;
  };
  return Enumeration::from_fn(std::move(fn));
}

Report check_operator(const EnumOperator& op) {
  for (const auto& [premise, b] : op.graph) {
    for (Nat a : premise) require_in_carrier(op.source, a, "operator premise element");
    require_in_carrier(op.target, b, "operator output");
  }
  Report rep;
  for (const PointSet& point : enumerate_ideals(op.source)) {
    PointSet image = apply_operator_raw(op, point);
    if (!is_ideal(op.target, image))
      rep.add("operator.ideal-preservation", "image of a point fails the ideal conditions");
  }
  return rep;
}

EnumOperator compose_operators(const EnumOperator& g, const EnumOperator& f) {
  if (!(f.target == g.source))
    throw input_error("input.space-mismatch", "operators are not composable");

  // Options for producing each intermediate element via f.
  std::map<Nat, std::vector<PointSet>> producers;
  for (const auto& [premise, b] : f.graph) producers[b].push_back(premise);

  EnumOperator out{f.source, g.target, {}};
  constexpr Nat kMaxChoices = Nat{1} << 20;
  for (const auto& [mid, c] : g.graph) {
    std::vector<Nat> mids(mid.begin(), mid.end());
    bool producible = true;
    Nat choices = 1;
    for (Nat b : mids) {
      auto it = producers.find(b);
      if (it == producers.end()) {
        producible = false;
        break;
      }
      choices *= it->second.size();
      if (choices > kMaxChoices)
        throw input_error("input.capacity", "operator composition graph too large");
    }
    if (!producible) continue;

    // Walk the cartesian product of producer choices, one union per choice.
    std::vector<Nat> pick(mids.size(), 0);
    while (true) {
      PointSet premise;
      for (std::size_t i = 0; i < mids.size(); ++i) {
        const PointSet& part = producers[mids[i]][pick[i]];
        premise.insert(part.begin(), part.end());
      }
      out.graph.insert({std::move(premise), c});
      std::size_t i = 0;
      for (; i < mids.size(); ++i) {
        if (++pick[i] < producers[mids[i]].size()) break;
        pick[i] = 0;
      }
      if (i == mids.size()) break;
    }
  }
  return out;
}

TransitiveRelation product_relation(const TransitiveRelation& r1,
                                    const TransitiveRelation& r2) {
  TransitiveRelation out;
  if (r1.carrier == 0 || r2.carrier == 0) return out;
  out.carrier = pair_encode(r1.carrier - 1, r2.carrier - 1) + 1;
  for (const auto& [a, b] : r1.pairs)
    for (const auto& [a2, b2] : r2.pairs)
      out.pairs.insert({pair_encode(a, a2), pair_encode(b, b2)});
  return out;
}

std::pair<EnumOperator, EnumOperator> product_projections(const TransitiveRelation& r1,
                                                          const TransitiveRelation& r2) {
  TransitiveRelation prod = product_relation(r1, r2);
  EnumOperator left{prod, r1, {}}, right{prod, r2, {}};
  for (Nat a = 0; a < r1.carrier; ++a)
    for (Nat b = 0; b < r2.carrier; ++b) {
      const Nat code = pair_encode(a, b);
      left.graph.insert({PointSet{code}, a});
      right.graph.insert({PointSet{code}, b});
    }
  return {std::move(left), std::move(right)};
}

}  // namespace ctop
