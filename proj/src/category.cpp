#include "ctop/category.hpp"

#include <algorithm>
#include <string>

namespace ctop {

namespace {

void require_index(Nat value, Nat bound, const char* what) {
  if (value >= bound)
    throw input_error("input.range", std::string(what) + " " + std::to_string(value) +
                                         " outside point range " + std::to_string(bound));
}

std::string mor_text(Nat f) { return "mor " + std::to_string(f); }
std::string obj_text(Nat c) { return "obj " + std::to_string(c); }

}  // namespace

Report check_category(const CategoryInstance& c) {
  Report rep;
  rep.merge_at("objects", check_relation(c.obj_space));
  rep.merge_at("morphisms", check_relation(c.mor_space));
  if (!rep.ok()) return rep;

  const Nat n_obj = enumerate_ideals(c.obj_space).size();
  const Nat n_mor = enumerate_ideals(c.mor_space).size();

  if (c.src_table.size() != n_mor || c.tar_table.size() != n_mor)
    throw input_error("input.table-shape", "src/tar tables must cover every morphism point");
  if (c.id_table.size() != n_obj)
    throw input_error("input.table-shape", "id table must cover every object point");
  for (Nat v : c.src_table) require_index(v, n_obj, "src entry");
  for (Nat v : c.tar_table) require_index(v, n_obj, "tar entry");
  for (Nat v : c.id_table) require_index(v, n_mor, "id entry");
  for (const auto& [gf, h] : c.comp_table) {
    require_index(gf.first, n_mor, "composition entry");
    require_index(gf.second, n_mor, "composition entry");
    require_index(h, n_mor, "composition result");
  }

  auto src = [&](Nat f) { return c.src_table[static_cast<std::size_t>(f)]; };
  auto tar = [&](Nat f) { return c.tar_table[static_cast<std::size_t>(f)]; };
  auto ident = [&](Nat o) { return c.id_table[static_cast<std::size_t>(o)]; };

  for (Nat o = 0; o < n_obj; ++o) {
    if (src(ident(o)) != o)
      rep.add("category.id-src", obj_text(o) + " identity has wrong source");
    if (tar(ident(o)) != o)
      rep.add("category.id-tar", obj_text(o) + " identity has wrong target");
  }

  // comp_table defined exactly on composable pairs
  for (Nat g = 0; g < n_mor; ++g)
    for (Nat f = 0; f < n_mor; ++f) {
      const bool composable = src(g) == tar(f);
      const bool present = c.comp_table.count({g, f}) != 0;
      if (composable && !present)
        rep.add("category.comp-domain",
                "composable pair (" + std::to_string(g) + "," + std::to_string(f) + ") undefined");
      if (!composable && present)
        rep.add("category.comp-domain",
                "non-composable pair (" + std::to_string(g) + "," + std::to_string(f) + ") defined");
    }
  for (const auto& [gf, h] : c.comp_table) {
    const auto [g, f] = gf;
    if (src(h) != src(f))
      rep.add("category.comp-src", mor_text(h) + " = " + std::to_string(g) + "*" +
                                       std::to_string(f) + " has wrong source");
    if (tar(h) != tar(g))
      rep.add("category.comp-tar", mor_text(h) + " = " + std::to_string(g) + "*" +
                                       std::to_string(f) + " has wrong target");
  }
  if (!rep.ok()) return rep;

  auto comp = [&](Nat g, Nat f) { return c.comp_table.at({g, f}); };

  for (Nat h = 0; h < n_mor; ++h)
    for (Nat g = 0; g < n_mor; ++g)
      for (Nat f = 0; f < n_mor; ++f) {
        if (src(h) != tar(g) || src(g) != tar(f)) continue;
        if (comp(comp(h, g), f) != comp(h, comp(g, f)))
          rep.add("category.assoc",
                  "(" + std::to_string(h) + "," + std::to_string(g) + "," + std::to_string(f) +
                      ") associates inconsistently");
      }
  for (Nat f = 0; f < n_mor; ++f) {
    if (comp(f, ident(src(f))) != f)
      rep.add("category.unit-right", mor_text(f) + " composed with source identity differs");
    if (comp(ident(tar(f)), f) != f)
      rep.add("category.unit-left", mor_text(f) + " composed with target identity differs");
  }
  return rep;
}

CategoryInstance discrete_category(const TransitiveRelation& x) {
  CategoryInstance c;
  c.obj_space = x;
  c.mor_space = x;
  const Nat n = enumerate_ideals(x).size();
  for (Nat i = 0; i < n; ++i) {
    c.src_table.push_back(i);
    c.tar_table.push_back(i);
    c.id_table.push_back(i);
    c.comp_table[{i, i}] = i;
  }
  return c;
}

CategoryInstance discrete_category(const ComputableSpace& x) {
  return discrete_category(x.over);
}

bool same_functor(const FunctorInstance& f, const FunctorInstance& g) {
  if (!(f.over == g.over)) return false;
  if (f.obj_table.size() != g.obj_table.size()) return false;
  if (f.mor_table.size() != g.mor_table.size()) return false;
  for (std::size_t i = 0; i < f.obj_table.size(); ++i)
    if (!same_per(f.obj_table[i], g.obj_table[i])) return false;
  for (std::size_t i = 0; i < f.mor_table.size(); ++i)
    if (!same_morphism(f.mor_table[i], g.mor_table[i])) return false;
  return true;
}

Report check_functor(const FunctorInstance& f) {
  Report rep = check_category(f.over);
  if (!rep.ok()) return rep;

  const Nat n_obj = enumerate_ideals(f.over.obj_space).size();
  const Nat n_mor = enumerate_ideals(f.over.mor_space).size();
  if (f.obj_table.size() != n_obj)
    throw input_error("input.table-shape", "object table must cover every object point");
  if (f.mor_table.size() != n_mor)
    throw input_error("input.table-shape", "morphism table must cover every morphism point");

  for (Nat c = 0; c < n_obj; ++c)
    rep.merge_at(obj_text(c), check_per(f.obj_table[static_cast<std::size_t>(c)]));
  for (Nat m = 0; m < n_mor; ++m)
    rep.merge_at(mor_text(m), check_morphism(f.mor_table[static_cast<std::size_t>(m)]));
  if (!rep.ok()) return rep;

  auto src = [&](Nat m) { return f.over.src_table[static_cast<std::size_t>(m)]; };
  auto tar = [&](Nat m) { return f.over.tar_table[static_cast<std::size_t>(m)]; };
  const auto& obj = f.obj_table;
  const auto& mor = f.mor_table;

  bool compatible = true;
  for (Nat m = 0; m < n_mor; ++m) {
    if (!same_per(mor[static_cast<std::size_t>(m)].src, obj[static_cast<std::size_t>(src(m))])) {
      rep.add("functor.src-compat", mor_text(m) + " image source differs from source image");
      compatible = false;
    }
    if (!same_per(mor[static_cast<std::size_t>(m)].tar, obj[static_cast<std::size_t>(tar(m))])) {
      rep.add("functor.tar-compat", mor_text(m) + " image target differs from target image");
      compatible = false;
    }
  }
  for (Nat c = 0; c < n_obj; ++c) {
    const Nat idc = f.over.id_table[static_cast<std::size_t>(c)];
    if (!same_morphism(mor[static_cast<std::size_t>(idc)],
                       identity_morphism(obj[static_cast<std::size_t>(c)])))
      rep.add("functor.preserves-id", obj_text(c) + " identity not sent to the identity");
  }
  if (compatible) {
    for (const auto& [gf, h] : f.over.comp_table) {
      const auto [g, fm] = gf;
      const PerMorphism composite = compose_morphisms(mor[static_cast<std::size_t>(g)],
                                                      mor[static_cast<std::size_t>(fm)]);
      if (!same_morphism(mor[static_cast<std::size_t>(h)], composite))
        rep.add("functor.preserves-comp",
                "image of " + std::to_string(g) + "*" + std::to_string(fm) +
                    " differs from composite of images");
    }
  }
  return rep;
}

Report check_nat_trans(const NatTransInstance& n) {
  if (!(n.from.over == n.to.over))
    throw input_error("input.category-mismatch", "functors live over different categories");
  Report rep = check_functor(n.from);
  rep.merge(check_functor(n.to));
  if (!rep.ok()) return rep;

  const Nat n_obj = enumerate_ideals(n.from.over.obj_space).size();
  if (n.eta.size() != n_obj)
    throw input_error("input.table-shape", "component table must cover every object point");
  for (Nat c = 0; c < n_obj; ++c)
    rep.merge_at(obj_text(c) + " component", check_morphism(n.eta[static_cast<std::size_t>(c)]));
  if (!rep.ok()) return rep;

  bool compatible = true;
  for (Nat c = 0; c < n_obj; ++c) {
    const auto& comp = n.eta[static_cast<std::size_t>(c)];
    if (!same_per(comp.src, n.from.obj_table[static_cast<std::size_t>(c)])) {
      rep.add("nat.component-src", obj_text(c) + " component has wrong source");
      compatible = false;
    }
    if (!same_per(comp.tar, n.to.obj_table[static_cast<std::size_t>(c)])) {
      rep.add("nat.component-tar", obj_text(c) + " component has wrong target");
      compatible = false;
    }
  }
  if (!compatible) return rep;

  const Nat n_mor = enumerate_ideals(n.from.over.mor_space).size();
  for (Nat f = 0; f < n_mor; ++f) {
    const Nat s = n.from.over.src_table[static_cast<std::size_t>(f)];
    const Nat t = n.from.over.tar_table[static_cast<std::size_t>(f)];
    const PerMorphism lhs =
        compose_morphisms(n.eta[static_cast<std::size_t>(t)],
                          n.from.mor_table[static_cast<std::size_t>(f)]);
    const PerMorphism rhs =
        compose_morphisms(n.to.mor_table[static_cast<std::size_t>(f)],
                          n.eta[static_cast<std::size_t>(s)]);
    if (!same_morphism(lhs, rhs))
      rep.add("nat.naturality", mor_text(f) + " square does not commute");
  }
  return rep;
}

NatTransInstance identity_nat_trans(const FunctorInstance& f) {
  NatTransInstance n{f, f, {}};
  for (const Per& p : f.obj_table) n.eta.push_back(identity_morphism(p));
  return n;
}

NatTransInstance vertical_compose(const NatTransInstance& after, const NatTransInstance& before) {
  if (!same_functor(before.to, after.from))
    throw input_error("input.functor-mismatch", "transformations are not composable");
  NatTransInstance out{before.from, after.to, {}};
  for (std::size_t c = 0; c < before.eta.size(); ++c)
    out.eta.push_back(compose_morphisms(after.eta[c], before.eta[c]));
  return out;
}

EnumOperator operator_from_point_table(const TransitiveRelation& source,
                                       const TransitiveRelation& target,
                                       const std::vector<Nat>& table) {
  const std::vector<PointSet> src_points = enumerate_ideals(source);
  const std::vector<PointSet> tar_points = enumerate_ideals(target);
  if (table.size() != src_points.size())
    throw input_error("input.table-shape", "point table must cover every source point");
  for (Nat v : table) require_index(v, tar_points.size(), "point table entry");

  for (std::size_t i = 0; i < src_points.size(); ++i)
    for (std::size_t j = 0; j < src_points.size(); ++j) {
      if (!std::includes(src_points[j].begin(), src_points[j].end(),
                         src_points[i].begin(), src_points[i].end()))
        continue;
      const PointSet& fi = tar_points[static_cast<std::size_t>(table[i])];
      const PointSet& fj = tar_points[static_cast<std::size_t>(table[j])];
      if (!std::includes(fj.begin(), fj.end(), fi.begin(), fi.end()))
        throw input_error("input.not-monotone",
                          "point table is not monotone, so no operator realizes it");
    }

  EnumOperator op{source, target, {}};
  for (std::size_t i = 0; i < src_points.size(); ++i)
    for (Nat b : tar_points[static_cast<std::size_t>(table[i])])
      op.graph.insert({src_points[i], b});
  return op;
}

}  // namespace ctop
