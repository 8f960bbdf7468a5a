#include "ctop/equivalence.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ctop {

namespace {

PointSet class_of(const Per& p, Nat n) {
  PointSet cls;
  for (Nat m = 0; m < p.carrier; ++m)
    if (p.related(n, m)) cls.insert(m);
  return cls;
}

std::map<FiberPoint, Nat> index_of(const std::vector<FiberPoint>& pts) {
  std::map<FiberPoint, Nat> idx;
  for (std::size_t i = 0; i < pts.size(); ++i) idx[pts[i]] = static_cast<Nat>(i);
  return idx;
}

Nat lookup(const std::map<FiberPoint, Nat>& idx, const FiberPoint& pt, const char* what) {
  auto it = idx.find(pt);
  if (it == idx.end())
    throw input_error("input.point", std::string(what) + " is not a fiber point");
  return it->second;
}

void require_valid(const Report& rep, const char* rule, const char* what) {
  if (!rep.ok())
    throw input_error(rule, std::string(what) + ": " + rep.findings.front().rule + " (" +
                                rep.findings.front().witness + ")");
}

}  // namespace

std::vector<FiberPoint> fiber_points(const FunctorInstance& f) {
  std::vector<FiberPoint> pts;
  for (std::size_t ic = 0; ic < f.obj_table.size(); ++ic)
    for (PointSet& cls : per_classes(f.obj_table[ic]))
      pts.push_back(FiberPoint{static_cast<Nat>(ic), std::move(cls)});
  return pts;
}

ActionInstance functor_to_cset(const FunctorInstance& f) {
  require_valid(check_functor(f), "input.invalid-functor", "functor fails validation");

  const std::vector<PointSet> obj_points = enumerate_ideals(f.over.obj_space);
  const std::vector<FiberPoint> pts = fiber_points(f);
  const std::map<FiberPoint, Nat> idx = index_of(pts);

  ActionInstance out;
  out.category = f.over;
  out.etale.base_space = f.over.obj_space;
  out.etale.total_space.carrier = pts.size();
  for (Nat i = 0; i < pts.size(); ++i) out.etale.total_space.pairs.insert({i, i});
  for (const FiberPoint& pt : pts) out.etale.p_table.push_back(pt.base);

  // Principal point of each reflexive base element, for generator sets.
  std::map<Nat, Nat> principal;
  for (Nat c = 0; c < f.over.obj_space.carrier; ++c) {
    if (!f.over.obj_space.related(c, c)) continue;
    PointSet down;
    for (Nat a = 0; a < f.over.obj_space.carrier; ++a)
      if (f.over.obj_space.related(a, c)) down.insert(a);
    principal[c] = point_index(obj_points, down);
  }

  Nat chart_count = 0;
  for (const Per& p : f.obj_table) chart_count = std::max(chart_count, p.carrier);

  for (Nat n = 0; n < chart_count; ++n) {
    std::set<Nat> base_pts;
    for (std::size_t ic = 0; ic < f.obj_table.size(); ++ic)
      if (f.obj_table[ic].related(n, n)) base_pts.insert(static_cast<Nat>(ic));

    // The chart's base must be open: reflexivity of n upward-closed along
    // point inclusion. Table functors violating this are not realizable.
    for (Nat ic : base_pts)
      for (std::size_t jc = 0; jc < obj_points.size(); ++jc) {
        if (base_pts.count(static_cast<Nat>(jc))) continue;
        const PointSet& small = obj_points[static_cast<std::size_t>(ic)];
        const PointSet& big = obj_points[jc];
        if (std::includes(big.begin(), big.end(), small.begin(), small.end()))
          throw input_error("input.functor-not-continuous",
                            "reflexivity of " + std::to_string(n) +
                                " is not open over the object space");
      }

    SectionChart chart;
    for (const auto& [c, pidx] : principal)
      if (base_pts.count(pidx)) chart.base_open.insert(c);
    for (Nat i = 0; i < pts.size(); ++i)
      if (base_pts.count(pts[static_cast<std::size_t>(i)].base) &&
          pts[static_cast<std::size_t>(i)].cls.count(n))
        chart.total_open.insert(i);
    for (Nat ic : base_pts) {
      const PointSet cls = class_of(f.obj_table[static_cast<std::size_t>(ic)], n);
      chart.section[ic] = lookup(idx, FiberPoint{ic, cls}, "section image");
    }
    out.etale.charts.push_back(std::move(chart));
  }

  for (std::size_t fm = 0; fm < f.mor_table.size(); ++fm) {
    const Nat source = f.over.src_table[fm];
    const Nat target = f.over.tar_table[fm];
    const PerMorphism& mor = f.mor_table[fm];
    for (Nat i = 0; i < pts.size(); ++i) {
      const FiberPoint& pt = pts[static_cast<std::size_t>(i)];
      if (pt.base != source) continue;
      const Nat rep = *pt.cls.begin();
      PointSet image;
      for (const auto& [a, b] : mor.graph)
        if (a == rep) image.insert(b);
      out.act_table[{static_cast<Nat>(fm), i}] =
          lookup(idx, FiberPoint{target, std::move(image)}, "action image");
    }
  }
  return out;
}

FunctorInstance cset_to_functor(const ActionInstance& a) {
  require_valid(check_action(a), "input.invalid-cset", "C-set fails validation");

  const std::vector<PointSet> base_points = enumerate_ideals(a.etale.base_space);
  const std::vector<PointSet> total_points = enumerate_ideals(a.etale.total_space);
  const Nat chart_count = a.etale.charts.size();

  std::vector<std::set<Nat>> upts, vpts;
  for (const SectionChart& chart : a.etale.charts) {
    upts.push_back(open_points(total_points, chart.total_open));
    vpts.push_back(open_points(base_points, chart.base_open));
  }

  FunctorInstance out;
  out.over = a.category;
  for (Nat c = 0; c < base_points.size(); ++c) {
    Per p;
    p.carrier = chart_count;
    for (Nat n = 0; n < chart_count; ++n) {
      if (vpts[static_cast<std::size_t>(n)].count(c) == 0) continue;
      for (Nat m = 0; m < chart_count; ++m) {
        if (vpts[static_cast<std::size_t>(m)].count(c) == 0) continue;
        if (section_equality(a.etale, c, n, m)) p.pairs.insert({n, m});
      }
    }
    out.obj_table.push_back(std::move(p));
  }

  for (Nat f = 0; f < a.category.src_table.size(); ++f) {
    const Nat source = a.category.src_table[static_cast<std::size_t>(f)];
    const Nat target = a.category.tar_table[static_cast<std::size_t>(f)];
    PerMorphism mor;
    mor.src = out.obj_table[static_cast<std::size_t>(source)];
    mor.tar = out.obj_table[static_cast<std::size_t>(target)];
    for (Nat n = 0; n < chart_count; ++n) {
      if (vpts[static_cast<std::size_t>(n)].count(source) == 0) continue;
      const Nat moved = a.act_table.at({f, a.etale.charts[static_cast<std::size_t>(n)].section.at(source)});
      for (Nat m = 0; m < chart_count; ++m) {
        if (vpts[static_cast<std::size_t>(m)].count(target) == 0) continue;
        if (upts[static_cast<std::size_t>(m)].count(moved)) mor.graph.insert({n, m});
      }
    }
    out.mor_table.push_back(std::move(mor));
  }
  return out;
}

EquivariantMapInstance nat_trans_to_equivariant(const NatTransInstance& n) {
  require_valid(check_nat_trans(n), "input.invalid-nat-trans",
                "natural transformation fails validation");

  EquivariantMapInstance out{functor_to_cset(n.from), functor_to_cset(n.to), {}};
  const std::vector<FiberPoint> from_pts = fiber_points(n.from);
  const std::map<FiberPoint, Nat> to_idx = index_of(fiber_points(n.to));

  for (const FiberPoint& pt : from_pts) {
    const Nat rep = *pt.cls.begin();
    PointSet image;
    for (const auto& [a, b] : n.eta[static_cast<std::size_t>(pt.base)].graph)
      if (a == rep) image.insert(b);
    out.h_table.push_back(lookup(to_idx, FiberPoint{pt.base, std::move(image)}, "map image"));
  }
  return out;
}

NatTransInstance equivariant_to_nat_trans(const EquivariantMapInstance& m) {
  require_valid(check_equivariant(m), "input.invalid-equivariant",
                "equivariant map fails validation");

  NatTransInstance out{cset_to_functor(m.from), cset_to_functor(m.to), {}};

  const std::vector<PointSet> base_points = enumerate_ideals(m.from.etale.base_space);
  const std::vector<PointSet> from_total = enumerate_ideals(m.from.etale.total_space);
  const std::vector<PointSet> to_total = enumerate_ideals(m.to.etale.total_space);

  std::vector<std::set<Nat>> from_vpts, to_vpts, to_upts;
  for (const SectionChart& chart : m.from.etale.charts)
    from_vpts.push_back(open_points(base_points, chart.base_open));
  for (const SectionChart& chart : m.to.etale.charts) {
    to_vpts.push_back(open_points(base_points, chart.base_open));
    to_upts.push_back(open_points(to_total, chart.total_open));
  }

  for (Nat c = 0; c < base_points.size(); ++c) {
    PerMorphism component;
    component.src = out.from.obj_table[static_cast<std::size_t>(c)];
    component.tar = out.to.obj_table[static_cast<std::size_t>(c)];
    for (Nat n = 0; n < m.from.etale.charts.size(); ++n) {
      if (from_vpts[static_cast<std::size_t>(n)].count(c) == 0) continue;
      const Nat moved =
          m.h_table[static_cast<std::size_t>(m.from.etale.charts[static_cast<std::size_t>(n)].section.at(c))];
      for (Nat k = 0; k < m.to.etale.charts.size(); ++k) {
        if (to_vpts[static_cast<std::size_t>(k)].count(c) == 0) continue;
        if (to_upts[static_cast<std::size_t>(k)].count(moved)) component.graph.insert({n, k});
      }
    }
    out.eta.push_back(std::move(component));
  }
  return out;
}

Report roundtrip_functor(const FunctorInstance& f) {
  const FunctorInstance back = cset_to_functor(functor_to_cset(f));
  Report rep;
  for (std::size_t c = 0; c < f.obj_table.size(); ++c)
    if (!same_per(f.obj_table[c], back.obj_table[c]))
      rep.add("roundtrip.obj", "object point " + std::to_string(c) + " per not reproduced");
  for (std::size_t m = 0; m < f.mor_table.size(); ++m)
    if (!same_morphism(f.mor_table[m], back.mor_table[m]))
      rep.add("roundtrip.mor", "morphism point " + std::to_string(m) + " graph not reproduced");
  return rep;
}

CsetRoundtrip roundtrip_cset(const ActionInstance& a) {
  CsetRoundtrip out;
  const FunctorInstance functor = cset_to_functor(a);
  out.rebuilt = functor_to_cset(functor);

  const std::vector<PointSet> total_points = enumerate_ideals(a.etale.total_space);
  const std::map<FiberPoint, Nat> idx = index_of(fiber_points(functor));
  const std::vector<FiberPoint> rebuilt_pts = fiber_points(functor);

  for (Nat x = 0; x < total_points.size(); ++x) {
    const Nat n = locate_chart(a.etale, x);
    const Nat c = a.etale.p_table[static_cast<std::size_t>(x)];
    out.iso.theta.push_back(
        lookup(idx, FiberPoint{c, class_of(functor.obj_table[static_cast<std::size_t>(c)], n)},
               "roundtrip image"));
  }
  for (const FiberPoint& pt : rebuilt_pts) {
    const Nat n = *pt.cls.begin();
    out.iso.theta_inv.push_back(
        a.etale.charts[static_cast<std::size_t>(n)].section.at(pt.base));
  }

  Report& rep = out.report;
  for (Nat x = 0; x < out.iso.theta.size(); ++x)
    if (out.iso.theta_inv[static_cast<std::size_t>(out.iso.theta[static_cast<std::size_t>(x)])] != x)
      rep.add("roundtrip.theta-inverse",
              "total point " + std::to_string(x) + " not recovered");
  for (Nat j = 0; j < out.iso.theta_inv.size(); ++j)
    if (out.iso.theta[static_cast<std::size_t>(out.iso.theta_inv[static_cast<std::size_t>(j)])] != j)
      rep.add("roundtrip.theta-prime-inverse",
              "rebuilt point " + std::to_string(j) + " not recovered");

  const Report fwd = check_equivariant(EquivariantMapInstance{a, out.rebuilt, out.iso.theta});
  if (!fwd.ok())
    rep.add("roundtrip.theta-equivariant", fwd.findings.front().rule + ": " +
                                               fwd.findings.front().witness);
  const Report bwd = check_equivariant(EquivariantMapInstance{out.rebuilt, a, out.iso.theta_inv});
  if (!bwd.ok())
    rep.add("roundtrip.theta-prime-equivariant", bwd.findings.front().rule + ": " +
                                                     bwd.findings.front().witness);
  return out;
}

Report roundtrip_equivariant(const EquivariantMapInstance& m) {
  const CsetRoundtrip from = roundtrip_cset(m.from);
  const CsetRoundtrip to = roundtrip_cset(m.to);
  Report rep;
  rep.merge_at("source", from.report);
  rep.merge_at("target", to.report);

  const EquivariantMapInstance rebuilt = nat_trans_to_equivariant(equivariant_to_nat_trans(m));
  for (Nat x = 0; x < m.h_table.size(); ++x) {
    const Nat via_map = to.iso.theta[static_cast<std::size_t>(m.h_table[static_cast<std::size_t>(x)])];
    const Nat via_rebuilt =
        rebuilt.h_table[static_cast<std::size_t>(from.iso.theta[static_cast<std::size_t>(x)])];
    if (via_map != via_rebuilt)
      rep.add("roundtrip.square",
              "naturality square does not close at total point " + std::to_string(x));
  }
  return rep;
}

}  // namespace ctop
