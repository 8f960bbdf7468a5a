#include "ctop/etale.hpp"

#include <string>

namespace ctop {

namespace {

void require_index(Nat value, Nat bound, const char* what) {
  if (value >= bound)
    throw input_error("input.range", std::string(what) + " " + std::to_string(value) +
                                         " outside point range " + std::to_string(bound));
}

std::string chart_text(std::size_t n) { return "chart " + std::to_string(n); }

}  // namespace

std::set<Nat> open_points(const std::vector<PointSet>& points, const std::set<Nat>& generators) {
  std::set<Nat> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (Nat a : generators)
      if (points[i].count(a)) {
        out.insert(static_cast<Nat>(i));
        break;
      }
  return out;
}

Report check_etale(const EtaleInstance& e) {
  Report rep;
  rep.merge_at("total space", check_relation(e.total_space));
  rep.merge_at("base space", check_relation(e.base_space));
  if (!rep.ok()) return rep;

  const std::vector<PointSet> total_points = enumerate_ideals(e.total_space);
  const std::vector<PointSet> base_points = enumerate_ideals(e.base_space);
  const Nat n_total = total_points.size();
  const Nat n_base = base_points.size();

  if (e.p_table.size() != n_total)
    throw input_error("input.table-shape", "projection table must cover every total point");
  for (Nat v : e.p_table) require_index(v, n_base, "projection entry");
  for (const SectionChart& chart : e.charts) {
    for (Nat a : chart.total_open)
      if (a >= e.total_space.carrier)
        throw input_error("input.range", "total-open generator outside carrier");
    for (Nat a : chart.base_open)
      if (a >= e.base_space.carrier)
        throw input_error("input.range", "base-open generator outside carrier");
    for (const auto& [y, x] : chart.section) {
      require_index(y, n_base, "section key");
      require_index(x, n_total, "section value");
    }
  }

  auto p = [&](Nat x) { return e.p_table[static_cast<std::size_t>(x)]; };

  std::set<Nat> covered;
  for (std::size_t n = 0; n < e.charts.size(); ++n) {
    const SectionChart& chart = e.charts[n];
    const std::set<Nat> upts = open_points(total_points, chart.total_open);
    const std::set<Nat> vpts = open_points(base_points, chart.base_open);
    covered.insert(upts.begin(), upts.end());

    for (Nat y : vpts)
      if (chart.section.count(y) == 0)
        rep.add("etale.section-domain",
                chart_text(n) + " section undefined at base point " + std::to_string(y));
    for (const auto& [y, x] : chart.section) {
      if (vpts.count(y) == 0) {
        rep.add("etale.section-domain",
                chart_text(n) + " section defined outside its base open at " + std::to_string(y));
        continue;
      }
      if (upts.count(x) == 0)
        rep.add("etale.section-range",
                chart_text(n) + " sends " + std::to_string(y) + " outside its total open");
      if (p(x) != y)
        rep.add("etale.section-right-inverse",
                chart_text(n) + " section of " + std::to_string(y) + " projects to " +
                    std::to_string(p(x)));
    }
    for (Nat x : upts) {
      if (vpts.count(p(x)) == 0) {
        rep.add("etale.section-left-inverse",
                chart_text(n) + " total point " + std::to_string(x) +
                    " projects outside the base open");
        continue;
      }
      auto it = chart.section.find(p(x));
      if (it != chart.section.end() && it->second != x)
        rep.add("etale.section-left-inverse",
                chart_text(n) + " section of p(" + std::to_string(x) + ") is " +
                    std::to_string(it->second));
    }
  }
  for (Nat x = 0; x < n_total; ++x)
    if (covered.count(x) == 0)
      rep.add("etale.coverage", "total point " + std::to_string(x) + " lies in no chart");
  return rep;
}

Nat locate_chart(const EtaleInstance& e, Nat x) {
  const std::vector<PointSet> total_points = enumerate_ideals(e.total_space);
  require_index(x, total_points.size(), "total point");
  for (std::size_t n = 0; n < e.charts.size(); ++n)
    for (Nat a : e.charts[n].total_open)
      if (total_points[static_cast<std::size_t>(x)].count(a)) return static_cast<Nat>(n);
  throw input_error("input.coverage", "point " + std::to_string(x) + " lies in no chart");
}

bool section_equality(const EtaleInstance& e, Nat y, Nat n, Nat m) {
  if (n >= e.charts.size() || m >= e.charts.size())
    throw input_error("input.range", "chart index out of range");
  const std::vector<PointSet> total_points = enumerate_ideals(e.total_space);
  const std::vector<PointSet> base_points = enumerate_ideals(e.base_space);
  const std::set<Nat> vn = open_points(base_points, e.charts[static_cast<std::size_t>(n)].base_open);
  const std::set<Nat> vm = open_points(base_points, e.charts[static_cast<std::size_t>(m)].base_open);
  if (vn.count(y) == 0 || vm.count(y) == 0)
    throw input_error("input.precondition", "base point outside a chart's base open");

  const auto& sec_n = e.charts[static_cast<std::size_t>(n)].section;
  const auto& sec_m = e.charts[static_cast<std::size_t>(m)].section;
  const auto itn = sec_n.find(y);
  const auto itm = sec_m.find(y);
  if (itn == sec_n.end() || itm == sec_m.end())
    throw input_error("input.precondition", "section undefined at the base point");
  const Nat sn = itn->second;
  const Nat sm = itm->second;
  const std::set<Nat> um = open_points(total_points, e.charts[static_cast<std::size_t>(m)].total_open);
  const bool via_membership = um.count(sn) != 0;
  if (via_membership != (sn == sm))
    throw input_error("etale.sections-inconsistent",
                      "membership and equality routes disagree; instance is not etale");
  return via_membership;
}

Report check_section_membership(const EtaleInstance& e) {
  Report rep;
  const std::vector<PointSet> total_points = enumerate_ideals(e.total_space);
  const std::vector<PointSet> base_points = enumerate_ideals(e.base_space);
  for (std::size_t n = 0; n < e.charts.size(); ++n) {
    const SectionChart& chart = e.charts[n];
    const std::set<Nat> upts = open_points(total_points, chart.total_open);
    const std::set<Nat> vpts = open_points(base_points, chart.base_open);
    for (Nat x = 0; x < total_points.size(); ++x) {
      const Nat y = e.p_table[static_cast<std::size_t>(x)];
      if (vpts.count(y) == 0) continue;
      auto it = chart.section.find(y);
      const bool is_section_value = it != chart.section.end() && it->second == x;
      if (is_section_value != (upts.count(x) != 0))
        rep.add("etale.section-membership",
                chart_text(n) + " at total point " + std::to_string(x) +
                    ": section equality and open membership disagree");
    }
  }
  return rep;
}

Report check_action(const ActionInstance& a) {
  Report rep = check_category(a.category);
  rep.merge(check_etale(a.etale));
  if (!rep.ok()) return rep;
  if (!(a.etale.base_space == a.category.obj_space))
    throw input_error("input.space-mismatch",
                      "etale base space differs from the category's object space");

  const Nat n_total = enumerate_ideals(a.etale.total_space).size();
  const Nat n_mor = enumerate_ideals(a.category.mor_space).size();
  auto p = [&](Nat x) { return a.etale.p_table[static_cast<std::size_t>(x)]; };
  auto src = [&](Nat f) { return a.category.src_table[static_cast<std::size_t>(f)]; };
  auto tar = [&](Nat f) { return a.category.tar_table[static_cast<std::size_t>(f)]; };

  // The table must be defined exactly on the action's domain.
  for (const auto& [fx, y] : a.act_table) {
    require_index(fx.first, n_mor, "action morphism");
    require_index(fx.second, n_total, "action point");
    require_index(y, n_total, "action value");
    if (src(fx.first) != p(fx.second))
      throw input_error("input.action-domain",
                        "action defined at (" + std::to_string(fx.first) + "," +
                            std::to_string(fx.second) + ") outside its domain");
  }
  for (Nat f = 0; f < n_mor; ++f)
    for (Nat x = 0; x < n_total; ++x)
      if (src(f) == p(x) && a.act_table.count({f, x}) == 0)
        throw input_error("input.action-domain",
                          "action undefined at (" + std::to_string(f) + "," + std::to_string(x) +
                              ")");

  for (const auto& [fx, y] : a.act_table) {
    const auto [f, x] = fx;
    if (p(y) != tar(f))
      rep.add("action.cond1", "p(" + std::to_string(f) + "." + std::to_string(x) +
                                  ") is not the morphism's target");
  }
  for (Nat x = 0; x < n_total; ++x) {
    const Nat idp = a.category.id_table[static_cast<std::size_t>(p(x))];
    auto it = a.act_table.find({idp, x});
    if (it == a.act_table.end() || it->second != x)
      rep.add("action.cond2", "identity does not fix total point " + std::to_string(x));
  }
  for (const auto& [gf, h] : a.category.comp_table) {
    const auto [g, f] = gf;
    for (Nat x = 0; x < n_total; ++x) {
      if (src(f) != p(x)) continue;
      const Nat fx = a.act_table.at({f, x});
      auto gfx = a.act_table.find({g, fx});
      auto hx = a.act_table.find({h, x});
      if (gfx == a.act_table.end() || hx == a.act_table.end()) {
        rep.add("action.cond3", "composite action undefined along (" + std::to_string(g) + "," +
                                    std::to_string(f) + ")." + std::to_string(x));
        continue;
      }
      if (gfx->second != hx->second)
        rep.add("action.cond3", "(" + std::to_string(g) + "*" + std::to_string(f) + ")." +
                                    std::to_string(x) + " differs from the iterated action");
    }
  }
  return rep;
}

Report check_equivariant(const EquivariantMapInstance& m) {
  if (!(m.from.category == m.to.category))
    throw input_error("input.category-mismatch", "the two actions use different categories");
  Report rep = check_action(m.from);
  rep.merge(check_action(m.to));
  if (!rep.ok()) return rep;

  const Nat n_from = enumerate_ideals(m.from.etale.total_space).size();
  const Nat n_to = enumerate_ideals(m.to.etale.total_space).size();
  if (m.h_table.size() != n_from)
    throw input_error("input.table-shape", "map table must cover every total point");
  for (Nat v : m.h_table) require_index(v, n_to, "map entry");

  auto h = [&](Nat x) { return m.h_table[static_cast<std::size_t>(x)]; };
  for (Nat x = 0; x < n_from; ++x)
    if (m.to.etale.p_table[static_cast<std::size_t>(h(x))] !=
        m.from.etale.p_table[static_cast<std::size_t>(x)])
      rep.add("equivariant.fiber", "map moves total point " + std::to_string(x) +
                                       " to a different fiber");
  if (!rep.ok()) return rep;

  for (const auto& [fx, y] : m.from.act_table) {
    const auto [f, x] = fx;
    const Nat lhs = h(y);
    auto it = m.to.act_table.find({f, h(x)});
    if (it == m.to.act_table.end() || it->second != lhs)
      rep.add("equivariant.commutes", "map does not commute with " + std::to_string(f) +
                                          " at total point " + std::to_string(x));
  }
  return rep;
}

}  // namespace ctop
