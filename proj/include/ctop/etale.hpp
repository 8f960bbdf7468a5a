#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ctop/category.hpp"
#include "ctop/ideal_space.hpp"

namespace ctop {

// One chart of a local homeomorphism: a c.e. open of the total space, a c.e.
// open of the base, and the section mapping base points of the latter to
// total points of the former. Opens are stored as generator index sets over
// the owning instance's relations.
struct SectionChart {
  std::set<Nat> total_open;      // generators of U over the total space
  std::set<Nat> base_open;       // generators of V over the base space
  std::map<Nat, Nat> section;    // base point -> total point, defined on V

  friend bool operator==(const SectionChart&, const SectionChart&) = default;
};

// A local homeomorphism p from a total space onto a base space, presented by
// a point table and a finite chart list. Valid when the chart opens cover
// the total space and each section inverts p's restriction both ways.
struct EtaleInstance {
  TransitiveRelation total_space, base_space;
  std::vector<Nat> p_table;  // total point -> base point
  std::vector<SectionChart> charts;

  friend bool operator==(const EtaleInstance&, const EtaleInstance&) = default;
};

// Point indices of a space lying in the open spanned by `generators`.
std::set<Nat> open_points(const std::vector<PointSet>& points, const std::set<Nat>& generators);

Report check_etale(const EtaleInstance& e);

// Least chart index whose total open contains x. Coverage of a valid
// instance guarantees existence; input error otherwise.
Nat locate_chart(const EtaleInstance& e, Nat x);

// Whether sections n and m agree at base point y (which must lie in both base
// opens). Decided by membership of s_n(y) in chart m's total open, which for
// a local homeomorphism is equivalent to point equality; the direct equality
// route is cross-checked and a disagreement raises an input error.
bool section_equality(const EtaleInstance& e, Nat y, Nat n, Nat m);

// The section-vs-membership law, exhaustively: whenever p(x) = y lies in
// chart n's base open, x equals s_n(y) exactly when x lies in chart n's
// total open.
Report check_section_membership(const EtaleInstance& e);

// An etale space over the object space of a category, together with an
// action table interpreting each morphism as a map between fibers. The
// action table must be defined exactly on pairs (f, x) with src(f) = p(x).
struct ActionInstance {
  CategoryInstance category;
  EtaleInstance etale;
  std::map<std::pair<Nat, Nat>, Nat> act_table;  // (morphism point, total point) -> total point
};

// Action conditions over a valid category and etale instance:
//   action.cond1   p(f.x) = tar(f)
//   action.cond2   id(p(x)).x = x
//   action.cond3   (g*f).x = g.(f.x)
Report check_action(const ActionInstance& a);

// A fiber-preserving map commuting with the actions.
struct EquivariantMapInstance {
  ActionInstance from, to;
  std::vector<Nat> h_table;  // total point of `from` -> total point of `to`
};

Report check_equivariant(const EquivariantMapInstance& m);

}  // namespace ctop
