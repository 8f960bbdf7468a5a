#pragma once

// Hand-built instances shared across the test suites. Values are small
// enough to verify by hand; the comments state what each one is.

#include "ctop/category.hpp"
#include "ctop/cntsets.hpp"
#include "ctop/equivalence.hpp"
#include "ctop/etale.hpp"
#include "ctop/ideal_space.hpp"

namespace ctop::fixtures {

// Sierpinski space: points {0} and {0,1}.
inline TransitiveRelation rel_sierp() {
  return TransitiveRelation{2, {{0, 0}, {0, 1}, {1, 1}}};
}

// n incomparable reflexive elements: the discrete n-point space.
inline TransitiveRelation rel_flat(Nat n) {
  TransitiveRelation r{n, {}};
  for (Nat i = 0; i < n; ++i) r.pairs.insert({i, i});
  return r;
}

inline TransitiveRelation rel_one_point() { return rel_flat(1); }

// Set codes 0..3 ordered by inclusion of the coded sets: the powerset of a
// two-element set.
inline TransitiveRelation rel_powerset2() {
  TransitiveRelation r{4, {}};
  for (Nat i = 0; i < 4; ++i)
    for (Nat j = 0; j < 4; ++j)
      if ((i & j) == i) r.pairs.insert({i, j});
  return r;
}

// Two classes {0,1} and {2}.
inline Per per_2cls() {
  return Per{3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}}};
}

// One class {0}.
inline Per per_pt() { return Per{1, {{0, 0}}}; }

inline Per per_empty() { return Per{0, {}}; }

// The saturated collapse of both classes of per_2cls onto per_pt's class.
inline PerMorphism collapse_2cls_to_pt() {
  return PerMorphism{{{0, 0}, {1, 0}, {2, 0}}, per_2cls(), per_pt()};
}

// The two-element group as a one-object category: morphism points are
// e = 0 and s = 1 with s*s = e.
inline CategoryInstance cat_z2() {
  CategoryInstance c;
  c.obj_space = rel_one_point();
  c.mor_space = rel_flat(2);
  c.src_table = {0, 0};
  c.tar_table = {0, 0};
  c.id_table = {0};
  c.comp_table[{0, 0}] = 0;
  c.comp_table[{0, 1}] = 1;
  c.comp_table[{1, 0}] = 1;
  c.comp_table[{1, 1}] = 0;
  return c;
}

// The idempotent one-object monoid: s*s = s.
inline CategoryInstance cat_idempotent() {
  CategoryInstance c = cat_z2();
  c.comp_table[{1, 1}] = 1;
  return c;
}

// Two objects with a single non-identity arrow 0 -> 1. Morphism points:
// id0 = 0, id1 = 1, arrow = 2.
inline CategoryInstance cat_two_obj_arrow() {
  CategoryInstance c;
  c.obj_space = rel_flat(2);
  c.mor_space = rel_flat(3);
  c.src_table = {0, 1, 0};
  c.tar_table = {0, 1, 1};
  c.id_table = {0, 1};
  c.comp_table[{0, 0}] = 0;
  c.comp_table[{1, 1}] = 1;
  c.comp_table[{2, 0}] = 2;
  c.comp_table[{1, 2}] = 2;
  return c;
}

// Functor over the discrete two-point category with per_2cls over point 0
// and per_pt over point 1.
inline FunctorInstance functor_f0() {
  FunctorInstance f;
  f.over = discrete_category(rel_flat(2));
  f.obj_table = {per_2cls(), per_pt()};
  f.mor_table = {identity_morphism(per_2cls()), identity_morphism(per_pt())};
  return f;
}

// Z2 acting on per_2cls by swapping its two classes.
inline FunctorInstance functor_f1() {
  FunctorInstance f;
  f.over = cat_z2();
  f.obj_table = {per_2cls()};
  f.mor_table = {identity_morphism(per_2cls()),
                 PerMorphism{{{0, 2}, {1, 2}, {2, 0}, {2, 1}}, per_2cls(), per_2cls()}};
  return f;
}

// Every object to the one-class per, every morphism to its identity.
inline FunctorInstance functor_const(const CategoryInstance& base) {
  FunctorInstance f;
  f.over = base;
  const Nat n_obj = enumerate_ideals(base.obj_space).size();
  const Nat n_mor = enumerate_ideals(base.mor_space).size();
  for (Nat i = 0; i < n_obj; ++i) f.obj_table.push_back(per_pt());
  for (Nat i = 0; i < n_mor; ++i) f.mor_table.push_back(identity_morphism(per_pt()));
  return f;
}

// The collapse transformation functor_f0 -> functor_const.
inline NatTransInstance nat_collapse_f0() {
  NatTransInstance n;
  n.from = functor_f0();
  n.to = functor_const(n.from.over);
  n.eta = {collapse_2cls_to_pt(), identity_morphism(per_pt())};
  return n;
}

// The identity map on rel as a one-chart etale space over itself.
inline EtaleInstance etale_identity(const TransitiveRelation& rel) {
  EtaleInstance e;
  e.total_space = rel;
  e.base_space = rel;
  const Nat n = enumerate_ideals(rel).size();
  for (Nat i = 0; i < n; ++i) e.p_table.push_back(i);
  SectionChart chart;
  for (Nat a = 0; a < rel.carrier; ++a)
    if (rel.related(a, a)) {
      chart.total_open.insert(a);
      chart.base_open.insert(a);
    }
  for (Nat i = 0; i < n; ++i) chart.section[i] = i;
  e.charts.push_back(std::move(chart));
  return e;
}

// The trivial action of the discrete category of rel on the identity etale
// space over rel.
inline ActionInstance cset_trivial(const TransitiveRelation& rel) {
  ActionInstance a;
  a.category = discrete_category(rel);
  a.etale = etale_identity(rel);
  const Nat n = enumerate_ideals(rel).size();
  for (Nat i = 0; i < n; ++i) a.act_table[{i, i}] = i;
  return a;
}

// Z2 swapping the two points of a discrete fiber over the one-object base.
inline ActionInstance cset_z2_swap() {
  ActionInstance a;
  a.category = cat_z2();
  a.etale.total_space = rel_flat(2);
  a.etale.base_space = rel_one_point();
  a.etale.p_table = {0, 0};
  SectionChart c0, c1;
  c0.total_open = {0};
  c0.base_open = {0};
  c0.section[0] = 0;
  c1.total_open = {1};
  c1.base_open = {0};
  c1.section[0] = 1;
  a.etale.charts = {c0, c1};
  a.act_table[{0, 0}] = 0;
  a.act_table[{0, 1}] = 1;
  a.act_table[{1, 0}] = 1;
  a.act_table[{1, 1}] = 0;
  return a;
}

// cset_z2_swap with a duplicated chart and a whole-space chart appended:
// the same C-set under a redundant presentation.
inline ActionInstance cset_z2_swap_redundant() {
  ActionInstance a = cset_z2_swap();
  a.etale.charts.push_back(a.etale.charts[0]);
  return a;
}

// The identity equivariant map on a C-set.
inline EquivariantMapInstance equivariant_identity(const ActionInstance& a) {
  EquivariantMapInstance m{a, a, {}};
  const Nat n = enumerate_ideals(a.etale.total_space).size();
  for (Nat i = 0; i < n; ++i) m.h_table.push_back(i);
  return m;
}

}  // namespace ctop::fixtures
