#include <doctest.h>

#include <random>

#include "ctop/category.hpp"

#include "fixtures.hpp"
#include "generators.hpp"

using namespace ctop;
using namespace ctop::fixtures;

namespace {

// Independent evaluator of the four law families, written directly against
// the tables.
bool lawful(const CategoryInstance& c) {
  const Nat n_mor = enumerate_ideals(c.mor_space).size();
  const Nat n_obj = enumerate_ideals(c.obj_space).size();
  auto src = [&](Nat f) { return c.src_table[static_cast<std::size_t>(f)]; };
  auto tar = [&](Nat f) { return c.tar_table[static_cast<std::size_t>(f)]; };
  for (Nat g = 0; g < n_mor; ++g)
    for (Nat f = 0; f < n_mor; ++f)
      if ((src(g) == tar(f)) != (c.comp_table.count({g, f}) != 0)) return false;
  for (const auto& [gf, h] : c.comp_table)
    if (src(h) != src(gf.second) || tar(h) != tar(gf.first)) return false;
  for (Nat o = 0; o < n_obj; ++o) {
    const Nat i = c.id_table[static_cast<std::size_t>(o)];
    if (src(i) != o || tar(i) != o) return false;
  }
  for (Nat h = 0; h < n_mor; ++h)
    for (Nat g = 0; g < n_mor; ++g)
      for (Nat f = 0; f < n_mor; ++f) {
        if (src(h) != tar(g) || src(g) != tar(f)) continue;
        if (c.comp_table.at({c.comp_table.at({h, g}), f}) !=
            c.comp_table.at({h, c.comp_table.at({g, f})}))
          return false;
      }
  for (Nat f = 0; f < n_mor; ++f) {
    if (c.comp_table.at({f, c.id_table[static_cast<std::size_t>(src(f))]}) != f) return false;
    if (c.comp_table.at({c.id_table[static_cast<std::size_t>(tar(f))], f}) != f) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("discrete categories validate and have one identity per point") {
  CHECK(check_category(discrete_category(rel_flat(2))).ok());
  CHECK(discrete_category(ComputableSpace::full_space(rel_sierp())) ==
        discrete_category(rel_sierp()));
  const CategoryInstance terminal = discrete_category(rel_one_point());
  CHECK(check_category(terminal).ok());
  CHECK(terminal.id_table.size() == 1);
  const CategoryInstance sierp = discrete_category(rel_sierp());
  CHECK(check_category(sierp).ok());
  CHECK(sierp.id_table.size() == 2);
  CHECK(sierp.comp_table.size() == 2);
}

TEST_CASE("the group and monoid tables validate") {
  CHECK(check_category(cat_z2()).ok());
  CHECK(check_category(cat_idempotent()).ok());
  CHECK(check_category(cat_two_obj_arrow()).ok());
}

TEST_CASE("broken tables are reported") {
  CategoryInstance c = cat_z2();
  c.comp_table[{1, 1}] = 1;
  c.comp_table[{0, 1}] = 0;  // s composed with the identity must stay s
  const Report rep = check_category(c);
  bool unit = false;
  for (const Finding& f : rep.findings)
    if (f.rule == "category.unit-right" || f.rule == "category.unit-left") unit = true;
  CHECK(unit);

  CategoryInstance missing = cat_z2();
  missing.comp_table.erase({1, 1});
  bool domain = false;
  for (const Finding& f : check_category(missing).findings)
    if (f.rule == "category.comp-domain") domain = true;
  CHECK(domain);

  CategoryInstance assoc = cat_two_obj_arrow();
  assoc.comp_table[{2, 0}] = 0;  // arrow after id0 with the wrong source/target
  CHECK_FALSE(check_category(assoc).ok());

  CategoryInstance dangling = cat_z2();
  dangling.id_table = {7};
  CHECK_THROWS_AS(check_category(dangling), input_error);
}

TEST_CASE("the checker agrees with the direct law evaluator on perturbed tables") {
  gen::Rng rng(31);
  const CategoryInstance bases[] = {discrete_category(rel_flat(3)), cat_z2(),
                                    cat_idempotent(), cat_two_obj_arrow()};
  for (int round = 0; round < 200; ++round) {
    CategoryInstance c = bases[rng() % 4];
    // Perturb one composition entry (possibly to itself).
    if (!c.comp_table.empty()) {
      auto it = c.comp_table.begin();
      std::advance(it, rng() % c.comp_table.size());
      it->second = rng() % c.src_table.size();
    }
    CHECK(check_category(c).ok() == lawful(c));
  }
}

TEST_CASE("functor fixtures validate") {
  CHECK(check_functor(functor_f0()).ok());
  CHECK(check_functor(functor_f1()).ok());
  CHECK(check_functor(functor_const(cat_two_obj_arrow())).ok());
}

TEST_CASE("swapping classes twice must give the identity") {
  FunctorInstance f = functor_f1();
  // Replace the involution with the collapse onto one class: s*s = e breaks.
  f.mor_table[1] = gen::morphism_from_class_map(per_2cls(), per_2cls(), {0, 0});
  const Report rep = check_functor(f);
  bool comp = false;
  for (const Finding& finding : rep.findings)
    if (finding.rule == "functor.preserves-comp") comp = true;
  CHECK(comp);
}

TEST_CASE("identity points must map to identity morphisms") {
  FunctorInstance f = functor_f0();
  f.mor_table[1] = PerMorphism{{}, per_pt(), per_pt()};
  const Report rep = check_functor(f);
  bool found = false;
  for (const Finding& finding : rep.findings)
    if (finding.rule == "functor.preserves-id" || finding.rule == "cnt.total") found = true;
  CHECK(found);
}

TEST_CASE("source and target compatibility is enforced") {
  FunctorInstance f = functor_f0();
  f.mor_table[1] = identity_morphism(per_2cls());  // wrong object's identity
  const Report rep = check_functor(f);
  bool compat = false;
  for (const Finding& finding : rep.findings)
    if (finding.rule == "functor.src-compat" || finding.rule == "functor.tar-compat")
      compat = true;
  CHECK(compat);
}

TEST_CASE("identity transformations are natural") {
  CHECK(check_nat_trans(identity_nat_trans(functor_f0())).ok());
  CHECK(check_nat_trans(identity_nat_trans(functor_f1())).ok());
  CHECK(check_nat_trans(nat_collapse_f0()).ok());
}

TEST_CASE("over a discrete base any compatible family is natural") {
  gen::Rng rng(32);
  for (int round = 0; round < 40; ++round) {
    FunctorInstance from = gen::random_discrete_functor(rng, rel_flat(1 + rng() % 3), 4);
    FunctorInstance to = from;
    for (Per& p : to.obj_table) p = gen::random_inhabited_per(rng, 4);
    for (std::size_t i = 0; i < to.mor_table.size(); ++i)
      to.mor_table[i] = identity_morphism(to.obj_table[i]);
    NatTransInstance n{from, to, {}};
    for (std::size_t c = 0; c < from.obj_table.size(); ++c)
      n.eta.push_back(gen::random_morphism(rng, from.obj_table[c], to.obj_table[c]));
    CHECK(check_nat_trans(n).ok());
  }
}

TEST_CASE("a component clashing with the group action is caught") {
  NatTransInstance n{functor_f1(), functor_f1(), {}};
  // Target functor fixes both classes while the source swaps them, so the
  // identity component cannot commute at the swap.
  n.to.mor_table[1] = identity_morphism(per_2cls());
  n.eta = {identity_morphism(per_2cls())};
  bool naturality = false;
  for (const Finding& f : check_nat_trans(n).findings)
    if (f.rule == "nat.naturality") naturality = true;
  CHECK(naturality);
}

TEST_CASE("vertical composition is componentwise and unital") {
  const NatTransInstance n = nat_collapse_f0();
  const NatTransInstance left = vertical_compose(identity_nat_trans(n.to), n);
  const NatTransInstance right = vertical_compose(n, identity_nat_trans(n.from));
  for (std::size_t c = 0; c < n.eta.size(); ++c) {
    CHECK(left.eta[c].graph == n.eta[c].graph);
    CHECK(right.eta[c].graph == n.eta[c].graph);
  }
  CHECK(check_nat_trans(left).ok());
  CHECK_THROWS_AS(vertical_compose(n, n), input_error);
}

TEST_CASE("monotone point tables are realized as operators") {
  // Identity on the Sierpinski space.
  const EnumOperator id = operator_from_point_table(rel_sierp(), rel_sierp(), {0, 1});
  for (const PointSet& point : enumerate_ideals(rel_sierp()))
    CHECK(apply_operator(id, Ideal{rel_sierp(), point}).elements == point);

  // Collapse of the Sierpinski space onto its top point.
  const EnumOperator top = operator_from_point_table(rel_sierp(), rel_sierp(), {1, 1});
  CHECK(apply_operator(top, Ideal{rel_sierp(), {0}}).elements == PointSet{0, 1});

  // The non-monotone table bottom<->top is not realizable.
  CHECK_THROWS_AS(operator_from_point_table(rel_sierp(), rel_sierp(), {1, 0}), input_error);
}
