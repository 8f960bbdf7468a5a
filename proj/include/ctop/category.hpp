#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ctop/cntsets.hpp"
#include "ctop/ideal_space.hpp"

namespace ctop {

// A finite presentation of a computable category: object and morphism spaces
// as relations, with source/target/identity point tables and a composition
// table defined exactly on composable point pairs. comp_table maps
// (g, f) with src(g) = tar(f) to g after f.
struct CategoryInstance {
  TransitiveRelation obj_space, mor_space;
  std::vector<Nat> src_table, tar_table;  // morphism point -> object point
  std::vector<Nat> id_table;              // object point -> morphism point
  std::map<std::pair<Nat, Nat>, Nat> comp_table;

  friend bool operator==(const CategoryInstance&, const CategoryInstance&) = default;
};

// Validates the component spaces, then table shapes (input errors), then the
// category laws: source/target of composites and identities, totality of the
// composition table on composable pairs, associativity, and the unit laws.
Report check_category(const CategoryInstance& c);

// The category with one identity morphism per point of x and no others.
CategoryInstance discrete_category(const TransitiveRelation& x);
CategoryInstance discrete_category(const ComputableSpace& x);

// A functor from a finitely presented category into the category of PERs,
// as tables over its object and morphism points.
struct FunctorInstance {
  CategoryInstance over;
  std::vector<Per> obj_table;
  std::vector<PerMorphism> mor_table;
};

bool same_functor(const FunctorInstance& f, const FunctorInstance& g);

// The four functor conditions: source and target compatibility of morphism
// images, preservation of identities, and preservation of composition.
// Component violations (category laws, PERs, morphism conditions) merge in
// first and suppress the table checks they would confuse.
Report check_functor(const FunctorInstance& f);

// A natural transformation between two functors over the same category: one
// PER morphism per object point.
struct NatTransInstance {
  FunctorInstance from, to;
  std::vector<PerMorphism> eta;
};

// Component source/target compatibility plus the naturality square at every
// morphism point.
Report check_nat_trans(const NatTransInstance& n);

NatTransInstance identity_nat_trans(const FunctorInstance& f);

// Componentwise composition (second applied after first).
NatTransInstance vertical_compose(const NatTransInstance& after, const NatTransInstance& before);

// Realizes a monotone point function between ideal spaces as an enumeration
// operator with graph {(I, b) | I a point, b in its image}. Input error if
// the table is not monotone with respect to point inclusion.
EnumOperator operator_from_point_table(const TransitiveRelation& source,
                                       const TransitiveRelation& target,
                                       const std::vector<Nat>& table);

}  // namespace ctop
