#pragma once

#include <set>
#include <utility>
#include <vector>

#include "ctop/ideal_space.hpp"

namespace ctop {

// A partial equivalence relation on {0..carrier-1}: symmetric and transitive.
// Its classes of reflexive elements are the points of a discrete space.
struct Per {
  Nat carrier = 0;
  std::set<std::pair<Nat, Nat>> pairs;

  bool related(Nat a, Nat b) const { return pairs.count({a, b}) != 0; }
};

// Equality of PERs as relations. Carrier bounds are presentation bookkeeping
// and do not enter; round trips may widen them.
bool same_per(const Per& a, const Per& b);

// Range-checks, then lists symmetry and transitivity violations.
Report check_per(const Per& p);

// The PER viewed as a transitive relation; its ideals are exactly the
// equivalence classes of reflexive elements, and the space is discrete.
TransitiveRelation class_space(const Per& p);

// The classes in canonical point order.
std::vector<PointSet> per_classes(const Per& p);

// A morphism of PERs: a relational graph that is defined on classes,
// saturated on both sides, single-valued up to the target PER, and total on
// the source classes. Acts on points as I |-> { b | some a in I has G(a,b) }.
struct PerMorphism {
  std::set<std::pair<Nat, Nat>> graph;
  Per src, tar;
};

bool same_morphism(const PerMorphism& a, const PerMorphism& b);

PerMorphism identity_morphism(const Per& p);

// The five morphism conditions, each reported with a witness:
//   cnt.defined          G(a,b) implies a and b are reflexive
//   cnt.src-saturation   G(a,b) and a ~ a' imply G(a',b)
//   cnt.tar-saturation   G(a,b) and b ~ b' imply G(a,b')
//   cnt.single-valued    G(a,b) and G(a,b') imply b ~ b'
//   cnt.total            reflexive a implies some G(a,b)
// Component PER violations are merged in first.
Report check_morphism(const PerMorphism& m);

// Closure of a graph under the two saturation conditions.
std::set<std::pair<Nat, Nat>> saturate_graph(std::set<std::pair<Nat, Nat>> graph,
                                             const Per& src, const Per& tar);

// Relational composition {(a,c) | exists b: before(a,b) and after(b,c)}.
// Requires after.src and before.tar to agree as relations.
PerMorphism compose_morphisms(const PerMorphism& after, const PerMorphism& before);

// The spatialization of a morphism: an enumeration operator between the
// class spaces with graph {({a}, b) | G(a,b)}.
EnumOperator morphism_operator(const PerMorphism& m);

// Witness data making a space overt and discrete: `nonempty` lists the basic
// indices with nonempty basic open; `equality` holds pairs (a,b) such that
// two points are equal exactly when one contains a and the other b. Pairs
// must be supported on `nonempty`.
struct OvertDiscreteWitness {
  TransitiveRelation relation;
  std::set<Nat> nonempty;
  std::set<std::pair<Nat, Nat>> equality;
};

Report check_witness(const OvertDiscreteWitness& w);

// A PER presenting the same space as the witnessed relation, together with
// point tables g, h realizing the mutually inverse homeomorphisms.
struct SpatializationResult {
  Per per;
  std::vector<Nat> g_map;  // point of the relation -> point of the per
  std::vector<Nat> h_map;  // point of the per -> point of the relation
};

// Recovers a PER from an overt discrete space:
//   S    = { c in nonempty | some (a,b) in equality has a,b rel c }
//   a ~ b  iff  a,b in S and some c in S has a,b rel c
//   g(I) = { a in I | a ~ a },  h(J) = { b in S | some a in J has b rel a }.
// Raises an input error if the witness is invalid.
SpatializationResult spatialize(const OvertDiscreteWitness& w);

// The evident witness for a class space: every reflexive element has a
// nonempty basic open, and the PER pairs themselves witness equality.
OvertDiscreteWitness canonical_witness(const Per& p);

}  // namespace ctop
