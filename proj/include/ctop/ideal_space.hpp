#pragma once

#include <set>
#include <utility>
#include <vector>

#include "ctop/enumeration.hpp"
#include "ctop/report.hpp"

namespace ctop {

// A transitive relation on the initial segment {0..carrier-1} of the
// naturals. Its ideals (nonempty, downward-closed, directed subsets) are the
// points of the space it presents; the basic open [a] is the set of ideals
// containing a.
struct TransitiveRelation {
  Nat carrier = 0;
  std::set<std::pair<Nat, Nat>> pairs;

  bool related(Nat a, Nat b) const { return pairs.count({a, b}) != 0; }

  friend bool operator==(const TransitiveRelation&, const TransitiveRelation&) = default;
};

using PointSet = std::set<Nat>;

// Range-checks pair entries (input errors), then lists every transitivity
// violation. Empty report iff the relation is valid.
Report check_relation(const TransitiveRelation& r);

// Smallest transitive relation containing r.pairs.
TransitiveRelation transitive_closure(const TransitiveRelation& r);

// The three ideal conditions: s is nonempty, a lower set, and directed.
bool is_ideal(const TransitiveRelation& r, const PointSet& s);

// All ideals of a finite relation, in lexicographic order of their element
// sets. This order defines the point index used by every table downstream.
//
// Ideals of a finite transitive relation are exactly the principal lower
// sets {a | a rel c} of reflexive elements c, so this is O(carrier^2), not a
// subset scan.
std::vector<PointSet> enumerate_ideals(const TransitiveRelation& r,
                                       Nat max_carrier = 4096);

// Index of `point` in enumerate_ideals order; input error if absent.
Nat point_index(const std::vector<PointSet>& points, const PointSet& point);

// A point of the space presented by `over`, at desk scale: an explicit
// finite element set satisfying the ideal conditions.
struct Ideal {
  TransitiveRelation over;
  PointSet elements;
};

// A computably enumerable open subset: the union of the basic opens [a] over
// a generator set of basic-open indices.
struct CeOpen {
  TransitiveRelation over;
  CeSet generators;

  static CeOpen of(TransitiveRelation over, const std::set<Nat>& generators) {
    return CeOpen{std::move(over), CeSet::of_set(generators)};
  }
};

// Exact membership for desk-scale opens (finite generator extent required).
bool open_contains(const CeOpen& u, const Ideal& point);

// Semi-decides membership of a stream-scale point in a stream-scale open by
// dovetailing the generator enumeration with the point's element enumeration.
Semi open_contains_fueled(const CeOpen& u, const Enumeration& point_elements, Fuel fuel);

// A computable function between ideal spaces, presented as an enumeration
// operator: f(I) = { b | some (F, b) in the graph has F a subset of I }.
// Monotone by construction; ideal preservation is a semantic condition
// checked by check_operator.
struct EnumOperator {
  TransitiveRelation source, target;
  std::set<std::pair<PointSet, Nat>> graph;
};

EnumOperator identity_operator(const TransitiveRelation& r);

// Raw graph application to an arbitrary element set (no ideal check).
PointSet apply_operator_raw(const EnumOperator& op, const PointSet& elements);

// Applies op to an ideal and verifies the image satisfies the ideal
// conditions of the target; failure means the operator is not
// ideal-preserving and raises an input error.
Ideal apply_operator(const EnumOperator& op, const Ideal& point);

// Streamed application: enumerates f(I) from an enumeration of I, emitting
// each output at the first step where some graph entry is enabled.
Enumeration apply_operator_stream(const EnumOperator& op, Enumeration input);

// Brute-force semantic validation: every ideal of the source maps to an
// ideal of the target.
Report check_operator(const EnumOperator& op);

// Syntactic composition: the resulting graph has one entry per way of
// covering a g-entry's premise set with f-entries. Extensionally,
// apply(compose(g,f), I) = apply(g, apply(f, I)) on all sets.
EnumOperator compose_operators(const EnumOperator& g, const EnumOperator& f);

// The binary product space: elements are Cantor pair codes, with
// (a,a') rel (b,b') iff a rel1 b and a' rel2 b'. Ideals correspond
// bijectively to pairs of ideals of the factors.
TransitiveRelation product_relation(const TransitiveRelation& r1,
                                    const TransitiveRelation& r2);

// Projection operators of the product onto its factors.
std::pair<EnumOperator, EnumOperator> product_projections(const TransitiveRelation& r1,
                                                          const TransitiveRelation& r2);

// A desk-scale computable topological space: a presentation together with an
// explicit list of its points. full_space lists every ideal.
struct ComputableSpace {
  TransitiveRelation over;
  std::vector<PointSet> points;

  static ComputableSpace full_space(TransitiveRelation r) {
    auto pts = enumerate_ideals(r);
    return ComputableSpace{std::move(r), std::move(pts)};
  }
};

}  // namespace ctop
