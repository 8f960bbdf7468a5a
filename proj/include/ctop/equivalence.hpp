#pragma once

#include <vector>

#include "ctop/category.hpp"
#include "ctop/etale.hpp"

namespace ctop {

// A point of the total space assembled from a functor: an object point
// together with one equivalence class of that object's PER.
struct FiberPoint {
  Nat base;
  PointSet cls;

  friend bool operator==(const FiberPoint&, const FiberPoint&) = default;
  friend auto operator<=>(const FiberPoint&, const FiberPoint&) = default;
};

// The fiber points of a functor in canonical order: by base point index,
// then by least class representative.
std::vector<FiberPoint> fiber_points(const FunctorInstance& f);

// Builds the etale space with action corresponding to a functor. The total
// space gets one fresh reflexive element per fiber point; chart n covers the
// points whose class contains n, its base open is where n is reflexive, and
// the action moves a class along the morphism's graph. Requires a valid
// functor whose reflexivity sets {c | n rel_c n} are open in the base
// (automatic over discrete object spaces); input error otherwise.
ActionInstance functor_to_cset(const FunctorInstance& f);

// Recovers a functor from an etale space with action: the PER at an object
// point relates charts with equal sections there, and a morphism's graph
// relates chart n to chart m when the action carries section n at the source
// to section m at the target. All section equalities are decided through
// open membership (section_equality).
FunctorInstance cset_to_functor(const ActionInstance& a);

// The equivariant map induced by a natural transformation: each fiber class
// moves along the component morphism's graph.
EquivariantMapInstance nat_trans_to_equivariant(const NatTransInstance& n);

// The natural transformation induced by an equivariant map, with components
// computed through open membership.
NatTransInstance equivariant_to_nat_trans(const EquivariantMapInstance& m);

// Checks that translating a functor to a C-set and back reproduces it on the
// nose: object tables as PERs, morphism tables as saturated graphs.
Report roundtrip_functor(const FunctorInstance& f);

// A pair of mutually inverse equivariant point tables between a C-set and
// its reconstruction.
struct IsoWitness {
  std::vector<Nat> theta;      // original total point -> rebuilt total point
  std::vector<Nat> theta_inv;  // rebuilt total point -> original total point
};

struct CsetRoundtrip {
  IsoWitness iso;
  ActionInstance rebuilt;
  Report report;
};

// Translates a C-set to a functor and back, returning the comparison tables:
// theta sends x to (p(x), class of any chart containing x), theta_inv sends
// a fiber point to its section's value. The report checks that both are
// mutually inverse and equivariant.
CsetRoundtrip roundtrip_cset(const ActionInstance& a);

// Round trips both endpoints of an equivariant map and checks the naturality
// square: theta of the target composed with the map equals the reconstructed
// map composed with theta of the source.
Report roundtrip_equivariant(const EquivariantMapInstance& m);

}  // namespace ctop
