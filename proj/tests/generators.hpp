#pragma once

// Deterministic random instance generators for property tests and the
// acceptance suite. All draws go through a caller-provided mt19937_64 so a
// fixed seed reproduces the same corpus.

#include <algorithm>
#include <random>
#include <vector>

#include "ctop/category.hpp"
#include "ctop/cntsets.hpp"
#include "ctop/ideal_space.hpp"

#include "fixtures.hpp"

namespace ctop::gen {

using Rng = std::mt19937_64;

inline Nat draw(Rng& rng, Nat bound) {
  return std::uniform_int_distribution<Nat>(0, bound - 1)(rng);
}

// A transitive relation: random pairs, transitively closed.
inline TransitiveRelation random_relation(Rng& rng, Nat carrier, double density = 0.3) {
  TransitiveRelation r{carrier, {}};
  std::bernoulli_distribution keep(density);
  for (Nat a = 0; a < carrier; ++a)
    for (Nat b = 0; b < carrier; ++b)
      if (keep(rng)) r.pairs.insert({a, b});
  return transitive_closure(r);
}

// A valid PER: a random partial partition; elements may stay non-reflexive.
inline Per random_per(Rng& rng, Nat carrier) {
  Per p{carrier, {}};
  std::vector<Nat> block(carrier);
  const Nat blocks = carrier == 0 ? 1 : draw(rng, carrier) + 1;
  for (Nat a = 0; a < carrier; ++a) block[static_cast<std::size_t>(a)] = draw(rng, blocks + 1);
  // block index 0 means non-reflexive
  for (Nat a = 0; a < carrier; ++a)
    for (Nat b = 0; b < carrier; ++b)
      if (block[static_cast<std::size_t>(a)] != 0 &&
          block[static_cast<std::size_t>(a)] == block[static_cast<std::size_t>(b)])
        p.pairs.insert({a, b});
  return p;
}

// Some PER with at least one class.
inline Per random_inhabited_per(Rng& rng, Nat carrier) {
  Per p = random_per(rng, carrier);
  if (per_classes(p).empty()) p.pairs.insert({0, 0});
  return p;
}

// A valid morphism between PERs: a random function from source classes to
// target classes, saturated. Requires the target to have at least one class
// if the source has any.
inline PerMorphism random_morphism(Rng& rng, const Per& src, const Per& tar) {
  const std::vector<PointSet> src_classes = per_classes(src);
  const std::vector<PointSet> tar_classes = per_classes(tar);
  PerMorphism m{{}, src, tar};
  for (const PointSet& cls : src_classes) {
    const PointSet& image = tar_classes[static_cast<std::size_t>(draw(rng, tar_classes.size()))];
    for (Nat a : cls)
      for (Nat b : image) m.graph.insert({a, b});
  }
  return m;
}

// A permutation of the classes of p with image graph, as a morphism.
inline PerMorphism morphism_from_class_map(const Per& src, const Per& tar,
                                           const std::vector<Nat>& class_map) {
  const std::vector<PointSet> src_classes = per_classes(src);
  const std::vector<PointSet> tar_classes = per_classes(tar);
  PerMorphism m{{}, src, tar};
  for (std::size_t i = 0; i < src_classes.size(); ++i)
    for (Nat a : src_classes[i])
      for (Nat b : tar_classes[static_cast<std::size_t>(class_map[i])]) m.graph.insert({a, b});
  return m;
}

// A random functor over a discrete base category. Over a flat object space
// any object assignment works; over a general space the assignment is made
// monotone along point inclusion by accumulating pairs upward.
inline FunctorInstance random_discrete_functor(Rng& rng, const TransitiveRelation& obj_space,
                                               Nat max_per_carrier) {
  FunctorInstance f;
  f.over = discrete_category(obj_space);
  const std::vector<PointSet> points = enumerate_ideals(obj_space);
  std::vector<Per> pers;
  for (std::size_t i = 0; i < points.size(); ++i)
    pers.push_back(random_per(rng, max_per_carrier));
  // Monotone envelope: each point also carries the pairs of the points below.
  for (std::size_t i = 0; i < points.size(); ++i) {
    Per combined{max_per_carrier, {}};
    for (std::size_t j = 0; j < points.size(); ++j)
      if (std::includes(points[i].begin(), points[i].end(), points[j].begin(), points[j].end()))
        combined.pairs.insert(pers[j].pairs.begin(), pers[j].pairs.end());
    combined.pairs = transitive_closure(TransitiveRelation{max_per_carrier, combined.pairs}).pairs;
    f.obj_table.push_back(std::move(combined));
  }
  for (const Per& p : f.obj_table) f.mor_table.push_back(identity_morphism(p));
  return f;
}

// A random functor over the two-element group: a PER with an involution on
// its classes.
inline FunctorInstance random_z2_functor(Rng& rng, Nat max_per_carrier) {
  FunctorInstance f;
  f.over = fixtures::cat_z2();
  const Per p = random_inhabited_per(rng, max_per_carrier);
  const Nat n_cls = per_classes(p).size();
  // Random involution: pair up classes, fix the rest.
  std::vector<Nat> inv(n_cls);
  std::vector<Nat> order(n_cls);
  for (Nat i = 0; i < n_cls; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (Nat i = 0; i < n_cls; ++i) inv[static_cast<std::size_t>(i)] = i;
  for (Nat i = 0; i + 1 < n_cls; i += 2)
    if (draw(rng, 2) == 0) {
      const Nat a = order[static_cast<std::size_t>(i)], b = order[static_cast<std::size_t>(i + 1)];
      inv[static_cast<std::size_t>(a)] = b;
      inv[static_cast<std::size_t>(b)] = a;
    }
  f.obj_table = {p};
  f.mor_table = {identity_morphism(p), morphism_from_class_map(p, p, inv)};
  return f;
}

// A random functor over the two-object one-arrow category.
inline FunctorInstance random_arrow_functor(Rng& rng, Nat max_per_carrier) {
  FunctorInstance f;
  f.over = fixtures::cat_two_obj_arrow();
  const Per p0 = random_inhabited_per(rng, max_per_carrier);
  const Per p1 = random_inhabited_per(rng, max_per_carrier);
  f.obj_table = {p0, p1};
  f.mor_table = {identity_morphism(p0), identity_morphism(p1), random_morphism(rng, p0, p1)};
  return f;
}

// A random functor over the idempotent one-object monoid: the non-identity
// morphism is a retraction onto a subset of classes.
inline FunctorInstance random_idempotent_functor(Rng& rng, Nat max_per_carrier) {
  FunctorInstance f;
  f.over = fixtures::cat_idempotent();
  const Per p = random_inhabited_per(rng, max_per_carrier);
  const Nat n_cls = per_classes(p).size();
  std::vector<Nat> retract(n_cls);
  std::vector<Nat> targets;
  for (Nat i = 0; i < n_cls; ++i)
    if (targets.empty() || draw(rng, 2) == 0) targets.push_back(i);
  for (Nat i = 0; i < n_cls; ++i) {
    const Nat t = targets[static_cast<std::size_t>(draw(rng, targets.size()))];
    retract[static_cast<std::size_t>(i)] = t;
  }
  for (Nat t : targets) retract[static_cast<std::size_t>(t)] = t;
  f.obj_table = {p};
  f.mor_table = {identity_morphism(p), morphism_from_class_map(p, p, retract)};
  return f;
}

}  // namespace ctop::gen
