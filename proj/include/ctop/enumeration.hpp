#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "ctop/coding.hpp"

namespace ctop {

// Budget of a semi-decision, counted in enumeration queries. A fueled search
// performs at most max_steps queries in total across all interleaved sources.
struct Fuel {
  Nat max_steps = 10000;
};

// Answer of a fueled search: `yes` is definitive, `unknown` means the budget
// elapsed first.
enum class Semi { yes, unknown };

// A deterministic stream of naturals, possibly infinite. Querying step t
// yields either an item or a pass (no item produced at this step). The
// backing function must be pure in t, so enumerations can be shared and
// replayed freely.
class Enumeration {
 public:
  using StepFn = std::function<std::optional<Nat>(Nat)>;

  // Empty enumeration: passes forever, exhausted from step 0.
  Enumeration() : exhaust_bound_(0) {}

  // Emits items[t] at step t, then exhausts.
  static Enumeration of(std::vector<Nat> items);
  static Enumeration of_set(const std::set<Nat>& items);

  static Enumeration from_fn(StepFn fn);
  static Enumeration from_fn(StepFn fn, Nat exhaust_bound);

  // Item emitted at `step`, or nullopt for a pass.
  std::optional<Nat> at(Nat step) const;

  // A step count past which only passes follow, when known.
  std::optional<Nat> exhaust_bound() const { return exhaust_bound_; }

  // All items emitted by the first `steps` queries.
  std::set<Nat> emitted_within(Nat steps) const;

 private:
  Enumeration(StepFn fn, std::optional<Nat> bound)
      : fn_(std::move(fn)), exhaust_bound_(bound) {}

  StepFn fn_;
  std::optional<Nat> exhaust_bound_;
};

// Fair round-robin interleaving of k sources: step t queries source t % k at
// that source's own step t / k and emits pair_encode(source index, item), so
// the emitted set is the tagged union of the sources' items. Every source is
// queried unboundedly often. Requires a nonempty source list.
Enumeration dovetail(std::vector<Enumeration> sources);

// A computably enumerable set of naturals: the set of all items its
// enumeration ever emits. Emission order and duplicates are irrelevant.
struct CeSet {
  Enumeration items;

  static CeSet of_set(const std::set<Nat>& s) { return CeSet{Enumeration::of_set(s)}; }

  // Semi-decides n's membership; `yes` only if n is emitted within the
  // budget, and monotone in fuel.
  Semi member(Nat n, Fuel fuel) const;

  // The whole set, available when the enumeration is known to exhaust.
  std::optional<std::set<Nat>> finite_extent() const;
};

}  // namespace ctop
