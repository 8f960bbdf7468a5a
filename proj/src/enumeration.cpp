#include "ctop/enumeration.hpp"

#include <algorithm>
#include <memory>
#include <utility>

namespace ctop {

Enumeration Enumeration::of(std::vector<Nat> items) {
  const Nat bound = items.size();
  auto data = std::make_shared<std::vector<Nat>>(std::move(items));
  return Enumeration(
      [data](Nat step) -> std::optional<Nat> {
        if (step >= data->size()) return std::nullopt;
        return (*data)[static_cast<std::size_t>(step)];
      },
      bound);
}

Enumeration Enumeration::of_set(const std::set<Nat>& items) {
  return of(std::vector<Nat>(items.begin(), items.end()));
}

Enumeration Enumeration::from_fn(StepFn fn) {
  return Enumeration(std::move(fn), std::nullopt);
}

Enumeration Enumeration::from_fn(StepFn fn, Nat exhaust_bound) {
  return Enumeration(std::move(fn), exhaust_bound);
}

std::optional<Nat> Enumeration::at(Nat step) const {
  if (exhaust_bound_ && step >= *exhaust_bound_) return std::nullopt;
  if (!fn_) return std::nullopt;
  return fn_(step);
}

std::set<Nat> Enumeration::emitted_within(Nat steps) const {
  std::set<Nat> out;
  if (exhaust_bound_) steps = std::min(steps, *exhaust_bound_);
  for (Nat t = 0; t < steps; ++t)
    if (auto item = at(t)) out.insert(*item);
  return out;
}

Enumeration dovetail(std::vector<Enumeration> sources) {
  if (sources.empty()) throw input_error("input.precondition", "dovetail of no sources");
  const Nat k = sources.size();

  std::optional<Nat> bound;
  bool all_bounded = true;
  Nat max_bound = 0;
  for (const Enumeration& s : sources) {
    if (auto b = s.exhaust_bound())
      max_bound = std::max(max_bound, *b);
    else
      all_bounded = false;
  }
  if (all_bounded) bound = k * max_bound;

  auto data = std::make_shared<std::vector<Enumeration>>(std::move(sources));
  auto fn = [data, k](Nat step) -> std::optional<Nat> {
    const Nat i = step % k;
    if (auto item = (*data)[static_cast<std::size_t>(i)].at(step / k))
      return pair_encode(i, *item);
    return std::nullopt;
  };
  if (bound) return Enumeration::from_fn(std::move(fn), *bound);
  return Enumeration::from_fn(std::move(fn));
}

Semi CeSet::member(Nat n, Fuel fuel) const {
  Nat steps = fuel.max_steps;
  if (auto b = items.exhaust_bound()) steps = std::min(steps, *b);
  for (Nat t = 0; t < steps; ++t)
    if (items.at(t) == std::optional<Nat>(n)) return Semi::yes;
  return Semi::unknown;
}

std::optional<std::set<Nat>> CeSet::finite_extent() const {
  auto b = items.exhaust_bound();
  if (!b) return std::nullopt;
  return items.emitted_within(*b);
}

}  // namespace ctop
