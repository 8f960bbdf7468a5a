#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "ctop/category.hpp"
#include "ctop/cntsets.hpp"
#include "ctop/equivalence.hpp"
#include "ctop/etale.hpp"
#include "ctop/ideal_space.hpp"

namespace ctop {

using Json = nlohmann::ordered_json;

// Discriminator of an instance document.
enum class Kind {
  relation,
  per,
  cnt_morphism,
  witness,
  category,
  functor,
  nat_trans,
  etale,
  cset,
  equivariant,
};

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& name);

// A loaded instance document of any kind.
using Instance = std::variant<TransitiveRelation, Per, PerMorphism, OvertDiscreteWitness,
                              CategoryInstance, FunctorInstance, NatTransInstance,
                              EtaleInstance, ActionInstance, EquivariantMapInstance>;

Kind kind_of(const Instance& inst);

struct LoadOptions {
  // Transitively close relation and PER pair sets and saturate morphism
  // graphs before anything else sees them.
  bool closure = false;
};

// Loads a document from disk. Nested components may be inlined as objects or
// referenced as path strings relative to the referencing file. Unknown keys
// are ignored, so documents may carry echoes or annotations.
Instance load_instance(const std::filesystem::path& file, const LoadOptions& options = {});

// Parses a document; `base_dir` anchors nested path references.
Instance parse_instance(const Json& doc, const std::filesystem::path& base_dir,
                        const LoadOptions& options = {});

// Serializations. Point tables use canonical point indices; with
// `echo_points` set, relation documents carry a "points" echo listing the
// element sets in index order (ignored on input).
Json to_json(const TransitiveRelation& r, bool echo_points = false);
Json to_json(const Per& p);
Json to_json(const PerMorphism& m);
Json to_json(const OvertDiscreteWitness& w);
Json to_json(const CategoryInstance& c, bool echo_points = false);
Json to_json(const FunctorInstance& f, bool echo_points = false);
Json to_json(const NatTransInstance& n, bool echo_points = false);
Json to_json(const EtaleInstance& e, bool echo_points = false);
Json to_json(const ActionInstance& a, bool echo_points = false);
Json to_json(const EquivariantMapInstance& m, bool echo_points = false);

Json instance_to_json(const Instance& inst, bool echo_points = false);

// Canonical rendering: fixed key order, two-space indent, short numeric
// arrays inline. Identical documents render byte-identically.
std::string dump_canonical(const Json& doc);

void write_instance(const std::filesystem::path& file, const Json& doc);

}  // namespace ctop
