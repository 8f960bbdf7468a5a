#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "ctop/instance_io.hpp"

namespace ctop {

struct CommandOptions {
  Fuel fuel;
  bool json = false;
  bool closure = false;
};

// Exit code contract: 0 ok, 1 violation, 2 input error.
struct CommandResult {
  int exit_code = 0;
  std::string text;
  Json json;
};

// Full validation for the instance's kind.
Report check_instance(const Instance& inst);

// Validation plus the law suite applicable to the kind: unit laws for
// morphisms and transformations, class disjointness for PERs, the
// section-vs-membership law for etale instances, the subset oracle for small
// relations, and the inverse identities for witnesses.
Report laws_instance(const Instance& inst);

// Round-trip checks for functor, nat-trans, cset, and equivariant kinds.
Report roundtrip_instance(const Instance& inst);

CommandResult cmd_check(const std::filesystem::path& file, const CommandOptions& opt);
CommandResult cmd_ideals(const std::filesystem::path& file, const CommandOptions& opt);
CommandResult cmd_spatialize(const std::filesystem::path& file, const CommandOptions& opt);
CommandResult cmd_compose(const std::filesystem::path& first, const std::filesystem::path& second,
                          const CommandOptions& opt);
CommandResult cmd_laws(const std::filesystem::path& file, const CommandOptions& opt);
CommandResult cmd_to_etale(const std::filesystem::path& file,
                           const std::optional<std::filesystem::path>& out,
                           const CommandOptions& opt);
CommandResult cmd_to_functor(const std::filesystem::path& file,
                             const std::optional<std::filesystem::path>& out,
                             const CommandOptions& opt);
CommandResult cmd_roundtrip(const std::filesystem::path& file, const CommandOptions& opt);
CommandResult cmd_suite(const std::filesystem::path& dir, const CommandOptions& opt);

}  // namespace ctop
