#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "ctop/commands.hpp"

namespace {

struct Args {
  ctop::CommandOptions options;
  std::string file, second, out, dir;
};

void add_common_flags(CLI::App* cmd, Args& args) {
  cmd->add_option("--fuel", args.options.fuel.max_steps,
                  "step budget for enumeration-backed searches")
      ->capture_default_str();
  cmd->add_flag("--json", args.options.json, "emit a machine-readable report");
  cmd->add_flag("--closure", args.options.closure,
                "transitively close relations and saturate graphs before validation");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"checker for spaces of ideals, PER categories, and computable etale spaces"};
  app.require_subcommand(1);

  Args args;

  auto* check = app.add_subcommand("check", "validate an instance file");
  check->add_option("file", args.file, "instance file")->required();
  add_common_flags(check, args);

  auto* ideals = app.add_subcommand("ideals", "list the points of a relation's ideal space");
  ideals->add_option("file", args.file, "relation file")->required();
  add_common_flags(ideals, args);

  auto* spatialize =
      app.add_subcommand("spatialize", "recover a per from an overt discrete witness");
  spatialize->add_option("file", args.file, "witness file")->required();
  add_common_flags(spatialize, args);

  auto* compose = app.add_subcommand("compose", "compose two morphism files (first after second)");
  compose->add_option("first", args.file, "outer morphism file")->required();
  compose->add_option("second", args.second, "inner morphism file")->required();
  add_common_flags(compose, args);

  auto* laws = app.add_subcommand("laws", "run the law suite for an instance file");
  laws->add_option("file", args.file, "instance file")->required();
  add_common_flags(laws, args);

  auto* to_etale = app.add_subcommand("to-etale", "build the etale space with action of a functor");
  to_etale->add_option("file", args.file, "functor file")->required();
  to_etale->add_option("-o,--out", args.out, "write the constructed instance here");
  add_common_flags(to_etale, args);

  auto* to_functor = app.add_subcommand("to-functor", "recover the functor of a cset");
  to_functor->add_option("file", args.file, "cset file")->required();
  to_functor->add_option("-o,--out", args.out, "write the constructed instance here");
  add_common_flags(to_functor, args);

  auto* roundtrip = app.add_subcommand("roundtrip", "run the translation round-trip checks");
  roundtrip->add_option("file", args.file, "functor, nat-trans, cset, or equivariant file")
      ->required();
  add_common_flags(roundtrip, args);

  auto* suite = app.add_subcommand("suite", "run checks, laws, and round trips over a directory");
  suite->add_option("dir", args.dir, "directory of instance files")->required();
  add_common_flags(suite, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  ctop::CommandResult result;
  try {
    if (check->parsed()) result = ctop::cmd_check(args.file, args.options);
    else if (ideals->parsed()) result = ctop::cmd_ideals(args.file, args.options);
    else if (spatialize->parsed()) result = ctop::cmd_spatialize(args.file, args.options);
    else if (compose->parsed()) result = ctop::cmd_compose(args.file, args.second, args.options);
    else if (laws->parsed()) result = ctop::cmd_laws(args.file, args.options);
    else if (to_etale->parsed())
      result = ctop::cmd_to_etale(
          args.file, args.out.empty() ? std::nullopt : std::optional<std::filesystem::path>(args.out),
          args.options);
    else if (to_functor->parsed())
      result = ctop::cmd_to_functor(
          args.file, args.out.empty() ? std::nullopt : std::optional<std::filesystem::path>(args.out),
          args.options);
    else if (roundtrip->parsed()) result = ctop::cmd_roundtrip(args.file, args.options);
    else if (suite->parsed()) result = ctop::cmd_suite(args.dir, args.options);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (args.options.json)
    std::cout << ctop::dump_canonical(result.json);
  else
    std::cout << result.text;
  return result.exit_code;
}
