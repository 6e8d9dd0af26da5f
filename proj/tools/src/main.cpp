#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "hecketl_cli/cli.hpp"

int main(int argc, char** argv) {
  using namespace hecketl::cli;
  RunConfig config;
  std::string format = "table";

  CLI::App app{"Hecke and generalized Temperley-Lieb algebras of finite Coxeter groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--graph", config.graph, "Coxeter graph: A4, B3, D4, I2:5, or {\"rank\":n,\"bonds\":[[i,j,m],...]}");
  app.add_option("--out", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--cache", config.cache_dir, "Directory for cached KL and canonical tables");
  app.add_option("--jobs", config.jobs, "Worker threads (>= 1)");
  app.add_option("--max-order", config.max_order, "Refuse groups with more elements than this");
  app.add_flag("--no-timing", [&](std::int64_t) { config.timing = false; }, "Omit wall-clock times from reports");

  auto* group = app.add_subcommand("group", "Enumerate the group");
  group->add_flag("--list", config.list, "One row per element");
  app.add_subcommand("kl", "Kazhdan-Lusztig basis table");
  app.add_subcommand("tl", "Canonical and monomial bases of the Temperley-Lieb quotient");
  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("targets", config.targets, "Checks to run")->required();
  auto* scan = app.add_subcommand("scan", "Run report-style scans");
  scan->add_option("targets", config.targets, "Scans to run")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  static const std::map<std::string, Command> commands = {
      {"group", Command::group}, {"kl", Command::kl}, {"tl", Command::tl}, {"verify", Command::verify}, {"scan", Command::scan}};
  config.command = commands.at(app.get_subcommands().front()->get_name());
  config.format = format == "json" ? Format::json : Format::table;
  return run(config, std::cout, std::cerr);
}
