// Copyright 2026 The coopgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// coopgame command-line tool.
//
//   coopgame compute --game g.json --value ed,shapley,big-gamma
//   coopgame compute --game g.json --all --format json
//   coopgame audit --value big-gamma --theorem T4 --trials 500 --players 5
//   coopgame demo
//   coopgame quotient --game g.json
//
// Exit codes: 0 success, 1 audit failures, 2 input errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coopgame/audit.h"
#include "coopgame/game.h"
#include "coopgame/game_file.h"
#include "coopgame/render.h"
#include "coopgame/values.h"

namespace {

using coopgame::InputError;

constexpr int kExitOk = 0;
constexpr int kExitAuditFailed = 1;
constexpr int kExitInput = 2;

// Elevator cost games: three players riding to floors 1..3.
constexpr char kElevatorC[] = R"({
  "players": ["1", "2", "3"],
  "kind": "cost",
  "coalitions": {"1": 80, "2": 90, "3": 100, "1,2": 100, "1,3": 110,
                 "2,3": 110, "1,2,3": 120}
})";
constexpr char kElevatorD[] = R"({
  "players": ["1", "2", "3"],
  "kind": "cost",
  "coalitions": {"1": 0, "2": 90, "3": 100, "1,2": 90, "1,3": 100,
                 "2,3": 110, "1,2,3": 110}
})";

std::string Caption(const coopgame::GameFile& file, const std::string& name) {
  if (file.kind == "cost") return name + " (cost allocation)";
  if (file.kind == "benefit") return name + " (benefit allocation)";
  return name;
}

std::vector<coopgame::ValueKind> SelectValues(
    const std::vector<std::string>& tags, bool all, bool has_partition) {
  std::vector<coopgame::ValueKind> kinds;
  if (all) {
    for (const coopgame::ValueKind k : coopgame::kAllValueKinds) {
      if (has_partition || !coopgame::IsCoalitional(k)) kinds.push_back(k);
    }
    return kinds;
  }
  if (tags.empty()) throw InputError("select values with --value or --all");
  for (const std::string& tag : tags) {
    const auto kind = coopgame::ParseValueKind(tag);
    if (!kind) throw InputError("unknown value \"" + tag + "\"");
    if (coopgame::IsCoalitional(*kind) && !has_partition) {
      throw InputError("value " + tag + " needs a partition in the game file");
    }
    kinds.push_back(*kind);
  }
  return kinds;
}

std::vector<coopgame::ValueColumn> ComputeColumns(
    const coopgame::GameFile& file,
    const std::vector<coopgame::ValueKind>& kinds) {
  std::vector<coopgame::ValueColumn> columns;
  std::optional<coopgame::CSGame> csg;
  if (file.partition) csg.emplace(file.game, *file.partition);
  for (const coopgame::ValueKind k : kinds) {
    columns.push_back({std::string(coopgame::ToString(k)),
                       csg ? coopgame::Compute(k, *csg)
                           : coopgame::Compute(k, file.game)});
  }
  return columns;
}

int RunCompute(const std::string& path, const std::vector<std::string>& tags,
               bool all, const std::string& format) {
  const coopgame::GameFile file = coopgame::ReadGameFile(path);
  const auto kinds = SelectValues(tags, all, file.partition.has_value());
  const auto columns = ComputeColumns(file, kinds);
  if (format == "json") {
    std::cout << coopgame::RenderJson(file.game.labels(), columns);
  } else {
    std::cout << coopgame::RenderTable(file.game.labels(), columns,
                                       Caption(file, path));
  }
  return kExitOk;
}

struct AuditArgs {
  std::string value;
  std::string theorem;
  int trials = 500;
  std::optional<int> players;
  std::uint64_t seed = 0;
  bool force = false;
  std::string format = "table";
};

int RunAudit(const AuditArgs& args) {
  const auto value = coopgame::ParseValueKind(args.value);
  if (!value) throw InputError("unknown value \"" + args.value + "\"");
  const auto theorem = coopgame::ParseTheorem(args.theorem);
  if (!theorem) throw InputError("unknown theorem \"" + args.theorem + "\"");
  if (coopgame::IsCoalitional(*value) != coopgame::IsCoalitional(*theorem)) {
    throw InputError("value " + args.value + " and theorem " + args.theorem +
                     " differ in arity (point vs coalitional)");
  }
  if (!args.force && coopgame::MatchedTheorem(*value) != theorem) {
    throw InputError("theorem " + args.theorem + " does not characterize " +
                     args.value + "; pass --force to run it as a control");
  }
  if (args.trials < 0) throw InputError("--trials must be non-negative");

  coopgame::AuditConfig config;
  config.value = *value;
  config.theorem = *theorem;
  config.trials = args.trials;
  config.seed = args.seed;
  if (args.players) {
    config.min_players = *args.players;
    config.max_players = *args.players;
  }
  const coopgame::AuditReport report = coopgame::Audit(config);
  if (args.trials == 0) {
    std::cerr << "warning: 0 trials; the audit passes vacuously\n";
  }
  if (args.format == "json") {
    std::cout << coopgame::RenderAuditJson(report);
  } else {
    std::cout << coopgame::RenderAuditText(report);
  }
  return report.Passed() ? kExitOk : kExitAuditFailed;
}

int RunDemo() {
  const std::vector<coopgame::ValueKind> kinds = {
      coopgame::ValueKind::kEqualDivision, coopgame::ValueKind::kShapley,
      coopgame::ValueKind::kBigGamma};
  bool first = true;
  for (const auto& [name, text] :
       {std::pair{"elevator game c", kElevatorC},
        std::pair{"elevator game d", kElevatorD}}) {
    const coopgame::GameFile file = coopgame::ParseGameFile(text);
    if (!first) std::cout << "\n";
    first = false;
    std::cout << coopgame::RenderTable(file.game.labels(),
                                       ComputeColumns(file, kinds),
                                       Caption(file, name));
  }
  return kExitOk;
}

int RunQuotient(const std::string& path) {
  const coopgame::GameFile file = coopgame::ReadGameFile(path);
  const coopgame::Game quotient = coopgame::QuotientGame(file.AsCSGame());
  std::cout << coopgame::SerializeGameFile({quotient, std::nullopt, file.kind});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Values and axiom audits for cooperative TU games"};
  app.require_subcommand(1);

  std::string game_path;
  std::vector<std::string> tags;
  bool all = false;
  std::string format = "table";
  CLI::App* compute = app.add_subcommand("compute", "Compute values of a game");
  compute->add_option("--game", game_path, "Game file (JSON)")->required();
  compute->add_option("--value", tags, "Comma-separated value tags")
      ->delimiter(',');
  compute->add_flag("--all", all, "Every value applicable to the game");
  compute->add_option("--format", format)
      ->check(CLI::IsMember({"table", "json"}));

  AuditArgs audit_args;
  CLI::App* audit = app.add_subcommand("audit", "Audit a value against a theorem");
  audit->add_option("--value", audit_args.value)->required();
  audit->add_option("--theorem", audit_args.theorem, "T1a, T1b, T2..T8")
      ->required();
  audit->add_option("--trials", audit_args.trials)->capture_default_str();
  audit->add_option("--players", audit_args.players,
                    "Players per game (default: 2..7 in rotation)");
  audit->add_option("--seed", audit_args.seed)->capture_default_str();
  audit->add_flag("--force", audit_args.force,
                  "Allow a theorem that does not characterize the value");
  audit->add_option("--format", audit_args.format)
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* demo = app.add_subcommand("demo", "Print the elevator tables");

  std::string quotient_path;
  CLI::App* quotient =
      app.add_subcommand("quotient", "Emit the quotient game of a CSGame");
  quotient->add_option("--game", quotient_path, "Game file with a partition")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*compute) return RunCompute(game_path, tags, all, format);
    if (*audit) return RunAudit(audit_args);
    if (*demo) return RunDemo();
    if (*quotient) return RunQuotient(quotient_path);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
