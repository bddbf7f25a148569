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

// Python bindings. Players are 0-based indices on this side too; coalitions
// are passed as lists of players.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "coopgame/audit.h"
#include "coopgame/game.h"
#include "coopgame/game_file.h"
#include "coopgame/render.h"
#include "coopgame/values.h"

namespace py = pybind11;

namespace coopgame {
namespace {

Coalition ToCoalition(const std::vector<int>& players, int n) {
  Coalition s;
  for (int i : players) {
    if (i < 0 || i >= n) throw py::index_error("player out of range");
    s = s.With(i);
  }
  return s;
}

ValueKind ToValueKind(const std::string& tag) {
  const auto kind = ParseValueKind(tag);
  if (!kind) throw py::value_error("unknown value \"" + tag + "\"");
  return *kind;
}

std::vector<double> ComputeValue(const std::string& tag, const Game& game,
                                 const std::optional<Partition>& partition) {
  const ValueKind kind = ToValueKind(tag);
  if (partition) return Compute(kind, CSGame(game, *partition)).payoffs;
  return Compute(kind, game).payoffs;
}

py::dict AuditToDict(const AuditReport& report) {
  py::list failures;
  for (const AuditFailure& f : report.failures) {
    py::dict d;
    d["trial"] = f.trial;
    d["players"] = f.num_players;
    d["game"] = f.digest;
    d["axiom"] = f.axiom;
    d["magnitude"] = f.magnitude;
    d["outcome"] = std::string(ToString(f.outcome));
    failures.append(d);
  }
  py::dict out;
  out["value"] = std::string(ToString(report.value));
  out["theorem"] = std::string(ToString(report.theorem));
  out["trials"] = report.trials;
  out["seed"] = report.seed;
  out["passed"] = report.Passed();
  out["failures"] = failures;
  return out;
}

}  // namespace
}  // namespace coopgame

PYBIND11_MODULE(coopgame, m) {
  using namespace coopgame;
  m.doc() = "Values and axiom audits for cooperative TU games";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<Game>(m, "Game")
      .def(py::init([](int n, std::vector<double> values,
                       std::vector<std::string> labels) {
             return Game(n, std::move(values), std::move(labels));
           }),
           py::arg("num_players"), py::arg("values"),
           py::arg("labels") = std::vector<std::string>{})
      .def_static(
          "from_coalitions",
          [](int n, const std::vector<std::pair<std::vector<int>, double>>& entries) {
            std::vector<std::pair<Coalition, double>> sparse;
            for (const auto& [players, worth] : entries) {
              sparse.emplace_back(ToCoalition(players, n), worth);
            }
            return MakeGame(n, sparse);
          },
          py::arg("num_players"), py::arg("entries"),
          "Game from (players, worth) pairs; missing coalitions are worth 0.")
      .def_property_readonly("num_players", &Game::num_players)
      .def_property_readonly("labels", &Game::labels)
      .def_property_readonly("values", [](const Game& g) {
        return std::vector<double>(g.values().begin(), g.values().end());
      })
      .def("worth", [](const Game& g, const std::vector<int>& players) {
        return g(ToCoalition(players, g.num_players()));
      })
      .def("__eq__", [](const Game& a, const Game& b) { return a == b; });

  py::class_<Partition>(m, "Partition")
      .def(py::init([](int n, const std::vector<std::vector<int>>& unions) {
             std::vector<Coalition> masks;
             for (const auto& u : unions) masks.push_back(ToCoalition(u, n));
             return Partition(n, std::move(masks));
           }),
           py::arg("num_players"), py::arg("unions"))
      .def_static("singletons", &Partition::Singletons)
      .def_static("grand_union", &Partition::GrandUnion)
      .def_property_readonly("num_unions", &Partition::num_unions)
      .def_property_readonly("unions", [](const Partition& p) {
        std::vector<std::vector<int>> out;
        for (Coalition u : p.unions()) out.push_back(u.Members());
        return out;
      });

  py::class_<GameFile>(m, "GameFile")
      .def_readonly("game", &GameFile::game)
      .def_readonly("partition", &GameFile::partition)
      .def_readonly("kind", &GameFile::kind);

  m.def("value_tags", [] {
    std::vector<std::string> tags;
    for (ValueKind k : kAllValueKinds) tags.emplace_back(ToString(k));
    return tags;
  });
  m.def("compute", &ComputeValue, py::arg("value"), py::arg("game"),
        py::arg("partition") = std::nullopt,
        "Payoff vector of the tagged value; coalitional values need a partition.");
  m.def("zero_normalize", &ZeroNormalize);
  m.def("quotient_game", [](const Game& g, const Partition& p) {
    return QuotientGame(CSGame(g, p));
  });
  m.def("parse_game_file", [](const std::string& text) { return ParseGameFile(text); });
  m.def("read_game_file", [](const std::string& path) { return ReadGameFile(path); });
  m.def(
      "serialize_game_file",
      [](const Game& g, const std::optional<Partition>& p, const std::string& kind) {
        return SerializeGameFile({g, p, kind});
      },
      py::arg("game"), py::arg("partition") = std::nullopt, py::arg("kind") = "");
  m.def("format_truncated", &FormatTruncated, py::arg("x"), py::arg("decimals") = 4);
  m.def(
      "audit",
      [](const std::string& value, const std::string& theorem, int trials,
         int min_players, int max_players, std::uint64_t seed) {
        const auto t = ParseTheorem(theorem);
        if (!t) throw py::value_error("unknown theorem \"" + theorem + "\"");
        AuditConfig config;
        config.value = ToValueKind(value);
        config.theorem = *t;
        config.trials = trials;
        config.min_players = min_players;
        config.max_players = max_players;
        config.seed = seed;
        return AuditToDict(Audit(config));
      },
      py::arg("value"), py::arg("theorem"), py::arg("trials") = 500,
      py::arg("min_players") = 2, py::arg("max_players") = 7, py::arg("seed") = 0);
}
