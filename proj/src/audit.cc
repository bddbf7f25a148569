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

#include "coopgame/audit.h"

#include <stdexcept>
#include <utility>

#include "coopgame/random_games.h"

namespace coopgame {
namespace {

constexpr int kMaxAuditPlayers = 12;

enum class AxiomKind {
  kAdditivity,
  kNullPlayer,
  kEfficiency,
  kSymmetry,
  kNecessary,
  kCoalitionalNecessary,
  kSymmetryInsideUnions,
  kSymmetryAmongUnions,
};

struct Axiom {
  AxiomKind kind;
  NecessaryVariant necessary = NecessaryVariant::kMean;
  CoalitionalNecessaryVariant coalitional =
      CoalitionalNecessaryVariant::kCoalitional;

  std::string Name() const {
    switch (kind) {
      case AxiomKind::kAdditivity: return "additivity";
      case AxiomKind::kNullPlayer: return "null-player";
      case AxiomKind::kEfficiency: return "efficiency";
      case AxiomKind::kSymmetry: return "symmetry";
      case AxiomKind::kNecessary:
        return "necessary:" + std::string(ToString(necessary));
      case AxiomKind::kCoalitionalNecessary:
        return "necessary:" + std::string(ToString(coalitional));
      case AxiomKind::kSymmetryInsideUnions: return "symmetry-inside-unions";
      case AxiomKind::kSymmetryAmongUnions: return "symmetry-among-unions";
    }
    return "?";
  }
};

Axiom Necessary(NecessaryVariant v) {
  return {AxiomKind::kNecessary, v, CoalitionalNecessaryVariant::kCoalitional};
}
Axiom CoalitionalNecessary(CoalitionalNecessaryVariant v) {
  return {AxiomKind::kCoalitionalNecessary, NecessaryVariant::kMean, v};
}

std::vector<Axiom> Bundle(Theorem theorem) {
  const Axiom additivity{AxiomKind::kAdditivity};
  const Axiom null_player{AxiomKind::kNullPlayer};
  const Axiom efficiency{AxiomKind::kEfficiency};
  const Axiom symmetry{AxiomKind::kSymmetry};
  const Axiom inside{AxiomKind::kSymmetryInsideUnions};
  const Axiom among{AxiomKind::kSymmetryAmongUnions};
  using NV = NecessaryVariant;
  using CV = CoalitionalNecessaryVariant;
  switch (theorem) {
    case Theorem::kT1a:
      return {additivity, null_player, Necessary(NV::kWeightedMean)};
    case Theorem::kT1b:
      return {additivity, null_player, Necessary(NV::kMean)};
    case Theorem::kT2:
      return {additivity, Necessary(NV::kWeakMean), efficiency, symmetry};
    case Theorem::kT3:
      return {additivity, Necessary(NV::kPerCapita), efficiency, symmetry};
    case Theorem::kT4:
      return {additivity, Necessary(NV::kZeroNormPerCapita), efficiency,
              symmetry};
    case Theorem::kT5:
      return {additivity, null_player, CoalitionalNecessary(CV::kCoalitional)};
    case Theorem::kT6:
      return {additivity, null_player,
              CoalitionalNecessary(CV::kWeightedCoalitional)};
    case Theorem::kT7:
      return {additivity, CoalitionalNecessary(CV::kPerCapitaCoalitional),
              efficiency, inside, among};
    case Theorem::kT8:
      return {additivity,
              CoalitionalNecessary(CV::kZeroNormPerCapitaCoalitional),
              efficiency, inside, among};
  }
  return {};
}

double SumSingletons(const Game& game) {
  double total = 0.0;
  for (int j = 0; j < game.num_players(); ++j) total += game.Singleton(j);
  return total;
}

// Moves player j into player i's union.
Partition Join(const Partition& p, int i, int j) {
  std::vector<Coalition> unions;
  for (int k = 0; k < p.num_unions(); ++k) {
    Coalition u = p.Union(k).Without(j);
    if (k == p.UnionOf(i)) u = u.With(j);
    if (!u.empty()) unions.push_back(u);
  }
  return Partition(p.num_players(), std::move(unions));
}

std::pair<int, int> DistinctPair(SplitMix64& rng, int size) {
  const int a = rng.Below(size);
  int b = rng.Below(size - 1);
  if (b >= a) ++b;
  return {a, b};
}

// One axiom checked on one freshly generated game.
struct AxiomCheck {
  Game game;
  CheckResult result;
};

AxiomCheck RunPointAxiom(const Axiom& axiom, const PointValueFn& f, int n,
                         std::uint64_t seed) {
  SplitMix64 rng(DeriveSeed(seed, 0));
  auto uniform = [&](std::uint64_t stream) {
    return RandomGame({DeriveSeed(seed, stream), n, GameClass::kUniform});
  };
  switch (axiom.kind) {
    case AxiomKind::kAdditivity: {
      Game v = uniform(1);
      const Game w = uniform(2);
      const double violation = CheckAdditivity(f, v, w);
      return {std::move(v), {CheckOutcome::kChecked, violation}};
    }
    case AxiomKind::kNullPlayer: {
      Game v = RandomGame({DeriveSeed(seed, 1), n, GameClass::kWithNullPlayer});
      const CheckResult result = CheckNullPlayer(f, v);
      return {std::move(v), result};
    }
    case AxiomKind::kEfficiency: {
      Game v = uniform(1);
      const double violation = CheckEfficiency(f, v);
      return {std::move(v), {CheckOutcome::kChecked, violation}};
    }
    case AxiomKind::kSymmetry: {
      const auto [i, j] = DistinctPair(rng, n);
      Game v = ImposeSymmetricPlayers(uniform(1), i, j);
      const CheckResult result = CheckSymmetry(f, v);
      return {std::move(v), result};
    }
    case AxiomKind::kNecessary: {
      Game v = RandomGame(
          {DeriveSeed(seed, 1), n, GameClass::kWithNecessaryPlayer});
      switch (axiom.necessary) {
        case NecessaryVariant::kWeakMean:
        case NecessaryVariant::kPerCapita:
          v = v.WithValue(v.grand(), 0.0);
          break;
        case NecessaryVariant::kZeroNormPerCapita:
          v = v.WithValue(v.grand(), SumSingletons(v));
          break;
        default:
          break;
      }
      const CheckResult result = CheckNecessaryProperty(f, v, axiom.necessary);
      return {std::move(v), result};
    }
    default:
      throw std::logic_error("coalitional axiom in a point bundle");
  }
}

AxiomCheck RunCoalitionalAxiom(const Axiom& axiom,
                               const CoalitionalValueFn& f, int n,
                               std::uint64_t seed) {
  SplitMix64 rng(DeriveSeed(seed, 0));
  const Partition partition = RandomPartition(n, DeriveSeed(seed, 3));
  auto uniform = [&](std::uint64_t stream) {
    return RandomGame({DeriveSeed(seed, stream), n, GameClass::kUniform});
  };
  switch (axiom.kind) {
    case AxiomKind::kAdditivity: {
      Game v = uniform(1);
      const Game w = uniform(2);
      const double violation = CheckAdditivity(f, partition, v, w);
      return {std::move(v), {CheckOutcome::kChecked, violation}};
    }
    case AxiomKind::kNullPlayer: {
      Game v = RandomGame({DeriveSeed(seed, 1), n, GameClass::kWithNullPlayer});
      const CheckResult result = CheckNullPlayer(f, CSGame(v, partition));
      return {std::move(v), result};
    }
    case AxiomKind::kEfficiency: {
      Game v = uniform(1);
      const double violation = CheckEfficiency(f, CSGame(v, partition));
      return {std::move(v), {CheckOutcome::kChecked, violation}};
    }
    case AxiomKind::kCoalitionalNecessary: {
      Game v = RandomGame(
          {DeriveSeed(seed, 1), n, GameClass::kWithNecessaryPlayer});
      if (axiom.coalitional ==
          CoalitionalNecessaryVariant::kPerCapitaCoalitional) {
        v = v.WithValue(v.grand(), 0.0);
      } else if (axiom.coalitional ==
                 CoalitionalNecessaryVariant::kZeroNormPerCapitaCoalitional) {
        double unions = 0.0;
        for (const Coalition u : partition.unions()) unions += v(u);
        v = v.WithValue(v.grand(), unions);
      }
      const CheckResult result = CheckCoalitionalNecessaryProperty(
          f, CSGame(v, partition), axiom.coalitional);
      return {std::move(v), result};
    }
    case AxiomKind::kSymmetryInsideUnions: {
      const auto [i, j] = DistinctPair(rng, n);
      Game v = ImposeSymmetricPlayers(uniform(1), i, j);
      const CheckResult result =
          CheckUnionSymmetries(f, CSGame(v, Join(partition, i, j))).inside;
      return {std::move(v), result};
    }
    case AxiomKind::kSymmetryAmongUnions: {
      Partition p = partition;
      if (p.num_unions() == 1) {
        const int loner = rng.Below(n);
        p = Partition(n, {Coalition::Grand(n).Without(loner),
                          Coalition::Singleton(loner)});
      }
      const auto [k, l] = DistinctPair(rng, p.num_unions());
      Game v = ImposeSymmetricUnions(CSGame(uniform(1), p), k, l);
      const CheckResult result = CheckUnionSymmetries(f, CSGame(v, p)).among;
      return {std::move(v), result};
    }
    default:
      throw std::logic_error("point axiom in a coalitional bundle");
  }
}

}  // namespace

std::string_view ToString(Theorem theorem) {
  switch (theorem) {
    case Theorem::kT1a: return "T1a";
    case Theorem::kT1b: return "T1b";
    case Theorem::kT2: return "T2";
    case Theorem::kT3: return "T3";
    case Theorem::kT4: return "T4";
    case Theorem::kT5: return "T5";
    case Theorem::kT6: return "T6";
    case Theorem::kT7: return "T7";
    case Theorem::kT8: return "T8";
  }
  return "?";
}

std::optional<Theorem> ParseTheorem(std::string_view tag) {
  for (Theorem t : kAllTheorems) {
    if (ToString(t) == tag) return t;
  }
  return std::nullopt;
}

bool IsCoalitional(Theorem theorem) {
  switch (theorem) {
    case Theorem::kT5:
    case Theorem::kT6:
    case Theorem::kT7:
    case Theorem::kT8:
      return true;
    default:
      return false;
  }
}

std::vector<std::string> AxiomNames(Theorem theorem) {
  std::vector<std::string> names;
  for (const Axiom& axiom : Bundle(theorem)) names.push_back(axiom.Name());
  return names;
}

std::optional<Theorem> MatchedTheorem(ValueKind value) {
  switch (value) {
    case ValueKind::kShapley: return Theorem::kT1a;
    case ValueKind::kBanzhaf: return Theorem::kT1b;
    case ValueKind::kG: return Theorem::kT2;
    case ValueKind::kGamma: return Theorem::kT3;
    case ValueKind::kBigGamma: return Theorem::kT4;
    case ValueKind::kBanzhafOwen: return Theorem::kT5;
    case ValueKind::kOwen: return Theorem::kT6;
    case ValueKind::kGammaC: return Theorem::kT7;
    case ValueKind::kBigGammaC: return Theorem::kT8;
    default: return std::nullopt;
  }
}

AuditReport Audit(const AuditConfig& config) {
  if (IsCoalitional(config.value) != IsCoalitional(config.theorem)) {
    throw std::invalid_argument(
        std::string(ToString(config.value)) + " cannot be audited against " +
        std::string(ToString(config.theorem)) +
        ": point values go with T1a-T4, coalitional values with T5-T8");
  }
  if (config.min_players < 2 || config.max_players > kMaxAuditPlayers ||
      config.min_players > config.max_players) {
    throw std::invalid_argument("audit player range must lie within 2..12");
  }
  if (config.trials < 0) throw std::invalid_argument("negative trial count");

  AuditReport report;
  report.value = config.value;
  report.theorem = config.theorem;
  report.trials = config.trials;
  report.min_players = config.min_players;
  report.max_players = config.max_players;
  report.seed = config.seed;
  report.tolerance = config.tolerance;

  const std::vector<Axiom> bundle = Bundle(config.theorem);
  const int span = config.max_players - config.min_players + 1;
  const bool coalitional = IsCoalitional(config.theorem);
  const PointValueFn point = coalitional ? nullptr : PointValue(config.value);
  const CoalitionalValueFn coal =
      coalitional ? CoalitionalValue(config.value) : nullptr;

  for (int trial = 0; trial < config.trials; ++trial) {
    const int n = config.min_players + trial % span;
    const std::uint64_t trial_seed = DeriveSeed(config.seed, trial);
    for (std::size_t a = 0; a < bundle.size(); ++a) {
      const std::uint64_t seed = DeriveSeed(trial_seed, a);
      const AxiomCheck check =
          coalitional ? RunCoalitionalAxiom(bundle[a], coal, n, seed)
                      : RunPointAxiom(bundle[a], point, n, seed);
      if (!check.result.Passed(config.tolerance)) {
        report.failures.push_back({trial, n, GameDigest(check.game),
                                   bundle[a].Name(), check.result.violation,
                                   check.result.outcome});
      }
    }
  }
  return report;
}

}  // namespace coopgame
