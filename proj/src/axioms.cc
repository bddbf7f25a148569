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

#include "coopgame/axioms.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coopgame {
namespace {

CheckResult Vacuous() { return {CheckOutcome::kVacuous, 0.0}; }
CheckResult Inapplicable() { return {CheckOutcome::kInapplicable, 0.0}; }

bool NearlyEqual(double a, double b) { return std::abs(a - b) <= kTolerance; }

double SumSingletons(const Game& game, Coalition s) {
  double total = 0.0;
  ForEachMember(s, [&](int j) { total += game.Singleton(j); });
  return total;
}

std::uint64_t OtherUnions(int m, int k) {
  return ((std::uint64_t{1} << m) - 1) & ~(std::uint64_t{1} << k);
}

// 2^{1-m} [ 2^{1-p_k} sum_{R in M\k} sum_{T proper in P_k, i in T} v(U_R u T)/t
//           + (1/p_k) sum_{R in M, k in R} v(U_R)/r ]
double PerCapitaCoalitionalMean(const Game& v, const Partition& p, int i) {
  const int m = p.num_unions();
  const int k = p.UnionOf(i);
  const Coalition own = p.Union(k);
  const int pk = own.size();
  double inner = 0.0;
  ForEachSubset(Coalition(OtherUnions(m, k)), [&](Coalition r) {
    const Coalition outside = p.Merge(r.mask());
    ForEachSubset(own, [&](Coalition t) {
      if (t == own || !t.Contains(i)) return;
      inner += v(outside | t) / t.size();
    });
  });
  double unions = 0.0;
  ForEachSubset(Coalition((std::uint64_t{1} << m) - 1), [&](Coalition r) {
    if (!r.Contains(k)) return;
    unions += v(p.Merge(r.mask())) / r.size();
  });
  return std::ldexp(std::ldexp(inner, -(pk - 1)) + unions / pk, -(m - 1));
}

}  // namespace

PointValueFn PointValue(ValueKind kind) {
  if (IsCoalitional(kind)) {
    throw std::invalid_argument(std::string(ToString(kind)) +
                                " is a coalitional value");
  }
  return [kind](const Game& game) { return Compute(kind, game); };
}

CoalitionalValueFn CoalitionalValue(ValueKind kind) {
  return [kind](const CSGame& csg) { return Compute(kind, csg); };
}

std::string_view ToString(CheckOutcome outcome) {
  switch (outcome) {
    case CheckOutcome::kChecked: return "checked";
    case CheckOutcome::kVacuous: return "vacuous";
    case CheckOutcome::kInapplicable: return "inapplicable";
  }
  return "?";
}

double CheckEfficiency(const PointValueFn& f, const Game& game) {
  return std::abs(f(game).Total() - game.Grand());
}

double CheckEfficiency(const CoalitionalValueFn& f, const CSGame& csg) {
  return std::abs(f(csg).Total() - csg.game().Grand());
}

double CheckAdditivity(const PointValueFn& f, const Game& v, const Game& w) {
  if (v.num_players() != w.num_players()) {
    throw std::invalid_argument("additivity needs games of the same size");
  }
  const Allocation sum = f(v + w);
  const Allocation fv = f(v);
  const Allocation fw = f(w);
  double worst = 0.0;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    worst = std::max(worst, std::abs(sum[i] - fv[i] - fw[i]));
  }
  return worst;
}

double CheckAdditivity(const CoalitionalValueFn& f, const Partition& partition,
                       const Game& v, const Game& w) {
  if (v.num_players() != w.num_players()) {
    throw std::invalid_argument("additivity needs games of the same size");
  }
  const Allocation sum = f(CSGame(v + w, partition));
  const Allocation fv = f(CSGame(v, partition));
  const Allocation fw = f(CSGame(w, partition));
  double worst = 0.0;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    worst = std::max(worst, std::abs(sum[i] - fv[i] - fw[i]));
  }
  return worst;
}

CheckResult CheckSymmetry(const PointValueFn& f, const Game& game) {
  const int n = game.num_players();
  std::optional<Allocation> payoff;
  CheckResult result = Vacuous();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!AreSymmetric(game, i, j)) continue;
      if (!payoff) payoff = f(game);
      result.outcome = CheckOutcome::kChecked;
      result.violation =
          std::max(result.violation, std::abs((*payoff)[i] - (*payoff)[j]));
    }
  }
  return result;
}

CheckResult CheckNullPlayer(const PointValueFn& f, const Game& game) {
  std::optional<Allocation> payoff;
  CheckResult result = Vacuous();
  for (int i = 0; i < game.num_players(); ++i) {
    if (!IsNull(game, i)) continue;
    if (!payoff) payoff = f(game);
    result.outcome = CheckOutcome::kChecked;
    result.violation = std::max(result.violation, std::abs((*payoff)[i]));
  }
  return result;
}

CheckResult CheckNullPlayer(const CoalitionalValueFn& f, const CSGame& csg) {
  return CheckNullPlayer(
      [&](const Game& game) { return f(CSGame(game, csg.partition())); },
      csg.game());
}

std::string_view ToString(NecessaryVariant variant) {
  switch (variant) {
    case NecessaryVariant::kWeightedMean: return "weighted-mean";
    case NecessaryVariant::kMean: return "mean";
    case NecessaryVariant::kWeakMean: return "weak-mean";
    case NecessaryVariant::kPerCapita: return "per-capita";
    case NecessaryVariant::kZeroNormPerCapita: return "zero-norm-per-capita";
  }
  return "?";
}

bool NecessaryPreconditionHolds(const Game& game, NecessaryVariant variant) {
  switch (variant) {
    case NecessaryVariant::kWeightedMean:
    case NecessaryVariant::kMean:
      return true;
    case NecessaryVariant::kWeakMean:
    case NecessaryVariant::kPerCapita:
      return NearlyEqual(game.Grand(), 0.0);
    case NecessaryVariant::kZeroNormPerCapita:
      return NearlyEqual(game.Grand(), SumSingletons(game, game.grand()));
  }
  return false;
}

double NecessaryPrescription(const Game& game, int player,
                             NecessaryVariant variant) {
  const int n = game.num_players();
  const Coalition others = game.grand().Without(player);
  double sum = 0.0;
  switch (variant) {
    case NecessaryVariant::kWeightedMean:
      ForEachSubset(others, [&](Coalition rest) {
        const Coalition s = rest.With(player);
        sum += game(s) / static_cast<double>(Binomial(n - 1, s.size() - 1));
      });
      return sum / n;
    case NecessaryVariant::kMean:
    case NecessaryVariant::kWeakMean:
      ForEachSubset(others,
                    [&](Coalition rest) { sum += game(rest.With(player)); });
      return std::ldexp(sum, -(n - 1));
    case NecessaryVariant::kPerCapita:
      ForEachSubset(others, [&](Coalition rest) {
        const Coalition s = rest.With(player);
        sum += game(s) / s.size();
      });
      return std::ldexp(sum, -(n - 1));
    case NecessaryVariant::kZeroNormPerCapita:
      ForEachSubset(others, [&](Coalition rest) {
        const Coalition s = rest.With(player);
        sum += (game(s) - SumSingletons(game, s)) / s.size();
      });
      return game.Singleton(player) + std::ldexp(sum, -(n - 1));
  }
  return 0.0;
}

CheckResult CheckNecessaryProperty(const PointValueFn& f, const Game& game,
                                   NecessaryVariant variant) {
  if (!NecessaryPreconditionHolds(game, variant)) return Inapplicable();
  std::optional<Allocation> payoff;
  CheckResult result = Vacuous();
  for (int i = 0; i < game.num_players(); ++i) {
    if (!IsNecessary(game, i)) continue;
    if (!payoff) payoff = f(game);
    result.outcome = CheckOutcome::kChecked;
    result.violation =
        std::max(result.violation,
                 std::abs((*payoff)[i] - NecessaryPrescription(game, i, variant)));
  }
  return result;
}

std::string_view ToString(CoalitionalNecessaryVariant variant) {
  switch (variant) {
    case CoalitionalNecessaryVariant::kWeightedCoalitional:
      return "weighted-coalitional";
    case CoalitionalNecessaryVariant::kCoalitional:
      return "coalitional";
    case CoalitionalNecessaryVariant::kPerCapitaCoalitional:
      return "per-capita-coalitional";
    case CoalitionalNecessaryVariant::kZeroNormPerCapitaCoalitional:
      return "zero-norm-per-capita-coalitional";
  }
  return "?";
}

bool CoalitionalNecessaryPreconditionHolds(
    const CSGame& csg, CoalitionalNecessaryVariant variant) {
  const Game& v = csg.game();
  switch (variant) {
    case CoalitionalNecessaryVariant::kWeightedCoalitional:
    case CoalitionalNecessaryVariant::kCoalitional:
      return true;
    case CoalitionalNecessaryVariant::kPerCapitaCoalitional:
      return NearlyEqual(v.Grand(), 0.0);
    case CoalitionalNecessaryVariant::kZeroNormPerCapitaCoalitional: {
      double unions = 0.0;
      for (const Coalition u : csg.partition().unions()) unions += v(u);
      return NearlyEqual(v.Grand(), unions);
    }
  }
  return false;
}

double CoalitionalNecessaryPrescription(const CSGame& csg, int player,
                                        CoalitionalNecessaryVariant variant) {
  const Game& v = csg.game();
  const Partition& p = csg.partition();
  const int m = p.num_unions();
  const int k = p.UnionOf(player);
  const Coalition own = p.Union(k);
  const int pk = own.size();
  switch (variant) {
    case CoalitionalNecessaryVariant::kWeightedCoalitional: {
      double sum = 0.0;
      ForEachSubset(Coalition(OtherUnions(m, k)), [&](Coalition r) {
        const Coalition outside = p.Merge(r.mask());
        const double wr = static_cast<double>(Binomial(m - 1, r.size()));
        ForEachSubset(own, [&](Coalition t) {
          // C(p_k - 1, -1) is undefined; U_R alone never holds a necessary
          // player, so the term is zero anyway.
          if (t.empty()) return;
          sum += v(outside | t) /
                 (wr * static_cast<double>(Binomial(pk - 1, t.size() - 1)));
        });
      });
      return sum / (static_cast<double>(m) * pk);
    }
    case CoalitionalNecessaryVariant::kCoalitional: {
      double sum = 0.0;
      ForEachSubset(Coalition(OtherUnions(m, k)), [&](Coalition r) {
        const Coalition outside = p.Merge(r.mask());
        ForEachSubset(own, [&](Coalition t) { sum += v(outside | t); });
      });
      return std::ldexp(sum, -(m - 1) - (pk - 1));
    }
    case CoalitionalNecessaryVariant::kPerCapitaCoalitional:
      return PerCapitaCoalitionalMean(v, p, player);
    case CoalitionalNecessaryVariant::kZeroNormPerCapitaCoalitional: {
      const double surplus = v(own) - SumSingletons(v, own);
      return v.Singleton(player) + surplus / pk +
             PerCapitaCoalitionalMean(PartitionNormalize(csg), p, player);
    }
  }
  return 0.0;
}

CheckResult CheckCoalitionalNecessaryProperty(
    const CoalitionalValueFn& f, const CSGame& csg,
    CoalitionalNecessaryVariant variant) {
  if (!CoalitionalNecessaryPreconditionHolds(csg, variant)) {
    return Inapplicable();
  }
  std::optional<Allocation> payoff;
  CheckResult result = Vacuous();
  for (int i = 0; i < csg.game().num_players(); ++i) {
    if (!IsNecessary(csg.game(), i)) continue;
    if (!payoff) payoff = f(csg);
    result.outcome = CheckOutcome::kChecked;
    result.violation = std::max(
        result.violation,
        std::abs((*payoff)[i] -
                 CoalitionalNecessaryPrescription(csg, i, variant)));
  }
  return result;
}

double CheckInv(const PointValueFn& f, const Game& game, double scale,
                std::span<const double> shift) {
  const Allocation transformed = f(SEquivalent(game, scale, shift));
  const Allocation original = f(game);
  double worst = 0.0;
  for (std::size_t i = 0; i < original.size(); ++i) {
    worst = std::max(worst, std::abs(transformed[i] - scale * original[i] -
                                     shift[i]));
  }
  return worst;
}

double CheckCoalitionalMonotonicity(const PointValueFn& f, const Game& game,
                                    Coalition raised, double delta) {
  if (raised.empty() || !raised.IsSubsetOf(game.grand())) {
    throw std::invalid_argument("raised coalition must be a non-empty subset");
  }
  if (delta < 0.0) throw std::invalid_argument("delta must be non-negative");
  const Allocation before = f(game);
  const Allocation after = f(game.WithValue(raised, game(raised) + delta));
  double worst = 0.0;
  ForEachMember(raised, [&](int i) {
    worst = std::max(worst, before[i] - after[i]);
  });
  return worst;
}

double CheckQuotientProperty(const CoalitionalValueFn& f, const CSGame& csg) {
  const Partition& p = csg.partition();
  const Allocation payoff = f(csg);
  const Game quotient = QuotientGame(csg);
  const Allocation union_payoff =
      f(CSGame(quotient, Partition::Singletons(p.num_unions())));
  double worst = 0.0;
  for (int k = 0; k < p.num_unions(); ++k) {
    double total = 0.0;
    ForEachMember(p.Union(k), [&](int i) { total += payoff[i]; });
    worst = std::max(worst, std::abs(total - union_payoff[k]));
  }
  return worst;
}

UnionSymmetryResult CheckUnionSymmetries(const CoalitionalValueFn& f,
                                         const CSGame& csg) {
  const Game& v = csg.game();
  const Partition& p = csg.partition();
  std::optional<Allocation> payoff;
  auto payoffs = [&]() -> const Allocation& {
    if (!payoff) payoff = f(csg);
    return *payoff;
  };

  UnionSymmetryResult result{Vacuous(), Vacuous()};
  for (const Coalition u : p.unions()) {
    const std::vector<int> members = u.Members();
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (!AreSymmetric(v, members[a], members[b])) continue;
        result.inside.outcome = CheckOutcome::kChecked;
        result.inside.violation =
            std::max(result.inside.violation,
                     std::abs(payoffs()[members[a]] - payoffs()[members[b]]));
      }
    }
  }
  auto union_total = [&](int k) {
    double total = 0.0;
    ForEachMember(p.Union(k), [&](int i) { total += payoffs()[i]; });
    return total;
  };
  for (int k = 0; k < p.num_unions(); ++k) {
    for (int l = k + 1; l < p.num_unions(); ++l) {
      if (!AreSymmetricUnions(csg, k, l)) continue;
      result.among.outcome = CheckOutcome::kChecked;
      result.among.violation = std::max(
          result.among.violation, std::abs(union_total(k) - union_total(l)));
    }
  }
  return result;
}

double SingletonMonotonicityCoefficient(int n) {
  if (n < 1) throw std::invalid_argument("need at least one player");
  return static_cast<double>(n - 3) / n +
         static_cast<double>(2 + n) / (std::ldexp(1.0, n - 1) * n);
}

MeanEfficiencyClash MeanEfficiencyIncompatibility(int num_players) {
  const Game e_grand =
      BasisGame(num_players, Coalition::Grand(num_players));
  MeanEfficiencyClash clash;
  clash.num_players = num_players;
  clash.grand_worth = e_grand.Grand();
  for (int i = 0; i < num_players; ++i) {
    if (IsNecessary(e_grand, i)) {
      clash.prescribed_total +=
          NecessaryPrescription(e_grand, i, NecessaryVariant::kMean);
    }
  }
  return clash;
}

}  // namespace coopgame
