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

// Checkers for the properties used to characterize values. Every checker
// returns the size of the worst violation it finds; callers compare against a
// tolerance (kTolerance by default).

#ifndef COOPGAME_AXIOMS_H_
#define COOPGAME_AXIOMS_H_

#include <functional>
#include <span>
#include <string_view>

#include "coopgame/game.h"
#include "coopgame/values.h"

namespace coopgame {

inline constexpr double kTolerance = 1e-9;

using PointValueFn = std::function<Allocation(const Game&)>;
using CoalitionalValueFn = std::function<Allocation(const CSGame&)>;

PointValueFn PointValue(ValueKind kind);
CoalitionalValueFn CoalitionalValue(ValueKind kind);

enum class CheckOutcome {
  kChecked,
  // Nothing to check: no null, necessary or symmetric player exists.
  kVacuous,
  // The game does not meet the property's precondition (e.g. v(N) != 0).
  kInapplicable,
};

std::string_view ToString(CheckOutcome outcome);

struct CheckResult {
  CheckOutcome outcome = CheckOutcome::kChecked;
  double violation = 0.0;

  bool Passed(double tolerance = kTolerance) const {
    return outcome == CheckOutcome::kChecked && violation <= tolerance;
  }
};

// |sum_i f_i - v(N)|
double CheckEfficiency(const PointValueFn& f, const Game& game);
double CheckEfficiency(const CoalitionalValueFn& f, const CSGame& csg);

// max_i |f_i(v + w) - f_i(v) - f_i(w)|. Throws on a size mismatch.
double CheckAdditivity(const PointValueFn& f, const Game& v, const Game& w);
double CheckAdditivity(const CoalitionalValueFn& f, const Partition& partition,
                       const Game& v, const Game& w);

// max |f_i - f_j| over symmetric pairs.
CheckResult CheckSymmetry(const PointValueFn& f, const Game& game);

// max |f_i| over null players.
CheckResult CheckNullPlayer(const PointValueFn& f, const Game& game);
CheckResult CheckNullPlayer(const CoalitionalValueFn& f, const CSGame& csg);

enum class NecessaryVariant {
  kWeightedMean,       // (1/n) sum_{S ni i} v(S) / C(n-1, s-1)
  kMean,               // 2^{1-n} sum_{S ni i} v(S)
  kWeakMean,           // as kMean, only for v(N) = 0
  kPerCapita,          // 2^{1-n} sum_{S ni i} v(S)/s, only for v(N) = 0
  kZeroNormPerCapita,  // v(i) + 2^{1-n} sum_{S ni i} v0(S)/s,
                       // only for v(N) = sum_j v(j)
};

std::string_view ToString(NecessaryVariant variant);

// Whether the game meets the variant's precondition.
bool NecessaryPreconditionHolds(const Game& game, NecessaryVariant variant);

// The payoff the variant prescribes to player i (whether or not i is
// necessary).
double NecessaryPrescription(const Game& game, int player,
                             NecessaryVariant variant);

// max |f_i - prescription| over necessary players.
CheckResult CheckNecessaryProperty(const PointValueFn& f, const Game& game,
                                   NecessaryVariant variant);

enum class CoalitionalNecessaryVariant {
  kWeightedCoalitional,
  kCoalitional,
  kPerCapitaCoalitional,          // only for v(N) = 0
  kZeroNormPerCapitaCoalitional,  // only for v(N) = sum_r v(P_r)
};

std::string_view ToString(CoalitionalNecessaryVariant variant);

bool CoalitionalNecessaryPreconditionHolds(const CSGame& csg,
                                           CoalitionalNecessaryVariant variant);

// Averages over the partition-compatible coalitions U_R u T, R a set of other
// unions and T a subset of the player's own union.
double CoalitionalNecessaryPrescription(const CSGame& csg, int player,
                                        CoalitionalNecessaryVariant variant);

CheckResult CheckCoalitionalNecessaryProperty(
    const CoalitionalValueFn& f, const CSGame& csg,
    CoalitionalNecessaryVariant variant);

// max_i |f_i(w) - a f_i(v) - b_i| with w = SEquivalent(v, a, b).
double CheckInv(const PointValueFn& f, const Game& game, double scale,
                std::span<const double> shift);

// Raises v(T) by delta and returns max over i in T of max(0, f_i(v) - f_i(v')).
double CheckCoalitionalMonotonicity(const PointValueFn& f, const Game& game,
                                    Coalition raised, double delta);

// max_k |sum_{i in P_k} f_i(N, v, P) - f_k(M, vP, singletons)|.
double CheckQuotientProperty(const CoalitionalValueFn& f, const CSGame& csg);

struct UnionSymmetryResult {
  CheckResult inside;  // symmetric players sharing a union
  CheckResult among;   // union totals of symmetric unions
};

UnionSymmetryResult CheckUnionSymmetries(const CoalitionalValueFn& f,
                                         const CSGame& csg);

// Coefficient of v({i}) in Gamma_i: (n-3)/n + (2+n)/(2^{n-1} n).
double SingletonMonotonicityCoefficient(int n);

// On e_N, giving every (necessary) player the plain mean hands out n/2^{n-1}
// in total while v(N) = 1, so the mean property and efficiency clash for n > 2.
struct MeanEfficiencyClash {
  int num_players = 0;
  double prescribed_total = 0.0;
  double grand_worth = 0.0;

  bool Compatible() const { return prescribed_total == grand_worth; }
};

MeanEfficiencyClash MeanEfficiencyIncompatibility(int num_players);

}  // namespace coopgame

#endif  // COOPGAME_AXIOMS_H_
