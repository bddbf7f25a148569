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

#ifndef COOPGAME_VALUES_H_
#define COOPGAME_VALUES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "coopgame/game.h"

namespace coopgame {

// Exact C(n, k) for n <= kMaxPlayers; 0 outside 0 <= k <= n.
std::uint64_t Binomial(int n, int k);

// ---------------------------------------------------------------------------
// Classical values.

// phi_i = (1/n) sum_{S not containing i} [v(S u i) - v(S)] / C(n-1, s).
Allocation Shapley(const Game& game);

// Mean marginal contribution over all n! orderings. Independent check of
// Shapley; throws std::invalid_argument for n > 10.
Allocation ShapleyPermutationOracle(const Game& game);

// beta_i = 2^{1-n} sum_{S not containing i} [v(S u i) - v(S)].
Allocation Banzhaf(const Game& game);

// v(N)/n for everybody.
Allocation EqualDivision(const Game& game);

// v({i}) + v0(N)/n.
Allocation EqualSurplusDivision(const Game& game);

// ---------------------------------------------------------------------------
// Values built around necessary players.
//
// All three are efficient, symmetric and additive. For n = 1 each returns
// (v({1})).

// G_i = 2^{1-n} [ sum_{S proper, i in S} v(S)
//                 - sum_{S proper, i not in S} s/(n-s) v(S) ] + v(N)/n.
// A necessary player in a game with v(N) = 0 gets the plain mean of the
// worths of the coalitions containing it.
Allocation GValue(const Game& game);

// gamma_i = 2^{1-n} [ sum_{S proper, i in S} v(S)/s
//                     - sum_{S proper, i not in S} v(S)/(n-s) ] + v(N)/n.
// A necessary player in a game with v(N) = 0 gets the mean per capita worth
// of the coalitions containing it. Not invariant to S-equivalence.
Allocation GammaValue(const Game& game);

// Gamma_i = v({i}) + gamma_i(v0). Invariant to S-equivalence.
Allocation BigGammaValue(const Game& game);

// ---------------------------------------------------------------------------
// Coalitional values. For player i in union k, R ranges over sets of unions,
// T over subsets of P_k.

// Owen value with weights 1/(m C(m-1,r)) * 1/(p_k C(p_k-1,t)).
Allocation Owen(const CSGame& csg);

// Mean marginal contribution over all orderings in which every union is
// contiguous. Independent check of Owen; throws for n > 10.
Allocation OwenOrderingOracle(const CSGame& csg);

// Banzhaf-Owen value, weights 2^{1-m} 2^{1-p_k}. Not efficient, and fails the
// quotient game property once a union has three or more players.
Allocation BanzhafOwen(const CSGame& csg);

// Coalitional extension of gamma. Reduces to gamma for the singleton
// partition and satisfies the quotient game property.
Allocation GammaC(const CSGame& csg);

// Gamma^C_i = v({i}) + (v(P_k) - sum_{j in P_k} v({j}))/p_k + gamma^C_i(v0').
Allocation BigGammaC(const CSGame& csg);

// v(N)/(m p_k): equal division among unions, then inside each union.
Allocation EqualDivisionUnions(const CSGame& csg);

// v({i}) + (v(P_k) - sum_{j in P_k} v({j}))/p_k + (v(N) - sum_r v(P_r))/(m p_k).
Allocation EqualSurplusDivision2Unions(const CSGame& csg);

// ---------------------------------------------------------------------------
// Dispatch.

enum class ValueKind {
  kShapley,
  kBanzhaf,
  kEqualDivision,
  kEqualSurplusDivision,
  kG,
  kGamma,
  kBigGamma,
  kOwen,
  kBanzhafOwen,
  kGammaC,
  kBigGammaC,
  kEqualDivisionUnions,
  kEqualSurplusDivision2Unions,
};

inline constexpr std::array<ValueKind, 13> kAllValueKinds = {
    ValueKind::kShapley,        ValueKind::kBanzhaf,
    ValueKind::kEqualDivision,  ValueKind::kEqualSurplusDivision,
    ValueKind::kG,              ValueKind::kGamma,
    ValueKind::kBigGamma,       ValueKind::kOwen,
    ValueKind::kBanzhafOwen,    ValueKind::kGammaC,
    ValueKind::kBigGammaC,      ValueKind::kEqualDivisionUnions,
    ValueKind::kEqualSurplusDivision2Unions,
};

bool IsCoalitional(ValueKind kind);

// Tags: shapley, banzhaf, ed, esd, g, gamma, big-gamma, owen, banzhaf-owen,
// gamma-c, big-gamma-c, ed-u, esd2-u.
std::string_view ToString(ValueKind kind);
std::optional<ValueKind> ParseValueKind(std::string_view tag);

// Point values only; throws std::invalid_argument for a coalitional kind.
Allocation Compute(ValueKind kind, const Game& game);
// Any kind; point values ignore the partition.
Allocation Compute(ValueKind kind, const CSGame& csg);

}  // namespace coopgame

#endif  // COOPGAME_VALUES_H_
