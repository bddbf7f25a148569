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

#include <stdexcept>
#include <string>

#include "coopgame/values.h"

namespace coopgame {

bool IsCoalitional(ValueKind kind) {
  switch (kind) {
    case ValueKind::kOwen:
    case ValueKind::kBanzhafOwen:
    case ValueKind::kGammaC:
    case ValueKind::kBigGammaC:
    case ValueKind::kEqualDivisionUnions:
    case ValueKind::kEqualSurplusDivision2Unions:
      return true;
    default:
      return false;
  }
}

std::string_view ToString(ValueKind kind) {
  switch (kind) {
    case ValueKind::kShapley: return "shapley";
    case ValueKind::kBanzhaf: return "banzhaf";
    case ValueKind::kEqualDivision: return "ed";
    case ValueKind::kEqualSurplusDivision: return "esd";
    case ValueKind::kG: return "g";
    case ValueKind::kGamma: return "gamma";
    case ValueKind::kBigGamma: return "big-gamma";
    case ValueKind::kOwen: return "owen";
    case ValueKind::kBanzhafOwen: return "banzhaf-owen";
    case ValueKind::kGammaC: return "gamma-c";
    case ValueKind::kBigGammaC: return "big-gamma-c";
    case ValueKind::kEqualDivisionUnions: return "ed-u";
    case ValueKind::kEqualSurplusDivision2Unions: return "esd2-u";
  }
  return "?";
}

std::optional<ValueKind> ParseValueKind(std::string_view tag) {
  for (ValueKind kind : kAllValueKinds) {
    if (ToString(kind) == tag) return kind;
  }
  return std::nullopt;
}

Allocation Compute(ValueKind kind, const Game& game) {
  switch (kind) {
    case ValueKind::kShapley: return Shapley(game);
    case ValueKind::kBanzhaf: return Banzhaf(game);
    case ValueKind::kEqualDivision: return EqualDivision(game);
    case ValueKind::kEqualSurplusDivision: return EqualSurplusDivision(game);
    case ValueKind::kG: return GValue(game);
    case ValueKind::kGamma: return GammaValue(game);
    case ValueKind::kBigGamma: return BigGammaValue(game);
    default:
      throw std::invalid_argument(std::string(ToString(kind)) +
                                  " needs a coalition structure");
  }
}

Allocation Compute(ValueKind kind, const CSGame& csg) {
  switch (kind) {
    case ValueKind::kOwen: return Owen(csg);
    case ValueKind::kBanzhafOwen: return BanzhafOwen(csg);
    case ValueKind::kGammaC: return GammaC(csg);
    case ValueKind::kBigGammaC: return BigGammaC(csg);
    case ValueKind::kEqualDivisionUnions: return EqualDivisionUnions(csg);
    case ValueKind::kEqualSurplusDivision2Unions:
      return EqualSurplusDivision2Unions(csg);
    default:
      return Compute(kind, csg.game());
  }
}

}  // namespace coopgame
