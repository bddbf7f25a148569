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

// Theorem-bundle audits: run a value against every axiom of a
// characterization on seeded random games.
//
// An audit can only show that a value satisfies the axioms of a bundle on the
// sampled games. Uniqueness cannot be established by sampling; pairing a value
// with a bundle it does not belong to (a negative control) shows that the
// bundle tells values apart.

#ifndef COOPGAME_AUDIT_H_
#define COOPGAME_AUDIT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coopgame/axioms.h"
#include "coopgame/values.h"

namespace coopgame {

enum class Theorem {
  kT1a,  // additivity, null player, necessary weighted mean (Shapley)
  kT1b,  // additivity, null player, necessary mean (Banzhaf)
  kT2,   // additivity, weak necessary mean, efficiency, symmetry (G)
  kT3,   // additivity, per capita mean, efficiency, symmetry (gamma)
  kT4,   // additivity, 0-normalized per capita mean, efficiency, symmetry
  kT5,   // additivity, null player, coalitional mean (Banzhaf-Owen)
  kT6,   // additivity, null player, weighted coalitional mean (Owen)
  kT7,   // additivity, per capita coalitional mean, efficiency,
         // symmetry inside and among unions (gamma^C)
  kT8,   // as kT7 with the 0-normalized variant (Gamma^C)
};

inline constexpr std::array<Theorem, 9> kAllTheorems = {
    Theorem::kT1a, Theorem::kT1b, Theorem::kT2, Theorem::kT3, Theorem::kT4,
    Theorem::kT5,  Theorem::kT6,  Theorem::kT7, Theorem::kT8,
};

std::string_view ToString(Theorem theorem);
std::optional<Theorem> ParseTheorem(std::string_view tag);
bool IsCoalitional(Theorem theorem);
std::vector<std::string> AxiomNames(Theorem theorem);

// The bundle characterizing `value`, if any.
std::optional<Theorem> MatchedTheorem(ValueKind value);

struct AuditConfig {
  ValueKind value = ValueKind::kShapley;
  Theorem theorem = Theorem::kT1a;
  int trials = 500;
  // Trial t uses min_players + t mod (max_players - min_players + 1) players.
  int min_players = 2;
  int max_players = 7;
  std::uint64_t seed = 0;
  double tolerance = kTolerance;
};

struct AuditFailure {
  int trial = 0;
  int num_players = 0;
  std::string digest;  // of the game the axiom was checked on
  std::string axiom;
  double magnitude = 0.0;
  // kVacuous and kInapplicable count as failures.
  CheckOutcome outcome = CheckOutcome::kChecked;
};

struct AuditReport {
  ValueKind value = ValueKind::kShapley;
  Theorem theorem = Theorem::kT1a;
  int trials = 0;
  int min_players = 0;
  int max_players = 0;
  std::uint64_t seed = 0;
  double tolerance = kTolerance;
  std::vector<AuditFailure> failures;  // ordered by trial

  bool Passed() const { return failures.empty(); }
};

// Throws std::invalid_argument when the value and theorem differ in arity
// (point vs coalitional) or the player range is outside 2..12.
AuditReport Audit(const AuditConfig& config);

}  // namespace coopgame

#endif  // COOPGAME_AUDIT_H_
