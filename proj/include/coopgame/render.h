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

// Text and JSON rendering of allocations and audit reports.

#ifndef COOPGAME_RENDER_H_
#define COOPGAME_RENDER_H_

#include <string>
#include <utility>
#include <vector>

#include "coopgame/audit.h"
#include "coopgame/game.h"

namespace coopgame {

// Truncates toward zero to `decimals` places and drops trailing zeros:
// 40 -> "40", 100/3 -> "33.3333", -20/3 -> "-6.6666". Values within 1e-6 of a
// grid point (in units of the last place) snap to it, so 32.4999999999 prints
// as "32.5".
std::string FormatTruncated(double x, int decimals = 4);

struct ValueColumn {
  std::string name;
  Allocation allocation;
};

// One row per player, cells separated by " | ":
//
//   player | ed | shapley
//   1 | 40 | 33.3333
//
// `caption`, when non-empty, is printed first on its own line.
std::string RenderTable(const std::vector<std::string>& labels,
                        const std::vector<ValueColumn>& columns,
                        const std::string& caption = "");

// {"players": [...], "values": {"<name>": [...], ...}} at full precision.
std::string RenderJson(const std::vector<std::string>& labels,
                       const std::vector<ValueColumn>& columns);

std::string RenderAuditText(const AuditReport& report);
std::string RenderAuditJson(const AuditReport& report);

}  // namespace coopgame

#endif  // COOPGAME_RENDER_H_
