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

// Game files are JSON documents:
//
//   {
//     "players": ["1", "2", "3"],
//     "kind": "cost",
//     "coalitions": {"1": 80, "2": 90, "1,2": 100, "1,2,3": 120},
//     "partition": [["1"], ["2", "3"]]
//   }
//
// Coalition keys are comma-joined labels; order inside a key is irrelevant
// and surrounding whitespace is ignored. Coalitions that are not listed are
// worth 0. "kind" ("cost" or "benefit") and "partition" are optional.

#ifndef COOPGAME_GAME_FILE_H_
#define COOPGAME_GAME_FILE_H_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coopgame/game.h"

namespace coopgame {

// Malformed or inconsistent input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GameFile {
  Game game;
  std::optional<Partition> partition;
  std::string kind;  // empty when the file has no "kind"

  // Throws InputError when there is no partition.
  CSGame AsCSGame() const;
};

GameFile ParseGameFile(std::string_view text);
GameFile ReadGameFile(const std::filesystem::path& path);

// Lists the non-zero coalitions in ascending mask order.
std::string SerializeGameFile(const GameFile& file);

}  // namespace coopgame

#endif  // COOPGAME_GAME_FILE_H_
