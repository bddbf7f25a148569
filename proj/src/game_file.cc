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

#include "coopgame/game_file.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace coopgame {
namespace {

using Json = nlohmann::ordered_json;

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

// Rejects repeated keys inside any JSON object; nlohmann would keep the last.
Json ParseStrictJson(std::string_view text) {
  std::vector<std::set<std::string>> open_objects;
  auto callback = [&](int, Json::parse_event_t event, Json& parsed) {
    switch (event) {
      case Json::parse_event_t::object_start:
        open_objects.emplace_back();
        break;
      case Json::parse_event_t::object_end:
        open_objects.pop_back();
        break;
      case Json::parse_event_t::key: {
        const std::string key = parsed.get<std::string>();
        if (!open_objects.back().insert(key).second) {
          throw InputError("duplicate key \"" + key + "\"");
        }
        break;
      }
      default:
        break;
    }
    return true;
  };
  try {
    return Json::parse(text.begin(), text.end(), callback);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

class LabelIndex {
 public:
  explicit LabelIndex(const std::vector<std::string>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      index_[labels[i]] = static_cast<int>(i);
    }
  }

  int Find(const std::string& label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) throw InputError("unknown player \"" + label + "\"");
    return it->second;
  }

  Coalition Add(Coalition s, const std::string& label,
                std::string_view context) const {
    const int i = Find(label);
    if (s.Contains(i)) {
      throw InputError("player \"" + label + "\" repeated in " +
                       std::string(context));
    }
    return s.With(i);
  }

 private:
  std::map<std::string, int> index_;
};

Coalition ParseCoalitionKey(const std::string& key, const LabelIndex& index) {
  Coalition s;
  if (Trim(key).empty()) return s;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = key.find(',', start);
    const std::string label =
        Trim(std::string_view(key).substr(start, comma - start));
    if (label.empty()) throw InputError("empty label in key \"" + key + "\"");
    s = index.Add(s, label, "key \"" + key + "\"");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return s;
}

std::string CoalitionKey(Coalition s, const std::vector<std::string>& labels) {
  std::string key;
  ForEachMember(s, [&](int i) {
    if (!key.empty()) key += ',';
    key += labels[i];
  });
  return key;
}

}  // namespace

CSGame GameFile::AsCSGame() const {
  if (!partition) throw InputError("the game file has no partition");
  return CSGame(game, *partition);
}

GameFile ParseGameFile(std::string_view text) {
  const Json doc = ParseStrictJson(text);
  if (!doc.is_object()) throw InputError("a game file must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "players" && key != "coalitions" && key != "partition" &&
        key != "kind") {
      throw InputError("unknown field \"" + key + "\"");
    }
  }

  if (!doc.contains("players") || !doc["players"].is_array()) {
    throw InputError("\"players\" must be an array of labels");
  }
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const Json& entry : doc["players"]) {
    if (!entry.is_string()) throw InputError("player labels must be strings");
    std::string label = Trim(entry.get<std::string>());
    if (label.empty()) throw InputError("player labels must be non-empty");
    if (label.find(',') != std::string::npos) {
      throw InputError("player label \"" + label + "\" contains a comma");
    }
    if (!seen.insert(label).second) {
      throw InputError("player \"" + label + "\" listed twice");
    }
    labels.push_back(std::move(label));
  }
  const int n = static_cast<int>(labels.size());
  if (n < 1 || n > kMaxPlayers) {
    throw InputError("a game needs 1.." + std::to_string(kMaxPlayers) +
                     " players");
  }
  const LabelIndex index(labels);

  std::vector<std::pair<Coalition, double>> entries;
  std::map<Coalition, std::string> keys;
  if (doc.contains("coalitions")) {
    const Json& coalitions = doc["coalitions"];
    if (!coalitions.is_object()) {
      throw InputError("\"coalitions\" must be an object");
    }
    for (const auto& [key, worth] : coalitions.items()) {
      if (!worth.is_number()) {
        throw InputError("worth of \"" + key + "\" is not a number");
      }
      const Coalition s = ParseCoalitionKey(key, index);
      const auto [it, inserted] = keys.emplace(s, key);
      if (!inserted) {
        throw InputError("keys \"" + it->second + "\" and \"" + key +
                         "\" name the same coalition");
      }
      entries.emplace_back(s, worth.get<double>());
    }
  }

  std::optional<Partition> partition;
  if (doc.contains("partition")) {
    const Json& unions = doc["partition"];
    if (!unions.is_array()) {
      throw InputError("\"partition\" must be an array of label arrays");
    }
    std::vector<Coalition> members;
    for (const Json& u : unions) {
      if (!u.is_array()) {
        throw InputError("\"partition\" must be an array of label arrays");
      }
      Coalition c;
      for (const Json& label : u) {
        if (!label.is_string()) throw InputError("labels must be strings");
        c = index.Add(c, Trim(label.get<std::string>()), "a union");
      }
      members.push_back(c);
    }
    try {
      partition.emplace(n, std::move(members));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("\"partition\" is not a partition: ") +
                       e.what());
    }
  }

  std::string kind;
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) throw InputError("\"kind\" must be a string");
    kind = doc["kind"].get<std::string>();
    if (kind != "cost" && kind != "benefit") {
      throw InputError("\"kind\" must be \"cost\" or \"benefit\"");
    }
  }

  try {
    return GameFile{MakeGame(n, entries, labels), std::move(partition), kind};
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

GameFile ReadGameFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGameFile(buffer.str());
}

std::string SerializeGameFile(const GameFile& file) {
  const Game& game = file.game;
  const std::vector<std::string>& labels = game.labels();
  Json doc;
  doc["players"] = labels;
  if (!file.kind.empty()) doc["kind"] = file.kind;
  Json coalitions = Json::object();
  for (std::size_t s = 1; s < game.num_coalitions(); ++s) {
    const double worth = game(Coalition(s));
    if (worth != 0.0) coalitions[CoalitionKey(Coalition(s), labels)] = worth;
  }
  doc["coalitions"] = std::move(coalitions);
  if (file.partition) {
    Json unions = Json::array();
    for (const Coalition u : file.partition->unions()) {
      Json names = Json::array();
      ForEachMember(u, [&](int i) { names.push_back(labels[i]); });
      unions.push_back(std::move(names));
    }
    doc["partition"] = std::move(unions);
  }
  return doc.dump(2) + "\n";
}

}  // namespace coopgame
