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

#include "coopgame/render.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace coopgame {
namespace {

constexpr int kMaxDecimals = 9;
constexpr double kSnap = 1e-6;
constexpr std::size_t kMaxListedFailures = 20;

}  // namespace

std::string FormatTruncated(double x, int decimals) {
  if (decimals < 0 || decimals > kMaxDecimals) {
    throw std::invalid_argument("decimals must be in 0..9");
  }
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  std::int64_t unit = 1;
  for (int d = 0; d < decimals; ++d) unit *= 10;
  const double y = x * static_cast<double>(unit);
  const double nearest = std::nearbyint(y);
  const double t = std::abs(y - nearest) < kSnap ? nearest : std::trunc(y);
  if (t == 0.0) return "0";

  const std::uint64_t a = static_cast<std::uint64_t>(std::abs(t));
  std::string out = t < 0 ? "-" : "";
  out += std::to_string(a / unit);
  std::uint64_t frac = a % unit;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, decimals - digits.size(), '0');
    digits.erase(digits.find_last_not_of('0') + 1);
    out += '.';
    out += digits;
  }
  return out;
}

std::string RenderTable(const std::vector<std::string>& labels,
                        const std::vector<ValueColumn>& columns,
                        const std::string& caption) {
  std::ostringstream out;
  if (!caption.empty()) out << caption << "\n";
  out << "player";
  for (const ValueColumn& c : columns) out << " | " << c.name;
  out << "\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << labels[i];
    for (const ValueColumn& c : columns) {
      out << " | " << FormatTruncated(c.allocation[static_cast<int>(i)]);
    }
    out << "\n";
  }
  return out.str();
}

std::string RenderJson(const std::vector<std::string>& labels,
                       const std::vector<ValueColumn>& columns) {
  nlohmann::ordered_json doc;
  doc["players"] = labels;
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (const ValueColumn& c : columns) values[c.name] = c.allocation.payoffs;
  doc["values"] = std::move(values);
  return doc.dump(2) + "\n";
}

std::string RenderAuditText(const AuditReport& report) {
  std::ostringstream out;
  out << "value " << ToString(report.value) << ", theorem "
      << ToString(report.theorem) << ", " << report.trials << " trials, "
      << report.min_players << ".." << report.max_players
      << " players, seed " << report.seed << "\n";
  if (report.Passed()) {
    out << "PASS\n";
    return out.str();
  }
  out << "FAIL: " << report.failures.size() << " failed checks\n";
  const std::size_t shown =
      std::min(report.failures.size(), kMaxListedFailures);
  for (std::size_t k = 0; k < shown; ++k) {
    const AuditFailure& f = report.failures[k];
    char magnitude[32];
    std::snprintf(magnitude, sizeof(magnitude), "%.3e", f.magnitude);
    out << "  trial " << f.trial << " (n=" << f.num_players << ", game "
        << f.digest << "): " << f.axiom;
    if (f.outcome == CheckOutcome::kChecked) {
      out << " off by " << magnitude;
    } else {
      out << " " << ToString(f.outcome);
    }
    out << "\n";
  }
  if (shown < report.failures.size()) {
    out << "  ... " << report.failures.size() - shown << " more\n";
  }
  return out.str();
}

std::string RenderAuditJson(const AuditReport& report) {
  nlohmann::ordered_json doc;
  doc["value"] = ToString(report.value);
  doc["theorem"] = ToString(report.theorem);
  doc["trials"] = report.trials;
  doc["min_players"] = report.min_players;
  doc["max_players"] = report.max_players;
  doc["seed"] = report.seed;
  doc["tolerance"] = report.tolerance;
  doc["passed"] = report.Passed();
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const AuditFailure& f : report.failures) {
    failures.push_back({{"trial", f.trial},
                        {"players", f.num_players},
                        {"game", f.digest},
                        {"axiom", f.axiom},
                        {"magnitude", f.magnitude},
                        {"outcome", ToString(f.outcome)}});
  }
  doc["failures"] = std::move(failures);
  return doc.dump(2) + "\n";
}

}  // namespace coopgame
