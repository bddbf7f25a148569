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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "coopgame/audit.h"
#include "coopgame/axioms.h"
#include "coopgame/game.h"
#include "coopgame/game_file.h"
#include "coopgame/random_games.h"
#include "coopgame/render.h"
#include "coopgame/values.h"
#include "oracles.h"
#include "test_games.h"

namespace coopgame {
namespace {

using Clock = std::chrono::steady_clock;

constexpr double kTol = 1e-9;
constexpr int kRandomGames = 500;

struct Outcome {
  bool passed = false;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Format(const char* fmt, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

// Random game with 1..max_players players.
Game SampleGame(std::uint64_t seed, int max_players) {
  SplitMix64 rng(seed);
  const int n = 1 + rng.Below(max_players);
  return RandomGame({DeriveSeed(seed, 1), n});
}

// Random partition into at most `max_unions` unions.
Partition SamplePartition(int n, int max_unions, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int labels = std::min(n, max_unions);
  std::vector<std::uint64_t> masks(labels, 0);
  for (int i = 0; i < n; ++i) masks[rng.Below(labels)] |= std::uint64_t{1} << i;
  std::vector<Coalition> unions;
  for (std::uint64_t m : masks) {
    if (m != 0) unions.emplace_back(m);
  }
  return Partition(n, std::move(unions));
}

// Expected rows are 4-decimal truncations of exact rationals. The computed
// values must match the rationals to 1e-9 and render to exactly those rows.
Outcome TableReproduction(const std::string& file, const std::vector<double>& ed,
                          const std::vector<double>& shapley,
                          const std::vector<double>& big_gamma,
                          const std::vector<std::string>& expected_rows, bool timed) {
  const GameFile game_file = ReadGameFile(DataPath(file));
  const Clock::time_point start = Clock::now();
  const Allocation a = EqualDivision(game_file.game);
  const Allocation b = Shapley(game_file.game);
  const Allocation c = BigGammaValue(game_file.game);
  const double elapsed = Seconds(start);

  const double gap = std::max({MaxGap(a, ed), MaxGap(b, shapley), MaxGap(c, big_gamma)});
  std::string expected = "player | ed | shapley | big-gamma\n";
  for (const std::string& row : expected_rows) expected += row + "\n";
  const bool rows_ok =
      RenderTable(game_file.game.labels(),
                  {{"ed", a}, {"shapley", b}, {"big-gamma", c}}) == expected;
  Outcome out;
  out.passed = gap <= kTol && rows_ok && (!timed || elapsed < 1e-3);
  out.detail = Format("max gap %.2e, compute %.1f us", gap, elapsed * 1e6) +
               (rows_ok ? ", rows match (\"" + expected_rows[0] + "\", ...)"
                        : ", rows differ");
  return out;
}

Outcome Criterion1() {
  return TableReproduction("elevator_c.json", {40, 40, 40},
                           {100.0 / 3, 115.0 / 3, 145.0 / 3}, {32.5, 38.75, 48.75},
                           {"1 | 40 | 33.3333 | 32.5", "2 | 40 | 38.3333 | 38.75",
                            "3 | 40 | 48.3333 | 48.75"},
                           true);
}

Outcome Criterion2() {
  return TableReproduction("elevator_d.json", {110.0 / 3, 110.0 / 3, 110.0 / 3}, {0, 50, 60},
                           {-20.0 / 3, 160.0 / 3, 190.0 / 3},
                           {"1 | 36.6666 | 0 | -6.6666", "2 | 36.6666 | 50 | 53.3333",
                            "3 | 36.6666 | 60 | 63.3333"},
                           false);
}

Outcome Criterion3() {
  const Clock::time_point start = Clock::now();
  std::size_t failures = 0;
  int pairs = 0;
  std::string failed;
  for (ValueKind value : kAllValueKinds) {
    const auto theorem = MatchedTheorem(value);
    if (!theorem) continue;
    AuditConfig config;
    config.value = value;
    config.theorem = *theorem;
    config.trials = kRandomGames;
    config.min_players = 2;
    config.max_players = 7;
    config.seed = 2026;
    const AuditReport report = Audit(config);
    ++pairs;
    failures += report.failures.size();
    if (!report.Passed()) failed += " " + std::string(ToString(value));
  }
  const double elapsed = Seconds(start);

  std::size_t control_failures[2] = {0, 0};
  const std::pair<ValueKind, Theorem> controls[2] = {
      {ValueKind::kBanzhaf, Theorem::kT4}, {ValueKind::kGamma, Theorem::kT2}};
  for (int c = 0; c < 2; ++c) {
    AuditConfig config;
    config.value = controls[c].first;
    config.theorem = controls[c].second;
    config.trials = kRandomGames;
    config.seed = 2026;
    control_failures[c] = Audit(config).failures.size();
  }
  Outcome out;
  out.passed = pairs == 9 && failures == 0 && elapsed < 60.0 && control_failures[0] > 0 &&
               control_failures[1] > 0;
  out.detail = std::to_string(pairs) + " matched pairs, " + std::to_string(failures) +
               " failures" + failed + Format(", %.2f s", elapsed) +
               "; controls banzhaf/T4 " + std::to_string(control_failures[0]) +
               " and gamma/T2 " + std::to_string(control_failures[1]) + " failures";
  return out;
}

Outcome Criterion4() {
  double worst = 0.0;
  for (int t = 0; t < kRandomGames; ++t) {
    const Game g = SampleGame(DeriveSeed(4, t), 7);
    const Partition p = RandomPartition(g.num_players(), DeriveSeed(40, t));
    const CSGame csg(g, p);
    worst = std::max(worst, MaxGap(Shapley(g), ShapleyPermutationOracle(g)));
    worst = std::max(worst, MaxGap(Owen(csg), OwenOrderingOracle(csg)));
  }
  return {worst <= kTol, Format("%.0f games, max gap %.2e", kRandomGames, worst)};
}

Outcome Criterion5() {
  double worst = 0.0;
  const CoalitionalValueFn gamma_c = CoalitionalValue(ValueKind::kGammaC);
  const CoalitionalValueFn big_gamma_c = CoalitionalValue(ValueKind::kBigGammaC);
  for (int t = 0; t < kRandomGames; ++t) {
    const Game g = SampleGame(DeriveSeed(5, t), 8);
    const CSGame csg(g, SamplePartition(g.num_players(), 4, DeriveSeed(50, t)));
    worst = std::max(worst, CheckQuotientProperty(gamma_c, csg));
    worst = std::max(worst, CheckQuotientProperty(big_gamma_c, csg));
  }
  // u_N on three players in a single union: the union total is 1/4, while
  // the one-player quotient game gives 1.
  const CSGame witness(UnanimityGame(3, Coalition::Grand(3)), Partition::GrandUnion(3));
  const double violation =
      CheckQuotientProperty(CoalitionalValue(ValueKind::kBanzhafOwen), witness);
  return {worst <= kTol && violation > 1e-3,
          Format("max gap %.2e; banzhaf-owen witness off by %.4f", worst, violation)};
}

Outcome Criterion6() {
  double worst = 0.0;
  for (int t = 0; t < kRandomGames; ++t) {
    const Game g = SampleGame(DeriveSeed(6, t), 7);
    const CSGame csg(g, Partition::Singletons(g.num_players()));
    worst = std::max(worst, MaxGap(GammaC(csg), GammaValue(g)));
    worst = std::max(worst, MaxGap(BigGammaC(csg), BigGammaValue(g)));
    worst = std::max(worst, MaxGap(Owen(csg), Shapley(g)));
    worst = std::max(worst, MaxGap(BanzhafOwen(csg), Banzhaf(g)));
  }
  return {worst <= kTol, Format("%.0f games, max gap %.2e", kRandomGames, worst)};
}

Outcome Criterion7() {
  const MeanEfficiencyClash clash = MeanEfficiencyIncompatibility(3);
  const bool exact = clash.prescribed_total == 0.75 &&
                     clash.prescribed_total == 3.0 / std::pow(2.0, 2) &&
                     clash.grand_worth == 1.0 && !clash.Compatible();
  return {exact, Format("prescribed total %.17g vs v(N) = %g", clash.prescribed_total,
                        clash.grand_worth)};
}

Outcome Criterion8() {
  double worst = 0.0;
  const PointValueFn big_gamma = PointValue(ValueKind::kBigGamma);
  for (int t = 0; t < kRandomGames; ++t) {
    const Game g = SampleGame(DeriveSeed(8, t), 7);
    SplitMix64 rng(DeriveSeed(80, t));
    const double a = rng.Uniform(0.1, 5.0);
    std::vector<double> b(g.num_players());
    for (double& x : b) x = rng.Uniform(-10.0, 10.0);
    worst = std::max(worst, CheckInv(big_gamma, g, a, b));
  }
  const double witness = CheckInv(PointValue(ValueKind::kGamma),
                                  BasisGame(3, Coalition::Of({0, 1})), 1.0,
                                  std::vector<double>{1, 0, 0});
  return {worst <= kTol && witness > 1e-2,
          Format("big-gamma max gap %.2e; gamma witness off by %.4f", worst, witness)};
}

Outcome Criterion9() {
  double smallest = INFINITY;
  for (int n = 1; n <= kMaxPlayers; ++n) {
    smallest = std::min(smallest, SingletonMonotonicityCoefficient(n));
  }
  double worst = 0.0;
  const PointValueFn values[3] = {PointValue(ValueKind::kG), PointValue(ValueKind::kGamma),
                                  PointValue(ValueKind::kBigGamma)};
  for (int t = 0; t < 200; ++t) {
    const Game g = SampleGame(DeriveSeed(9, t), 7);
    SplitMix64 rng(DeriveSeed(90, t));
    const std::uint64_t raised =
        1 + static_cast<std::uint64_t>(rng.Below(static_cast<int>(g.num_coalitions()) - 1));
    const double delta = rng.Uniform(0.01, 5.0);
    for (const PointValueFn& f : values) {
      worst = std::max(worst, CheckCoalitionalMonotonicity(f, g, Coalition(raised), delta));
    }
  }
  return {smallest > 0.0 && worst <= kTol,
          Format("min coefficient over n=1..26 %.6f; max decrease %.2e", smallest, worst)};
}

Outcome Criterion10() {
  double worst = 0.0;
  for (int t = 0; t < kRandomGames; ++t) {
    const Game g = SampleGame(DeriveSeed(10, t), 7);
    const int n = g.num_players();
    const Partition p = RandomPartition(n, DeriveSeed(100, t));
    const CSGame csg(g, p);
    const Game g0 = ZeroNormalize(g);
    const Game g0p = testing::OraclePartitionNormalize(g, p);

    // Point identities: the correction is the bracketed proper-subset sum.
    const std::vector<double> raw = testing::OracleGamma(g);
    const std::vector<double> raw0 = testing::OracleGamma(g0);
    const Allocation gamma = GammaValue(g), ed = EqualDivision(g);
    const Allocation big = BigGammaValue(g), esd = EqualSurplusDivision(g);
    const Allocation gc = GammaC(csg), edu = EqualDivisionUnions(csg);
    const Allocation bgc = BigGammaC(csg), esd2u = EqualSurplusDivision2Unions(csg);
    for (int i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(gamma[i] - ed[i] - (raw[i] - g.Grand() / n)));
      worst = std::max(worst, std::abs(big[i] - esd[i] - (raw0[i] - g0.Grand() / n)));
      worst = std::max(worst,
                       std::abs(gc[i] - edu[i] - testing::OracleGammaCCorrection(g, p, i)));
      worst = std::max(worst,
                       std::abs(bgc[i] - esd2u[i] - testing::OracleGammaCCorrection(g0p, p, i)));
    }
    const CSGame singles(g, Partition::Singletons(n));
    worst = std::max(worst, MaxGap(EqualDivisionUnions(singles), ed));
    worst = std::max(worst, MaxGap(EqualSurplusDivision2Unions(singles), esd));
  }
  return {worst <= kTol, Format("%.0f games, max gap %.2e", kRandomGames, worst)};
}

}  // namespace
}  // namespace coopgame

int main() {
  using coopgame::Outcome;
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"elevator game c table (ed, shapley, big-gamma)", coopgame::Criterion1},
      {"elevator game d table (ed, shapley, big-gamma)", coopgame::Criterion2},
      {"theorem bundle audits T1a..T8 with negative controls", coopgame::Criterion3},
      {"shapley and owen agree with ordering oracles", coopgame::Criterion4},
      {"quotient game property of gamma-c and big-gamma-c", coopgame::Criterion5},
      {"singleton partition reductions", coopgame::Criterion6},
      {"mean property versus efficiency on e_N, n=3", coopgame::Criterion7},
      {"invariance under s-equivalence", coopgame::Criterion8},
      {"coalitional monotonicity", coopgame::Criterion9},
      {"equal division and equal surplus identities", coopgame::Criterion10},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    failed += !out.passed;
    std::printf("%s %2d %s: %s\n", out.passed ? "PASS" : "FAIL", index, name,
                out.detail.c_str());
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
