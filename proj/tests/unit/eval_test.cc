// Copyright 2026 The Hanabi Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <numeric>

#include "doctest.h"
#include "hanabi/eval.h"
#include "hanabi/replay.h"
#include "oracles/oracles.h"

namespace hanabi {
namespace {

Json LoadFixture(const std::string& name) {
  std::ifstream in(std::string(HANABI_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  return Json::parse(in);
}

TEST_CASE("summarize small samples") {
  const std::vector<int> perfect = {25, 25, 25, 25};
  Summary s = Summarize(perfect);
  CHECK(s.mean == 25.0);
  CHECK(s.std_error == 0.0);
  CHECK(s.perfect_pct == 100.0);

  const std::vector<int> two = {0, 25};
  s = Summarize(two);
  CHECK(s.mean == 12.5);
  CHECK(s.std_error == doctest::Approx(12.5).epsilon(1e-15));
  CHECK(s.perfect_pct == 50.0);

  const std::vector<int> one = {7};
  CHECK(Summarize(one).std_error == 0.0);
  CHECK_THROWS(Summarize(std::vector<int>{}));
}

TEST_CASE("summarize matches the statistics oracle on fixture scores") {
  const Json fixture = LoadFixture("hat_5p_scores.json");
  const std::vector<int> scores = fixture.at("scores").get<std::vector<int>>();
  REQUIRE(scores.size() == 1000);
  const Summary s = Summarize(scores);
  const oracle::Stats o = oracle::SummarizeScores(scores, 25);
  CHECK(std::abs(s.mean - o.mean) <= 1e-12);
  CHECK(std::abs(s.std_error - o.std_error) <= 1e-12);
  CHECK(std::abs(s.perfect_pct - o.perfect_pct) <= 1e-12);
}

TEST_CASE("self-play report is a pure function of its inputs") {
  const GameConfig config = GameConfig::Standard(4);
  const SelfPlayReport a = RunSelfPlay("hat", config, 1, 17);
  const SelfPlayReport b = RunSelfPlay("hat", config, 1, 17);
  CHECK(a.ToJson().dump() == b.ToJson().dump());
  const SelfPlayReport serial = RunSelfPlay("convention", config, 64, 5, 1);
  const SelfPlayReport parallel = RunSelfPlay("convention", config, 64, 5, 3);
  CHECK(serial.scores == parallel.scores);
  CHECK(serial.ToJson().dump() == parallel.ToJson().dump());
  CHECK(serial.histogram.size() == 26);
  CHECK(std::accumulate(serial.histogram.begin(), serial.histogram.end(), 0) == 64);
  CHECK_THROWS_AS(RunSelfPlay("hat", GameConfig::Standard(2), 1, 0), InvalidConfigError);
}

TEST_CASE("self-play seeds run base .. base+n-1") {
  const GameConfig config = GameConfig::Standard(2);
  const SelfPlayReport report = RunSelfPlay("convention", config, 5, 40);
  for (int i = 0; i < 5; ++i) {
    const Replay r = PlayRecordedGame(config, 40 + i, std::vector<std::string>(2, "convention"));
    CHECK(report.scores[i] == *r.final_score);
  }
}

TEST_CASE("random baseline fixture") {
  const Json fixture = LoadFixture("random_2p_selfplay.json");
  GameConfig config = GameConfig::Standard(2);
  const SelfPlayReport zero = RunSelfPlay("random", config, 1000, 0);
  CHECK(zero.stats.mean == fixture["zero_on_bomb_out"]["mean"].get<double>());
  CHECK(zero.stats.mean < 5.0);
  config.scoring = ScoringMode::kCardsPlayed;
  const SelfPlayReport played = RunSelfPlay("random", config, 1000, 0);
  CHECK(played.stats.mean == doctest::Approx(fixture["cards_played"]["mean"].get<double>()));
}

TEST_CASE("ad-hoc runner accounting") {
  AdHocOptions options;
  options.trials_per_pair = 240;
  options.sample_sets = 120;
  options.games_per_sample_set = 10;
  options.base_seed = 3;
  const AdHocCell cell = RunAdHoc("convention", "hat", GameConfig::Standard(4), options);
  CHECK(cell.log.trials == 240);
  CHECK(cell.stats.n == 240);
  CHECK(cell.log.distinct_sample_sets == 120);
  CHECK(cell.log.ingest_calls == 240);
  CHECK(cell.log.reset_calls == 240);
  CHECK(cell.log.games_ingested == 2400);
  CHECK(std::accumulate(cell.log.seat_counts.begin(), cell.log.seat_counts.end(), 0) == 240);
  for (int c : cell.log.seat_counts) CHECK(c > 30);
  std::set<uint64_t> seeds(cell.log.trial_seed.begin(), cell.log.trial_seed.end());
  CHECK(seeds.size() == 240);
}

TEST_CASE("ad-hoc cells do not depend on trial scheduling") {
  AdHocOptions options;
  options.trials_per_pair = 60;
  options.sample_sets = 20;
  options.base_seed = 11;
  options.threads = 1;
  const AdHocCell serial = RunAdHoc("hat", "convention", GameConfig::Standard(5), options);
  options.threads = 4;
  const AdHocCell parallel = RunAdHoc("hat", "convention", GameConfig::Standard(5), options);
  CHECK(serial.scores == parallel.scores);
  CHECK(serial.log.ToJson() == parallel.log.ToJson());
}

TEST_CASE("crosstable diagonal is self-play") {
  AdHocOptions options;
  options.trials_per_pair = 200;
  options.sample_sets = 100;
  options.base_seed = 5;
  const GameConfig config = GameConfig::Standard(4);
  const CrossTable table = RunCrossTable({"hat", "convention"}, config, options);
  REQUIRE(table.cells.size() == 2);
  REQUIRE(table.cells[0].size() == 2);
  CHECK(table.cells[0][0].log.self_play);
  CHECK_FALSE(table.cells[0][1].log.self_play);
  const SelfPlayReport hat = RunSelfPlay("hat", config, 200, 99);
  const double se = std::hypot(hat.stats.std_error, table.cells[0][0].stats.std_error);
  CHECK(std::abs(hat.stats.mean - table.cells[0][0].stats.mean) <= 2 * se + 1e-9);
  CHECK(table.cells[0][1].stats.mean < 0.5 * table.cells[0][0].stats.mean);
  CHECK(table.ToCsv().find("hat,convention,200,") != std::string::npos);
}

TEST_CASE("single repeated action class") {
  // Every move a rank-1 hint: the only row with support has one entry.
  GameState s = NewGame(GameConfig::Standard(2), 1);
  Position pos;
  pos.config = GameConfig::Standard(2);
  pos.hands = {{Card(0, 1), Card(0, 2)}, {Card(1, 1), Card(1, 2)}};
  s = GameStateFromPosition(pos);
  for (int i = 0; i < 6; ++i) s.Apply(Move::RevealRank(1, 1));
  const Replay r = RecordReplay(s);
  const auto table = BuildConditionalActionTable(std::span<const Replay>(&r, 1));
  const int hint1 = ActionClass(s.history()[0], s.config());
  CHECK(table.labels[hint1] == "Hint 1");
  CHECK(table.conditional[hint1][hint1] == 1.0);
  CHECK(table.marginal[hint1] == 1.0);
  CHECK(table.pair_counts[hint1][hint1] == 5);
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    if (int(i) != hint1) CHECK(table.class_counts[i] == 0);
  }
  CHECK_THROWS(BuildConditionalActionTable(std::span<const Replay>()));
}

TEST_CASE("action classes use the moved card's true rank") {
  const GameConfig config = GameConfig::Standard(2);
  CHECK(ActionClassCount(config) == 20);
  MoveOutcome o;
  o.move = Move::Play(3);
  o.revealed_card = Card(2, 4);
  o.success = false;
  CHECK(ActionClassLabels(config)[ActionClass(o, config)] == "Play 4");
  o.move = Move::Discard(0);
  o.revealed_card = Card(4, 1);
  CHECK(ActionClassLabels(config)[ActionClass(o, config)] == "Discard 1");
  o.move = Move::RevealColor(1, 3);
  CHECK(ActionClassLabels(config)[ActionClass(o, config)] == "Hint W");
}

TEST_CASE("convention action table signature") {
  const Json fixture = LoadFixture("convention_2p_action_table.json");
  std::vector<Replay> replays;
  const GameConfig config = GameConfig::Standard(2);
  RunSelfPlay("convention", config, 1000, 0, 1, &replays);
  const auto table = BuildConditionalActionTable(replays);
  CHECK(table.class_counts == fixture["class_counts"].get<std::vector<int64_t>>());
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    double sum = 0;
    for (double p : table.conditional[i]) sum += p;
    if (table.class_counts[i] > 0) CHECK(std::abs(sum - 1.0) <= 1e-9);
  }
  for (const auto& [hint, successor] : fixture["hint_rank_top_successor"].items()) {
    const int row = int(std::find(table.labels.begin(), table.labels.end(), hint) - table.labels.begin());
    const auto& r = table.conditional[row];
    const int top = int(std::max_element(r.begin(), r.end()) - r.begin());
    CHECK(table.labels[top] == successor.get<std::string>());
  }
  const auto again = BuildConditionalActionTable(replays);
  CHECK(again.ToCsv() == table.ToCsv());
}

TEST_CASE("budgeted training stops after the in-flight episode") {
  auto budget = std::make_shared<StepBudget>(StepBudget{1000, 0});
  const TrainingReport report = RunBudgetedTraining(GameConfig::Standard(2), budget, 4);
  CHECK(report.stopped_by_budget);
  CHECK(report.turns >= 1000);
  CHECK(report.turns_when_last_started < 1000);
  CHECK(report.turns == budget->consumed);
  CHECK(report.turns - report.turns_when_last_started <= 200);
  const TrainingReport again =
      RunBudgetedTraining(GameConfig::Standard(2), std::make_shared<StepBudget>(StepBudget{1000, 0}), 4);
  CHECK(again.turns == report.turns);
  CHECK(again.episodes == report.episodes);
}

}  // namespace
}  // namespace hanabi
