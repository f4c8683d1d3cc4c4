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

#ifndef HANABI_EVAL_H_
#define HANABI_EVAL_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hanabi/agent.h"
#include "hanabi/env.h"
#include "hanabi/game.h"
#include "hanabi/json_io.h"
#include "hanabi/replay.h"

namespace hanabi {

struct Summary {
  int n = 0;
  double mean = 0.0;
  double std_error = 0.0;    // sample standard deviation / sqrt(n); 0 when n == 1
  double perfect_pct = 0.0;  // share of games at max_score, in percent
};

Summary Summarize(std::span<const int> scores, int max_score = 25);

// Plays one game with one agent per seat: Act() for the seat to move, then
// ObserveOutcome() for every seat. Returns the final state.
GameState PlayGame(const GameConfig& config, uint64_t seed, std::span<Agent* const> seats);

// Builds fresh agents from specs (one per seat) and records the game.
Replay PlayRecordedGame(const GameConfig& config, uint64_t seed,
                        std::span<const std::string> seat_specs);

struct SelfPlayReport {
  GameConfig config;
  std::string agent;
  uint64_t base_seed = 0;
  Summary stats;
  std::vector<int> histogram;  // score -> count, over [0, max_score]
  std::vector<int> scores;     // per game, in seed order
  double wall_seconds = 0.0;

  // Canonical JSON; wall time only when asked, so reports can be diffed.
  Json ToJson(bool include_timing = false) const;
  std::string HistogramCsv() const;
};

// Games use seeds base_seed .. base_seed + n_games - 1. Output does not
// depend on `threads`. When `replays` is given it receives every game.
SelfPlayReport RunSelfPlay(const std::string& agent, const GameConfig& config, int n_games,
                           uint64_t base_seed, int threads = 1,
                           std::vector<Replay>* replays = nullptr);

struct AdHocOptions {
  int trials_per_pair = 1000;
  int sample_sets = 100;
  int games_per_sample_set = 10;
  uint64_t base_seed = 0;
  int threads = 1;
};

// Protocol bookkeeping for one cell, filled while the trials run.
struct AdHocLog {
  int trials = 0;
  int distinct_sample_sets = 0;
  int64_t ingest_calls = 0;
  int64_t reset_calls = 0;
  int64_t games_ingested = 0;
  std::vector<int> seat_counts;       // evaluated agent's seat per trial
  std::vector<int> trial_sample_set;  // per trial; empty for self-play
  std::vector<uint64_t> trial_seed;   // per trial
  std::vector<int> trial_seat;        // per trial; empty for self-play
  bool self_play = false;

  Json ToJson() const;
};

struct AdHocCell {
  Summary stats;
  std::vector<int> scores;
  AdHocLog log;
};

// One evaluated agent in a team filled by `pool_agent`. Each trial offers
// sample set (t mod sample_sets) of the pool agent's self-play, plays one
// game with the evaluated agent at a uniformly random seat, then resets it.
AdHocCell RunAdHoc(const std::string& eval_agent, const std::string& pool_agent,
                   const GameConfig& config, const AdHocOptions& options, int cell_index = 0);

struct CrossTable {
  GameConfig config;
  std::vector<std::string> agents;         // rows: evaluated, columns: pool
  std::vector<std::vector<AdHocCell>> cells;

  Json ToJson() const;
  std::string ToCsv() const;
};

// Square table over `agents`; the diagonal is plain self-play.
CrossTable RunCrossTable(const std::vector<std::string>& agents, const GameConfig& config,
                         const AdHocOptions& options);

// Successor statistics over action classes: Discard of rank r, Play of rank
// r (the moved card's true rank), HintColor c, HintRank r.
struct ConditionalActionTable {
  std::vector<std::string> labels;
  std::vector<std::vector<int64_t>> pair_counts;  // [a_t][a_{t+1}]
  std::vector<int64_t> class_counts;
  std::vector<std::vector<double>> conditional;  // rows sum to 1 where supported
  std::vector<double> marginal;

  Json ToJson() const;
  std::string ToCsv() const;
};

int ActionClassCount(const GameConfig& config);
int ActionClass(const MoveOutcome& outcome, const GameConfig& config);
std::vector<std::string> ActionClassLabels(const GameConfig& config);

ConditionalActionTable BuildConditionalActionTable(std::span<const Replay> replays);

// Minimal sample-limited training loop: issues episodes to a uniformly
// random policy until the shared budget runs out. The episode in flight
// when the limit is reached runs to completion.
struct TrainingReport {
  int64_t episodes = 0;
  int64_t turns = 0;
  int64_t turns_when_last_started = 0;
  bool stopped_by_budget = false;
};

TrainingReport RunBudgetedTraining(const GameConfig& config, std::shared_ptr<StepBudget> budget,
                                   uint64_t base_seed);

}  // namespace hanabi

#endif  // HANABI_EVAL_H_
