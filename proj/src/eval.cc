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

#include "hanabi/eval.h"

#include <atomic>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include "hanabi/rng.h"

namespace hanabi {

Summary Summarize(std::span<const int> scores, int max_score) {
  if (scores.empty()) throw HanabiError("Summarize: no scores");
  Summary s;
  s.n = int(scores.size());
  double sum = 0.0;
  int perfect = 0;
  for (int x : scores) {
    sum += x;
    perfect += x == max_score;
  }
  s.mean = sum / s.n;
  if (s.n > 1) {
    double ss = 0.0;
    for (int x : scores) ss += (x - s.mean) * (x - s.mean);
    s.std_error = std::sqrt(ss / (s.n - 1)) / std::sqrt(double(s.n));
  }
  s.perfect_pct = 100.0 * perfect / s.n;
  return s;
}

namespace {

// Runs fn(begin, end, worker) over contiguous chunks of [0, n).
template <typename Fn>
void ParallelChunks(int n, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int w = 0; w < threads; ++w) {
    const int begin = int(int64_t(n) * w / threads);
    const int end = int(int64_t(n) * (w + 1) / threads);
    pool.emplace_back([&, begin, end, w] {
      try {
        fn(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<std::unique_ptr<Agent>> MakeTeam(const GameConfig& config, uint64_t seed,
                                             std::span<const std::string> specs) {
  std::vector<std::unique_ptr<Agent>> team;
  for (int seat = 0; seat < config.players; ++seat) {
    team.push_back(MakeAgent(specs[seat], AgentContext{config, seat, seed}));
  }
  return team;
}

std::vector<Agent*> Pointers(const std::vector<std::unique_ptr<Agent>>& team) {
  std::vector<Agent*> out;
  for (const auto& a : team) out.push_back(a.get());
  return out;
}

// Forwards to an agent and counts protocol calls.
class CountingAgent final : public Agent {
 public:
  explicit CountingAgent(std::unique_ptr<Agent> inner) : inner_(std::move(inner)) {}

  Move Act(const Observation& obs) override { return inner_->Act(obs); }
  void ObserveOutcome(const MoveOutcome& outcome, const Observation& after) override {
    inner_->ObserveOutcome(outcome, after);
  }
  void Reset() override {
    ++resets;
    inner_->Reset();
  }
  void IngestSampleGames(std::span<const Replay> games) override {
    ++ingests;
    ingested += int64_t(games.size());
    inner_->IngestSampleGames(games);
  }
  std::string spec() const override { return inner_->spec(); }

  int64_t resets = 0;
  int64_t ingests = 0;
  int64_t ingested = 0;

 private:
  std::unique_ptr<Agent> inner_;
};

uint64_t CellSeed(uint64_t base, int cell_index) {
  return DeriveSeed(base, 0x100000000ull + uint64_t(cell_index));
}

uint64_t SampleSeed(uint64_t base, int cell_index) {
  return DeriveSeed(base, 0x200000000ull + uint64_t(cell_index));
}

}  // namespace

GameState PlayGame(const GameConfig& config, uint64_t seed, std::span<Agent* const> seats) {
  if (int(seats.size()) != config.players) throw InvalidConfigError("one agent per seat required");
  GameState state = NewGame(config, seed);
  while (!IsTerminal(state)) {
    const int actor = state.current_player();
    const Move move = seats[actor]->Act(Observe(state, actor));
    const MoveOutcome outcome = state.Apply(move);
    for (int seat = 0; seat < config.players; ++seat) {
      seats[seat]->ObserveOutcome(outcome, Observe(state, seat));
    }
  }
  return state;
}

Replay PlayRecordedGame(const GameConfig& config, uint64_t seed,
                        std::span<const std::string> seat_specs) {
  auto team = MakeTeam(config, seed, seat_specs);
  const auto seats = Pointers(team);
  const GameState state = PlayGame(config, seed, seats);
  return RecordReplay(state, std::vector<std::string>(seat_specs.begin(), seat_specs.end()));
}

Json SelfPlayReport::ToJson(bool include_timing) const {
  Json j = {{"config", ConfigToJson(config)},
            {"agent", agent},
            {"base_seed", base_seed},
            {"n_games", stats.n},
            {"mean", stats.mean},
            {"std_error", stats.std_error},
            {"perfect_pct", stats.perfect_pct},
            {"histogram", histogram},
            {"scores", scores}};
  if (include_timing) j["wall_seconds"] = wall_seconds;
  return j;
}

std::string SelfPlayReport::HistogramCsv() const {
  std::string out = "score,count\n";
  for (std::size_t s = 0; s < histogram.size(); ++s) {
    out += std::to_string(s) + "," + std::to_string(histogram[s]) + "\n";
  }
  return out;
}

SelfPlayReport RunSelfPlay(const std::string& agent, const GameConfig& config, int n_games,
                           uint64_t base_seed, int threads, std::vector<Replay>* replays) {
  if (n_games < 1) throw InvalidConfigError("n_games must be at least 1");
  config.Validate();
  CheckAgentSupports(agent, config);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::string> specs(config.players, agent);

  SelfPlayReport report;
  report.config = config;
  report.agent = agent;
  report.base_seed = base_seed;
  report.scores.resize(n_games);
  if (replays) replays->assign(n_games, Replay{});
  ParallelChunks(n_games, threads, [&](int begin, int end, int) {
    for (int i = begin; i < end; ++i) {
      Replay game = PlayRecordedGame(config, base_seed + uint64_t(i), specs);
      report.scores[i] = *game.final_score;
      if (replays) (*replays)[i] = std::move(game);
    }
  });
  report.stats = Summarize(report.scores, config.MaxScore());
  report.histogram.assign(config.MaxScore() + 1, 0);
  for (int s : report.scores) report.histogram[s]++;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json AdHocLog::ToJson() const {
  return {{"trials", trials},
          {"distinct_sample_sets", distinct_sample_sets},
          {"ingest_calls", ingest_calls},
          {"reset_calls", reset_calls},
          {"games_ingested", games_ingested},
          {"seat_counts", seat_counts},
          {"self_play", self_play},
          {"trial_seed", trial_seed},
          {"trial_sample_set", trial_sample_set},
          {"trial_seat", trial_seat}};
}

AdHocCell RunAdHoc(const std::string& eval_agent, const std::string& pool_agent,
                   const GameConfig& config, const AdHocOptions& options, int cell_index) {
  config.Validate();
  CheckAgentSupports(eval_agent, config);
  CheckAgentSupports(pool_agent, config);
  if (options.trials_per_pair < 1 || options.sample_sets < 1 || options.games_per_sample_set < 1) {
    throw InvalidConfigError("ad-hoc options must be positive");
  }
  const int P = config.players;
  const int trials = options.trials_per_pair;
  const int sets = std::min(options.sample_sets, trials);
  const int per_set = options.games_per_sample_set;
  const uint64_t cell_seed = CellSeed(options.base_seed, cell_index);
  const uint64_t sample_seed = SampleSeed(options.base_seed, cell_index);

  // Pool self-play games, grouped into sample sets.
  std::vector<Replay> samples(std::size_t(sets) * per_set);
  const std::vector<std::string> pool_team(P, pool_agent);
  ParallelChunks(int(samples.size()), options.threads, [&](int begin, int end, int) {
    for (int i = begin; i < end; ++i) {
      samples[i] = PlayRecordedGame(config, DeriveSeed(sample_seed, uint64_t(i)), pool_team);
    }
  });

  AdHocCell cell;
  cell.scores.resize(trials);
  cell.log.trials = trials;
  cell.log.trial_sample_set.resize(trials);
  cell.log.trial_seed.resize(trials);
  cell.log.trial_seat.resize(trials);
  const int workers = std::max(1, std::min(options.threads, trials));
  std::vector<int64_t> resets(workers), ingests(workers), ingested(workers);

  ParallelChunks(trials, workers, [&](int begin, int end, int worker) {
    CountingAgent agent(MakeAgent(eval_agent, AgentContext{config, 0, cell_seed}));
    for (int t = begin; t < end; ++t) {
      const uint64_t seed = DeriveSeed(cell_seed, uint64_t(t));
      const int set = t % sets;
      SplitMix64 seat_rng(DeriveSeed(seed, 0x5ea7));
      const int seat = int(seat_rng.Uniform(uint64_t(P)));

      agent.IngestSampleGames(std::span<const Replay>(samples).subspan(std::size_t(set) * per_set, per_set));
      std::vector<std::unique_ptr<Agent>> pool;
      std::vector<Agent*> table(P);
      for (int s = 0; s < P; ++s) {
        if (s == seat) {
          table[s] = &agent;
        } else {
          pool.push_back(MakeAgent(pool_agent, AgentContext{config, s, seed}));
          table[s] = pool.back().get();
        }
      }
      cell.scores[t] = PlayGame(config, seed, table).Score();
      agent.Reset();
      cell.log.trial_seat[t] = seat;
      cell.log.trial_sample_set[t] = set;
      cell.log.trial_seed[t] = seed;
    }
    resets[worker] = agent.resets;
    ingests[worker] = agent.ingests;
    ingested[worker] = agent.ingested;
  });

  for (int w = 0; w < workers; ++w) {
    cell.log.reset_calls += resets[w];
    cell.log.ingest_calls += ingests[w];
    cell.log.games_ingested += ingested[w];
  }
  cell.log.seat_counts.assign(P, 0);
  for (int s : cell.log.trial_seat) cell.log.seat_counts[s]++;
  cell.log.distinct_sample_sets =
      int(std::set<int>(cell.log.trial_sample_set.begin(), cell.log.trial_sample_set.end()).size());
  cell.stats = Summarize(cell.scores, config.MaxScore());
  return cell;
}

namespace {

AdHocCell RunDiagonal(const std::string& agent, const GameConfig& config,
                      const AdHocOptions& options, int cell_index) {
  CheckAgentSupports(agent, config);
  const uint64_t cell_seed = CellSeed(options.base_seed, cell_index);
  const int trials = options.trials_per_pair;
  const std::vector<std::string> team(config.players, agent);
  AdHocCell cell;
  cell.scores.resize(trials);
  cell.log.trials = trials;
  cell.log.self_play = true;
  cell.log.trial_seed.resize(trials);
  ParallelChunks(trials, options.threads, [&](int begin, int end, int) {
    for (int t = begin; t < end; ++t) {
      const uint64_t seed = DeriveSeed(cell_seed, uint64_t(t));
      cell.scores[t] = *PlayRecordedGame(config, seed, team).final_score;
      cell.log.trial_seed[t] = seed;
    }
  });
  cell.stats = Summarize(cell.scores, config.MaxScore());
  return cell;
}

}  // namespace

CrossTable RunCrossTable(const std::vector<std::string>& agents, const GameConfig& config,
                         const AdHocOptions& options) {
  if (agents.empty()) throw InvalidConfigError("crosstable needs at least one agent");
  CrossTable table;
  table.config = config;
  table.agents = agents;
  const int n = int(agents.size());
  table.cells.assign(n, std::vector<AdHocCell>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int index = i * n + j;
      table.cells[i][j] = i == j ? RunDiagonal(agents[i], config, options, index)
                                 : RunAdHoc(agents[i], agents[j], config, options, index);
    }
  }
  return table;
}

Json CrossTable::ToJson() const {
  Json rows = Json::array();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      const AdHocCell& c = cells[i][j];
      row.push_back({{"evaluated", agents[i]},
                     {"pool", agents[j]},
                     {"n", c.stats.n},
                     {"mean", c.stats.mean},
                     {"std_error", c.stats.std_error},
                     {"perfect_pct", c.stats.perfect_pct},
                     {"log", c.log.ToJson()}});
    }
    rows.push_back(row);
  }
  return {{"config", ConfigToJson(config)}, {"agents", agents}, {"cells", rows}};
}

std::string CrossTable::ToCsv() const {
  std::ostringstream out;
  out.precision(6);
  out << "evaluated,pool,n,mean,std_error\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      const Summary& s = cells[i][j].stats;
      out << agents[i] << ',' << agents[j] << ',' << s.n << ',' << s.mean << ',' << s.std_error
          << '\n';
    }
  }
  return out.str();
}

int ActionClassCount(const GameConfig& config) { return 3 * config.ranks + config.colors; }

int ActionClass(const MoveOutcome& outcome, const GameConfig& config) {
  const int R = config.ranks;
  switch (outcome.move.type) {
    case MoveType::kDiscard:
      return outcome.revealed_card->rank - 1;
    case MoveType::kPlay:
      return R + outcome.revealed_card->rank - 1;
    case MoveType::kRevealColor:
      return 2 * R + outcome.move.color;
    case MoveType::kRevealRank:
      return 2 * R + config.colors + outcome.move.rank - 1;
  }
  return -1;
}

std::vector<std::string> ActionClassLabels(const GameConfig& config) {
  std::vector<std::string> labels;
  for (int r = 1; r <= config.ranks; ++r) labels.push_back("Discard " + std::to_string(r));
  for (int r = 1; r <= config.ranks; ++r) labels.push_back("Play " + std::to_string(r));
  for (int c = 0; c < config.colors; ++c) labels.push_back(std::string("Hint ") + ColorLetter(c));
  for (int r = 1; r <= config.ranks; ++r) labels.push_back("Hint " + std::to_string(r));
  return labels;
}

ConditionalActionTable BuildConditionalActionTable(std::span<const Replay> replays) {
  if (replays.empty()) throw HanabiError("conditional action table needs at least one replay");
  const GameConfig& config = replays.front().config;
  const int K = ActionClassCount(config);
  ConditionalActionTable table;
  table.labels = ActionClassLabels(config);
  table.pair_counts.assign(K, std::vector<int64_t>(K, 0));
  table.class_counts.assign(K, 0);
  int64_t total = 0;
  for (const Replay& replay : replays) {
    if (!(replay.config == config)) throw HanabiError("replays mix game configurations");
    int previous = -1;
    for (const MoveOutcome& outcome : replay.outcomes) {
      const int cls = ActionClass(outcome, config);
      table.class_counts[cls]++;
      ++total;
      if (previous >= 0) table.pair_counts[previous][cls]++;
      previous = cls;
    }
  }
  table.conditional.assign(K, std::vector<double>(K, 0.0));
  table.marginal.assign(K, 0.0);
  for (int a = 0; a < K; ++a) {
    int64_t row = 0;
    for (int64_t c : table.pair_counts[a]) row += c;
    if (row > 0) {
      for (int b = 0; b < K; ++b) table.conditional[a][b] = double(table.pair_counts[a][b]) / row;
    }
    if (total > 0) table.marginal[a] = double(table.class_counts[a]) / total;
  }
  return table;
}

Json ConditionalActionTable::ToJson() const {
  return {{"labels", labels},
          {"pair_counts", pair_counts},
          {"class_counts", class_counts},
          {"conditional", conditional},
          {"marginal", marginal}};
}

std::string ConditionalActionTable::ToCsv() const {
  std::ostringstream out;
  out.precision(6);
  out << std::fixed << "a_t,P(a_t)";
  for (const auto& label : labels) out << ',' << label;
  out << '\n';
  for (std::size_t a = 0; a < labels.size(); ++a) {
    out << labels[a] << ',' << marginal[a];
    for (double p : conditional[a]) out << ',' << p;
    out << '\n';
  }
  return out.str();
}

TrainingReport RunBudgetedTraining(const GameConfig& config, std::shared_ptr<StepBudget> budget,
                                   uint64_t base_seed) {
  EnvOptions options;
  options.build_observations = false;
  options.encode_observations = false;
  Env env(config, options, budget);
  SplitMix64 policy(DeriveSeed(base_seed, 0x7a11));
  TrainingReport report;
  while (!budget->Exhausted()) {
    report.turns_when_last_started = budget->consumed;
    EnvStep step = env.Reset(DeriveSeed(base_seed, uint64_t(report.episodes)));
    ++report.episodes;
    while (!step.done) {
      int legal = 0;
      for (uint8_t bit : step.legal_mask) legal += bit;
      int pick = int(policy.Uniform(uint64_t(legal)));
      int action = 0;
      while (!step.legal_mask[action] || pick-- > 0) ++action;
      step = env.Step(action);
    }
  }
  report.turns = budget->consumed;
  report.stopped_by_budget = true;
  return report;
}

}  // namespace hanabi
