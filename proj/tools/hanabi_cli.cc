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

// hanabi: command-line front end for evaluation, analysis, replays and the
// play server.

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hanabi/eval.h"
#include "hanabi/http_server.h"
#include "hanabi/replay.h"
#include "hanabi/service.h"

namespace fs = std::filesystem;
using namespace hanabi;

namespace {

struct GameFlags {
  int players = 2;
  std::string variant = "standard";
  std::string scoring = "zero_on_bomb_out";

  void Add(CLI::App* app) {
    app->add_option("-p,--players", players, "Number of players (2-5)")->check(CLI::Range(2, 5));
    app->add_option("--variant", variant, "standard | small | very_small")
        ->check(CLI::IsMember({"standard", "small", "very_small"}));
    app->add_option("--scoring", scoring, "zero_on_bomb_out | cards_played");
  }

  GameConfig Config() const {
    GameConfig config = variant == "small"        ? GameConfig::Small(players)
                        : variant == "very_small" ? GameConfig::VerySmall(players)
                                                  : GameConfig::Standard(players);
    config.scoring = ParseScoringMode(scoring);
    config.Validate();
    return config;
  }
};

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw HanabiError("cannot write " + path);
  out << text;
}

std::vector<std::string> SplitComma(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  for (char c : text) {
    if (c == ',') {
      out.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  out.push_back(item);
  return out;
}

std::vector<std::string> ReplayFiles(const std::vector<std::string>& inputs) {
  std::vector<std::string> files;
  for (const auto& input : inputs) {
    if (fs::is_directory(input)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(input)) {
        const std::string name = entry.path().string();
        if (name.size() > 10 && name.ends_with(".hnb.jsonl")) found.push_back(name);
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(input);
    }
  }
  return files;
}

std::string ShowReplay(const Replay& replay) {
  std::ostringstream out;
  out << "format " << replay.format << "  prng " << replay.prng << "  seed " << replay.seed << "\n";
  out << "players " << replay.config.players << "  scoring " << ScoringModeName(replay.config.scoring)
      << "\n";
  for (std::size_t s = 0; s < replay.agents.size(); ++s) {
    out << "seat " << s << ": " << replay.agents[s] << "\n";
  }
  GameState state = NewGameFromDeck(replay.config, replay.deck, replay.seed);
  for (int p = 0; p < replay.config.players; ++p) {
    out << "hand " << p << ":";
    for (Card card : state.hand(p)) out << ' ' << card.ToString();
    out << "\n";
  }
  for (std::size_t t = 0; t < replay.outcomes.size(); ++t) {
    const MoveOutcome& o = replay.outcomes[t];
    out << "turn " << t << "  seat " << int(o.actor) << "  " << o.move.ToString();
    if (o.revealed_card) out << "  " << o.revealed_card->ToString();
    if (o.success) out << (*o.success ? "  ok" : "  MISPLAY");
    state.Apply(o.move);
    out << "  [score " << state.CardsPlayed() << " info " << state.info_tokens() << " lives "
        << state.lives() << " deck " << state.deck_size() << "]\n";
  }
  if (replay.complete()) {
    out << "final score " << *replay.final_score << " (" << TerminalReasonName(*replay.terminal)
        << ")\n";
  } else {
    out << "partial game, " << replay.outcomes.size() << " moves\n";
  }
  return out.str();
}

PlayServer* g_server = nullptr;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hanabi engine, agents and evaluation harness"};
  app.require_subcommand(1);

  // selfplay
  auto* selfplay = app.add_subcommand("selfplay", "Self-play report for one agent");
  GameFlags sp_game;
  sp_game.Add(selfplay);
  std::string sp_agent = "hat", sp_out, sp_csv, sp_replays;
  int sp_games = 1000, sp_threads = 1;
  uint64_t sp_seed = 0;
  bool sp_timing = false;
  selfplay->add_option("-a,--agent", sp_agent, "Agent spec");
  selfplay->add_option("-n,--games", sp_games, "Number of games")->check(CLI::PositiveNumber);
  selfplay->add_option("-s,--seed", sp_seed, "Base seed");
  selfplay->add_option("-j,--threads", sp_threads, "Worker threads")->check(CLI::PositiveNumber);
  selfplay->add_option("-o,--out", sp_out, "JSON report path (default stdout)");
  selfplay->add_option("--csv", sp_csv, "Histogram CSV path");
  selfplay->add_option("--replays", sp_replays, "Directory for per-game replay files");
  selfplay->add_flag("--timing", sp_timing, "Include wall time in the report");

  // adhoc
  auto* adhoc = app.add_subcommand("adhoc", "Ad-hoc crosstable over a pool of agents");
  GameFlags ah_game;
  ah_game.Add(adhoc);
  std::string ah_agents = "hat,convention", ah_out, ah_csv, ah_log;
  AdHocOptions ah;
  adhoc->add_option("--agents", ah_agents, "Comma-separated agent specs");
  adhoc->add_option("-n,--trials", ah.trials_per_pair, "Trials per cell")->check(CLI::PositiveNumber);
  adhoc->add_option("--sample-sets", ah.sample_sets, "Distinct sample sets per cell")
      ->check(CLI::PositiveNumber);
  adhoc->add_option("--sample-games", ah.games_per_sample_set, "Games per sample set")
      ->check(CLI::PositiveNumber);
  adhoc->add_option("-s,--seed", ah.base_seed, "Base seed");
  adhoc->add_option("-j,--threads", ah.threads, "Worker threads")->check(CLI::PositiveNumber);
  adhoc->add_option("-o,--out", ah_out, "JSON crosstable path (default stdout)");
  adhoc->add_option("--csv", ah_csv, "CSV crosstable path");
  adhoc->add_option("--log", ah_log, "Per-trial JSON lines log");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Conditional action table");
  GameFlags an_game;
  an_game.Add(analyze);
  std::vector<std::string> an_inputs;
  std::string an_agent = "convention", an_out, an_csv;
  int an_games = 1000;
  uint64_t an_seed = 0;
  analyze->add_option("--replays", an_inputs, "Replay files or directories (else self-play)");
  analyze->add_option("-a,--agent", an_agent, "Agent for generated games");
  analyze->add_option("-n,--games", an_games, "Generated games")->check(CLI::PositiveNumber);
  analyze->add_option("-s,--seed", an_seed, "Base seed for generated games");
  analyze->add_option("-o,--out", an_out, "JSON path (default stdout)");
  analyze->add_option("--csv", an_csv, "CSV path");

  // record
  auto* record = app.add_subcommand("record", "Play one game and write its replay");
  GameFlags rec_game;
  rec_game.Add(record);
  std::string rec_agents = "random", rec_out;
  uint64_t rec_seed = 0;
  record->add_option("--agents", rec_agents, "One spec for all seats, or one per seat");
  record->add_option("-s,--seed", rec_seed, "Game seed");
  record->add_option("-o,--out", rec_out, "Replay path (default stdout)");

  // replay
  auto* replay = app.add_subcommand("replay", "Inspect replay files");
  replay->require_subcommand(1);
  auto* verify = replay->add_subcommand("verify", "Re-simulate and compare");
  std::vector<std::string> verify_paths;
  verify->add_option("paths", verify_paths, "Files or directories")->required();
  auto* show = replay->add_subcommand("show", "Print a replay turn by turn");
  std::string show_path;
  show->add_option("path", show_path, "Replay file")->required();

  // serve
  auto* serve = app.add_subcommand("serve", "Run the play server");
  std::string sv_host = "0.0.0.0";
  int sv_port = 8080, sv_delay = 0;
  ServiceOptions sv_options;
  serve->add_option("--host", sv_host, "Bind address");
  serve->add_option("--port", sv_port, "Port")->check(CLI::Range(1, 65535));
  serve->add_option("--replay-dir", sv_options.replay_dir, "Where finished games are written");
  serve->add_option("--bot-delay-ms", sv_delay, "Pause before each bot move");

  CLI11_PARSE(app, argc, argv);

  try {
    if (selfplay->parsed()) {
      std::vector<Replay> replays;
      const auto report = RunSelfPlay(sp_agent, sp_game.Config(), sp_games, sp_seed, sp_threads,
                                      sp_replays.empty() ? nullptr : &replays);
      Emit(sp_out, report.ToJson(sp_timing).dump(2) + "\n");
      if (!sp_csv.empty()) Emit(sp_csv, report.HistogramCsv());
      if (!sp_replays.empty()) {
        fs::create_directories(sp_replays);
        for (const Replay& r : replays) {
          WriteReplay((fs::path(sp_replays) / ("game_" + std::to_string(r.seed) + ".hnb.jsonl")).string(), r);
        }
      }
      std::cerr << sp_agent << ": mean " << report.stats.mean << " +/- " << report.stats.std_error
                << ", perfect " << report.stats.perfect_pct << "%\n";
    } else if (adhoc->parsed()) {
      const auto table = RunCrossTable(SplitComma(ah_agents), ah_game.Config(), ah);
      Emit(ah_out, table.ToJson().dump(2) + "\n");
      if (!ah_csv.empty()) Emit(ah_csv, table.ToCsv());
      if (!ah_log.empty()) {
        std::string lines;
        for (const auto& row : table.cells) {
          for (const auto& cell : row) {
            for (int t = 0; t < cell.log.trials; ++t) {
              Json j = {{"trial", t}, {"seed", cell.log.trial_seed[t]}, {"score", cell.scores[t]},
                        {"self_play", cell.log.self_play}};
              if (!cell.log.self_play) j["sample_set"] = cell.log.trial_sample_set[t];
              lines += j.dump() + "\n";
            }
          }
        }
        Emit(ah_log, lines);
      }
      std::cerr << table.ToCsv();
    } else if (analyze->parsed()) {
      std::vector<Replay> replays;
      if (!an_inputs.empty()) {
        for (const auto& path : ReplayFiles(an_inputs)) replays.push_back(ReadReplay(path));
      } else {
        RunSelfPlay(an_agent, an_game.Config(), an_games, an_seed, 1, &replays);
      }
      const auto table = BuildConditionalActionTable(replays);
      Emit(an_out, table.ToJson().dump(2) + "\n");
      if (!an_csv.empty()) Emit(an_csv, table.ToCsv());
    } else if (record->parsed()) {
      const GameConfig config = rec_game.Config();
      auto specs = SplitComma(rec_agents);
      if (specs.size() == 1) specs.assign(config.players, specs[0]);
      if (int(specs.size()) != config.players) throw InvalidConfigError("need one agent per seat");
      Emit(rec_out, ReplayToJsonLines(PlayRecordedGame(config, rec_seed, specs)));
    } else if (verify->parsed()) {
      int failures = 0;
      const auto files = ReplayFiles(verify_paths);
      for (const auto& path : files) {
        try {
          const VerifyResult result = VerifyReplay(ReadReplay(path));
          if (!result.ok) {
            ++failures;
            std::cout << path << ": FAIL";
            if (result.divergent_turn) std::cout << " at turn " << *result.divergent_turn;
            std::cout << ": " << result.message << "\n";
          } else if (files.size() == 1) {
            std::cout << path << ": " << result.message << "\n";
          }
        } catch (const HanabiError& e) {
          ++failures;
          std::cout << path << ": FAIL: " << e.what() << "\n";
        }
      }
      std::cout << files.size() - failures << "/" << files.size() << " replays verified\n";
      return failures == 0 ? 0 : 1;
    } else if (show->parsed()) {
      std::cout << ShowReplay(ReadReplay(show_path));
    } else if (serve->parsed()) {
      sv_options.bot_delay = std::chrono::milliseconds(sv_delay);
      SessionRegistry registry(sv_options);
      PlayServer server(registry);
      g_server = &server;
      std::signal(SIGINT, [](int) {
        if (g_server) g_server->Stop();
      });
      std::cerr << "listening on " << sv_host << ":" << sv_port << "\n";
      if (!server.Listen(sv_host, sv_port)) {
        std::cerr << "cannot listen on port " << sv_port << "\n";
        return 1;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
