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

#include "hanabi/replay.h"

#include <sstream>

#include "hanabi/json_io.h"
#include "hanabi/rng.h"

namespace hanabi {

std::vector<Move> Replay::moves() const {
  std::vector<Move> out;
  out.reserve(outcomes.size());
  for (const MoveOutcome& outcome : outcomes) out.push_back(outcome.move);
  return out;
}

Replay RecordReplay(const GameState& state, std::vector<std::string> agents) {
  Replay replay;
  replay.prng = std::string(kPrngVersion);
  replay.config = state.config();
  replay.seed = state.seed();
  replay.deck.assign(state.initial_deck().begin(), state.initial_deck().end());
  replay.agents = std::move(agents);
  replay.outcomes.assign(state.history().begin(), state.history().end());
  if (auto reason = IsTerminal(state)) {
    replay.terminal = reason;
    replay.final_score = state.Score();
  }
  return replay;
}

GameState ReplayToState(const Replay& replay) {
  GameState state = NewGameFromDeck(replay.config, replay.deck, replay.seed);
  for (const MoveOutcome& outcome : replay.outcomes) state.Apply(outcome.move);
  return state;
}

namespace {

Json HeaderJson(const Replay& replay) {
  Json deck = Json::array();
  for (Card card : replay.deck) deck.push_back(CardToJson(card));
  return {{"type", "header"},
          {"format", replay.format},
          {"prng", replay.prng},
          {"config", ConfigToJson(replay.config)},
          {"seed", replay.seed},
          {"deck", deck},
          {"agents", replay.agents}};
}

Json MoveLineJson(int turn, const MoveOutcome& outcome) {
  Json j = OutcomeToJson(outcome);
  j["type"] = "move";
  j["turn"] = turn;
  return j;
}

Json EndJson(int score, TerminalReason reason) {
  return {{"type", "end"}, {"score", score}, {"reason", std::string(TerminalReasonName(reason))}};
}

TerminalReason ParseTerminalReason(const std::string& name) {
  for (auto reason : {TerminalReason::kAllStacksComplete, TerminalReason::kOutOfLives,
                      TerminalReason::kDeckExhausted}) {
    if (TerminalReasonName(reason) == name) return reason;
  }
  throw HanabiError("unknown terminal reason '" + name + "'");
}

}  // namespace

std::string ReplayToJsonLines(const Replay& replay) {
  std::string out = HeaderJson(replay).dump() + "\n";
  for (std::size_t t = 0; t < replay.outcomes.size(); ++t) {
    out += MoveLineJson(int(t), replay.outcomes[t]).dump() + "\n";
  }
  if (replay.complete()) out += EndJson(*replay.final_score, *replay.terminal).dump() + "\n";
  return out;
}

Replay ParseReplay(std::string_view text) {
  Replay replay;
  std::optional<GameState> state;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const bool terminated = eol != std::string_view::npos;
    const std::string_view line = text.substr(pos, terminated ? eol - pos : std::string_view::npos);
    pos = terminated ? eol + 1 : text.size();
    ++line_no;
    if (line.empty()) continue;
    auto fail = [&](const std::string& what) -> ReplayError {
      return ReplayError("line " + std::to_string(line_no) + ": " + what);
    };

    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::exception&) {
      if (!terminated && state) break;  // torn final write
      throw fail("corrupt line");
    }
    try {
      const std::string type = j.value("type", "");
      if (!state) {
        if (type != "header") throw fail("expected header");
        replay.format = j.value("format", "");
        if (replay.format != kReplayFormat) {
          throw fail("format version mismatch: '" + replay.format + "' (expected " +
                     std::string(kReplayFormat) + ")");
        }
        replay.prng = j.value("prng", "");
        replay.config = ConfigFromJson(j.at("config"));
        replay.seed = j.at("seed").get<uint64_t>();
        for (const Json& card : j.at("deck")) replay.deck.push_back(CardFromJson(card));
        replay.agents = j.value("agents", std::vector<std::string>{});
        try {
          state = NewGameFromDeck(replay.config, replay.deck, replay.seed);
        } catch (const HanabiError& e) {
          throw fail(std::string("bad deck: ") + e.what());
        }
      } else if (type == "move") {
        if (replay.complete()) throw fail("move after end");
        if (j.value("turn", -1) != int(replay.outcomes.size())) throw fail("turn out of sequence");
        MoveOutcome outcome = OutcomeFromJson(j);
        if (IsTerminal(*state)) throw fail("move after the game ended");
        if (auto rule = MoveViolation(*state, outcome.move)) {
          throw fail("illegal move " + outcome.move.ToString() + ": " + std::string(*rule));
        }
        state->Apply(outcome.move);
        replay.outcomes.push_back(outcome);
      } else if (type == "end") {
        replay.final_score = j.at("score").get<int>();
        replay.terminal = ParseTerminalReason(j.at("reason").get<std::string>());
      } else {
        throw fail("unknown record type '" + type + "'");
      }
    } catch (const ReplayError&) {
      throw;
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
  }
  if (!state) throw ReplayError("empty replay");
  return replay;
}

void WriteReplay(const std::string& path, const Replay& replay) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ReplayError("cannot open " + path);
  out << ReplayToJsonLines(replay);
  if (!out) throw ReplayError("write failed: " + path);
}

Replay ReadReplay(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReplayError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseReplay(buffer.str());
}

ReplayWriter::ReplayWriter(const std::string& path, const GameState& initial,
                           std::vector<std::string> agents)
    : out_(path, std::ios::binary | std::ios::trunc) {
  if (!out_) throw ReplayError("cannot open " + path);
  Replay header = RecordReplay(initial, std::move(agents));
  WriteLine(HeaderJson(header).dump());
}

void ReplayWriter::Append(const MoveOutcome& outcome) {
  WriteLine(MoveLineJson(turn_++, outcome).dump());
}

void ReplayWriter::Finish(const GameState& final_state) {
  const auto reason = IsTerminal(final_state);
  if (!reason) throw HanabiError("ReplayWriter::Finish on a game in progress");
  WriteLine(EndJson(final_state.Score(), *reason).dump());
  out_.close();
}

void ReplayWriter::WriteLine(const std::string& line) {
  out_ << line << '\n';
  out_.flush();
  if (!out_) throw ReplayError("replay write failed");
}

VerifyResult VerifyReplay(const Replay& replay) {
  VerifyResult result;
  auto diverge = [&](std::optional<int> turn, std::string message) {
    result.ok = false;
    result.divergent_turn = turn;
    result.message = std::move(message);
    return result;
  };
  if (replay.format != kReplayFormat) return diverge(std::nullopt, "format version mismatch");
  if (replay.prng != kPrngVersion) {
    return diverge(std::nullopt, "prng version mismatch: replay uses '" + replay.prng +
                                     "', this build uses '" + std::string(kPrngVersion) + "'");
  }
  GameState state = NewGame(replay.config, replay.seed);
  if (!std::equal(state.initial_deck().begin(), state.initial_deck().end(), replay.deck.begin(),
                  replay.deck.end())) {
    return diverge(std::nullopt, "deck does not match seed " + std::to_string(replay.seed));
  }
  for (std::size_t t = 0; t < replay.outcomes.size(); ++t) {
    const MoveOutcome& recorded = replay.outcomes[t];
    if (IsTerminal(state)) return diverge(int(t), "move after the game ended");
    if (auto rule = MoveViolation(state, recorded.move)) {
      return diverge(int(t), "illegal move " + recorded.move.ToString() + ": " + std::string(*rule));
    }
    const MoveOutcome actual = state.Apply(recorded.move);
    if (!(actual == recorded)) {
      return diverge(int(t), "outcome differs at turn " + std::to_string(t) + ": recorded " +
                                 OutcomeToJson(recorded).dump() + ", simulated " +
                                 OutcomeToJson(actual).dump());
    }
  }
  const auto reason = IsTerminal(state);
  if (replay.complete()) {
    if (!reason) return diverge(std::nullopt, "replay ends before the game is over");
    if (*replay.final_score != state.Score()) {
      return diverge(std::nullopt, "final score " + std::to_string(*replay.final_score) +
                                       " differs from simulated " + std::to_string(state.Score()));
    }
    if (*replay.terminal != *reason) return diverge(std::nullopt, "terminal reason differs");
  }
  result.message = replay.complete() ? "ok" : "ok (partial game)";
  return result;
}

}  // namespace hanabi
