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

#ifndef HANABI_REPLAY_H_
#define HANABI_REPLAY_H_

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hanabi/game.h"

namespace hanabi {

inline constexpr std::string_view kReplayFormat = "hnb-v1";

class ReplayError : public HanabiError {
 public:
  using HanabiError::HanabiError;
};

// One recorded game. The deck order is stored next to the seed so files
// stay loadable even where the shuffle cannot be reproduced.
struct Replay {
  std::string format{kReplayFormat};
  std::string prng;
  GameConfig config;
  uint64_t seed = 0;
  std::vector<Card> deck;
  std::vector<std::string> agents;  // one spec per seat, may be empty
  std::vector<MoveOutcome> outcomes;
  // Present once the game has ended.
  std::optional<int> final_score;
  std::optional<TerminalReason> terminal;

  bool complete() const { return final_score.has_value(); }
  std::vector<Move> moves() const;

  friend bool operator==(const Replay&, const Replay&) = default;
};

// Snapshot of a game in progress or finished.
Replay RecordReplay(const GameState& state, std::vector<std::string> agents = {});

// Deals from the stored deck and applies every recorded move.
GameState ReplayToState(const Replay& replay);

std::string ReplayToJsonLines(const Replay& replay);
// Checks format, PRNG tag and move legality; errors name the line. A last
// line cut off mid-write (no trailing newline) is dropped.
Replay ParseReplay(std::string_view text);

void WriteReplay(const std::string& path, const Replay& replay);
Replay ReadReplay(const std::string& path);

// Append-only writer: header on open, one line per move, end line on
// Finish. Every line is flushed as written.
class ReplayWriter {
 public:
  ReplayWriter(const std::string& path, const GameState& initial,
               std::vector<std::string> agents = {});
  void Append(const MoveOutcome& outcome);
  void Finish(const GameState& final_state);

 private:
  void WriteLine(const std::string& line);

  std::ofstream out_;
  int turn_ = 0;
};

struct VerifyResult {
  bool ok = true;
  std::optional<int> divergent_turn;  // first mismatching move index
  std::string message;
};

// Re-deals from (config, seed) with this build's shuffle and re-applies
// every move, comparing each outcome, the deck and the final score.
VerifyResult VerifyReplay(const Replay& replay);

}  // namespace hanabi

#endif  // HANABI_REPLAY_H_
