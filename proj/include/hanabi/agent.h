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

#ifndef HANABI_AGENT_H_
#define HANABI_AGENT_H_

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "hanabi/game.h"
#include "hanabi/observation.h"

namespace hanabi {

struct Replay;

// Seat-level policy. One instance per seat per game; never shared between
// threads. Runners call, in order: Act() for the seat to move, then
// ObserveOutcome() on every seat (the actor included) with that seat's
// view after the move.
class Agent {
 public:
  virtual ~Agent() = default;

  // Must return a move from obs.legal_moves.
  virtual Move Act(const Observation& obs) = 0;
  virtual void ObserveOutcome(const MoveOutcome& /*outcome*/, const Observation& /*after*/) {}
  // Drops everything learned in the current game or trial.
  virtual void Reset() {}
  // Sample games of future teammates, offered before an ad-hoc trial.
  virtual void IngestSampleGames(std::span<const Replay> /*games*/) {}

  virtual std::string spec() const = 0;
};

// Construction context handed to the registry.
struct AgentContext {
  GameConfig config;
  int seat = 0;
  // Per-game seed; stochastic agents mix it with their own seed option.
  uint64_t game_seed = 0;
};

// Parsed "name[:key=value[,key=value...]]".
struct AgentSpec {
  std::string name;
  std::map<std::string, std::string> options;

  static AgentSpec Parse(std::string_view text);
  std::string ToString() const;
};

// Registry lookup: "random", "random:seed=7", "hat", "convention". Throws
// InvalidConfigError for unknown names or unsupported player counts.
std::unique_ptr<Agent> MakeAgent(std::string_view spec, const AgentContext& context);

// Throws InvalidConfigError if `spec` cannot play `config`.
void CheckAgentSupports(std::string_view spec, const GameConfig& config);

}  // namespace hanabi

#endif  // HANABI_AGENT_H_
