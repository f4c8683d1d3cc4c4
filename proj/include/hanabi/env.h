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

#ifndef HANABI_ENV_H_
#define HANABI_ENV_H_

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "hanabi/encoder.h"
#include "hanabi/game.h"
#include "hanabi/observation.h"

namespace hanabi {

// Flat action enumeration: H plays, H discards, (P-1)*C color reveals
// (offset-major), (P-1)*R rank reveals (offset-major).
std::vector<Move> ActionSpace(const GameConfig& config);
int ActionSpaceSize(const GameConfig& config);
// Index of `move` in ActionSpace(config), or -1 if it has no index.
int ActionIndex(const GameConfig& config, const Move& move);

// Environment turns consumed during training. One turn is one Step() call,
// regardless of which seat acted.
struct StepBudget {
  static constexpr int64_t kUnlimited = std::numeric_limits<int64_t>::max();
  static constexpr int64_t kSampleLimited = 100'000'000;

  int64_t limit = kUnlimited;
  int64_t consumed = 0;

  bool Exhausted() const { return consumed >= limit; }
  static StepBudget SampleLimited() { return StepBudget{kSampleLimited, 0}; }
  static StepBudget Unlimited() { return StepBudget{}; }
};

struct EnvOptions {
  ObservationMode mode = ObservationMode::kDefault;
  // Off: steps carry only the legal mask, reward and terminal flags.
  bool build_observations = true;
  bool encode_observations = true;
  // Off: an illegal action throws IllegalMoveError. On: the episode ends
  // as a forfeit scoring 0 and the game state is left untouched.
  bool illegal_action_forfeits = false;
};

struct EnvStep {
  Observation observation;      // for the player to act next
  EncodedObservation encoded;   // empty unless both observation options are on
  double reward = 0.0;
  bool done = false;
  int score = 0;
  int current_player = 0;
  std::vector<uint8_t> legal_mask;  // over ActionSpace(config)
  std::optional<MoveOutcome> outcome;
  std::optional<TerminalReason> terminal;
  bool forfeited = false;

  friend bool operator==(const EnvStep&, const EnvStep&) = default;
};

// Turn-based single-stream environment: each step returns the observation
// of whoever acts next. Not thread-safe; use one instance per thread.
class Env {
 public:
  explicit Env(GameConfig config, EnvOptions options = {},
               std::shared_ptr<StepBudget> budget = std::make_shared<StepBudget>());

  EnvStep Reset(uint64_t seed);
  EnvStep Step(int action_index);

  const GameConfig& config() const { return config_; }
  const GameState& state() const;
  const std::vector<Move>& action_space() const { return actions_; }
  const StepBudget& budget() const { return *budget_; }
  std::shared_ptr<StepBudget> shared_budget() const { return budget_; }
  bool done() const { return done_; }

 private:
  EnvStep MakeStep(double reward, std::optional<MoveOutcome> outcome);

  GameConfig config_;
  EnvOptions options_;
  std::shared_ptr<StepBudget> budget_;
  std::vector<Move> actions_;
  EncodingLayout layout_;
  std::optional<GameState> state_;
  std::vector<Move> legal_scratch_;
  bool done_ = true;
  bool forfeited_ = false;
};

}  // namespace hanabi

#endif  // HANABI_ENV_H_
