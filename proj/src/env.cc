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

#include "hanabi/env.h"

namespace hanabi {

std::vector<Move> ActionSpace(const GameConfig& config) {
  std::vector<Move> actions;
  actions.reserve(ActionSpaceSize(config));
  for (int s = 0; s < config.hand_size; ++s) actions.push_back(Move::Play(s));
  for (int s = 0; s < config.hand_size; ++s) actions.push_back(Move::Discard(s));
  for (int offset = 1; offset < config.players; ++offset) {
    for (int c = 0; c < config.colors; ++c) actions.push_back(Move::RevealColor(offset, c));
  }
  for (int offset = 1; offset < config.players; ++offset) {
    for (int r = 1; r <= config.ranks; ++r) actions.push_back(Move::RevealRank(offset, r));
  }
  return actions;
}

int ActionSpaceSize(const GameConfig& config) {
  return 2 * config.hand_size + (config.players - 1) * (config.colors + config.ranks);
}

int ActionIndex(const GameConfig& config, const Move& move) {
  const int H = config.hand_size;
  switch (move.type) {
    case MoveType::kPlay:
      return move.slot >= 0 && move.slot < H ? move.slot : -1;
    case MoveType::kDiscard:
      return move.slot >= 0 && move.slot < H ? H + move.slot : -1;
    case MoveType::kRevealColor:
      if (move.target_offset < 1 || move.target_offset >= config.players) return -1;
      if (move.color < 0 || move.color >= config.colors) return -1;
      return 2 * H + (move.target_offset - 1) * config.colors + move.color;
    case MoveType::kRevealRank:
      if (move.target_offset < 1 || move.target_offset >= config.players) return -1;
      if (move.rank < 1 || move.rank > config.ranks) return -1;
      return 2 * H + (config.players - 1) * config.colors +
             (move.target_offset - 1) * config.ranks + move.rank - 1;
  }
  return -1;
}

Env::Env(GameConfig config, EnvOptions options, std::shared_ptr<StepBudget> budget)
    : config_(std::move(config)),
      options_(options),
      budget_(std::move(budget)),
      actions_(ActionSpace(config_)),
      layout_(MakeEncodingLayout(config_)) {
  config_.Validate();
}

const GameState& Env::state() const {
  if (!state_) throw HanabiError("Env::state() before Reset()");
  return *state_;
}

EnvStep Env::Reset(uint64_t seed) {
  state_ = NewGame(config_, seed);
  forfeited_ = false;
  return MakeStep(0.0, std::nullopt);
}

EnvStep Env::Step(int action_index) {
  if (!state_) throw HanabiError("Env::Step() before Reset()");
  if (done_) throw HanabiError("Env::Step() on a finished episode");
  if (action_index < 0 || action_index >= int(actions_.size())) {
    if (!options_.illegal_action_forfeits) {
      throw IllegalMoveError("action index out of range", std::to_string(action_index));
    }
  }
  ++budget_->consumed;
  const int before = state_->Score();
  if (options_.illegal_action_forfeits) {
    const bool in_range = action_index >= 0 && action_index < int(actions_.size());
    if (!in_range || MoveViolation(*state_, actions_[action_index])) {
      done_ = true;
      forfeited_ = true;
      return MakeStep(-double(before), std::nullopt);
    }
  }
  MoveOutcome outcome = state_->Apply(actions_[action_index]);
  return MakeStep(double(state_->Score() - before), outcome);
}

EnvStep Env::MakeStep(double reward, std::optional<MoveOutcome> outcome) {
  const GameState& state = *state_;
  EnvStep step;
  step.terminal = IsTerminal(state);
  if (!forfeited_) done_ = step.terminal.has_value();
  step.reward = reward;
  step.done = done_;
  step.forfeited = forfeited_;
  step.score = forfeited_ ? 0 : state.Score();
  step.current_player = state.current_player();
  step.outcome = outcome;
  step.legal_mask.assign(actions_.size(), 0);
  if (options_.build_observations) {
    step.observation = Observe(state, state.current_player(), options_.mode);
    if (options_.encode_observations) EncodeInto(step.observation, layout_, step.encoded.bits);
    if (!done_) {
      for (const Move& move : step.observation.legal_moves) {
        step.legal_mask[ActionIndex(config_, move)] = 1;
      }
    }
  } else if (!done_) {
    LegalMoves(state, legal_scratch_);
    for (const Move& move : legal_scratch_) step.legal_mask[ActionIndex(config_, move)] = 1;
  }
  return step;
}

}  // namespace hanabi
