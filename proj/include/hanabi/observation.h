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

#ifndef HANABI_OBSERVATION_H_
#define HANABI_OBSERVATION_H_

#include <array>
#include <cstdint>
#include <vector>

#include "hanabi/card.h"
#include "hanabi/game.h"

namespace hanabi {

enum class ObservationMode : uint8_t {
  kDefault,  // accumulated hint knowledge, positive and negative
  kMinimal,  // only the latest reveal aimed at the viewer, no memory
};

// One player's censored view of a GameState.
//
// Player-indexed fields are relative to the viewer: other_hands[i] belongs
// to seat (viewer + 1 + i) % players, knowledge[i] to seat (viewer + i) %
// players (so knowledge[0] is the viewer's own hand).
struct Observation {
  GameConfig config;
  ObservationMode mode = ObservationMode::kDefault;
  int viewer = 0;
  int current_player_offset = 0;
  std::vector<Hand> other_hands;
  int own_hand_size = 0;

  std::array<int, kMaxColors> fireworks{};
  int info_tokens = 0;
  int lives = 0;
  int deck_size = 0;
  std::vector<Card> discard_pile;

  std::vector<HandKnowledge> knowledge;
  // The viewer's previous move and everything after it, oldest first.
  std::vector<MoveOutcome> last_outcomes;
  // Filled only when the viewer is to act.
  std::vector<Move> legal_moves;

  int num_players() const { return config.players; }
  // Seat of a relative offset from the viewer.
  int SeatOf(int offset) const { return (viewer + offset) % config.players; }
  // Hand of the player `offset` seats after the viewer (offset >= 1).
  const Hand& HandAt(int offset) const { return other_hands[offset - 1]; }
  bool IsPlayable(Card card) const { return fireworks[card.color] + 1 == card.rank; }
  bool IsMyTurn() const { return current_player_offset == 0; }

  friend bool operator==(const Observation&, const Observation&) = default;
};

Observation Observe(const GameState& state, int viewer,
                    ObservationMode mode = ObservationMode::kDefault);

// Per card identity (color-major index), copies not visible to the viewer:
// total copies minus those in other hands, the discard pile and fireworks.
std::array<int, kMaxColors * kMaxRanks> UnseenCounts(const Observation& obs);

// For each of the viewer's own slots, the set of card indices (bit i =
// Card::FromIndex(i)) it can hold given hint knowledge and every card the
// viewer can see. Exact: an identity is kept only if some assignment of
// unseen copies to all own slots honours every slot's knowledge.
std::vector<uint32_t> OwnCardCandidates(const Observation& obs);

// Public board facts: fireworks and per-identity discard counts.
struct BoardView {
  GameConfig config;
  std::array<int, kMaxColors> fireworks{};
  std::array<std::array<int, kMaxRanks>, kMaxColors> discarded{};

  static BoardView FromObservation(const Observation& obs);
  bool IsPlayable(Card card) const { return fireworks[card.color] + 1 == card.rank; }
  // Already played, or blocked by a lower rank whose copies are all gone.
  bool IsDead(Card card) const;
};

// Card-index bitmask allowed by a knowledge entry alone.
uint32_t KnowledgeCardMask(const CardKnowledge& k, const GameConfig& config);

}  // namespace hanabi

#endif  // HANABI_OBSERVATION_H_
