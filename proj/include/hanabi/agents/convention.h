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

#ifndef HANABI_AGENTS_CONVENTION_H_
#define HANABI_AGENTS_CONVENTION_H_

#include <optional>

#include "hanabi/agent.h"

namespace hanabi {

// Human-style convention player.
//
// Conventions: a hint marks its newest touched card as a play signal
// (other touched cards become protected); discards take provably useless
// cards first, else the oldest unprotected card. Priorities on each turn:
//   1. play the newest own slot that is provably playable, or that carries
//      a play signal and could still be playable;
//   2. with a token, hint a partner's playable, untouched card (newest
//      first, next player first), making it the newest touched
//      card; color or rank, whichever touches fewer other cards, ties to
//      rank;
//   3. below max tokens, discard a useless card, else the oldest
//      unprotected one;
//   4. otherwise hint the next partner's newest card.
class ConventionAgent final : public Agent {
 public:
  explicit ConventionAgent(const GameConfig& config) : config_(config) {}

  Move Act(const Observation& obs) override;
  void ObserveOutcome(const MoveOutcome& outcome, const Observation& after) override;
  void Reset() override { signals_.clear(); }
  std::string spec() const override { return "convention"; }

  // Play-signal flags of own slots, oldest first.
  const InlineVector<bool, kMaxHandSize>& signals() const { return signals_; }

 private:
  void SyncSize(int hand_size);
  std::optional<Move> PlayablePartnerHint(const Observation& obs) const;
  Move StallHint(const Observation& obs) const;

  GameConfig config_;
  InlineVector<bool, kMaxHandSize> signals_;
};

// Slot a reveal would mark as its play signal: the newest touched slot.
int FocusSlot(uint8_t touched_slots);

}  // namespace hanabi

#endif  // HANABI_AGENTS_CONVENTION_H_
