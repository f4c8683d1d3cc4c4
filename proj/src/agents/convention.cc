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

#include "hanabi/agents/convention.h"

#include <bit>

#include "hanabi/knowledge.h"

namespace hanabi {

int FocusSlot(uint8_t touched_slots) {
  return touched_slots == 0 ? -1 : 31 - std::countl_zero(uint32_t(touched_slots));
}

namespace {

bool AllOf(uint32_t candidates, int ranks, auto&& pred) {
  if (candidates == 0) return false;
  for (uint32_t m = candidates; m != 0; m &= m - 1) {
    if (!pred(Card::FromIndex(std::countr_zero(m), ranks))) return false;
  }
  return true;
}

bool AnyOf(uint32_t candidates, int ranks, auto&& pred) {
  for (uint32_t m = candidates; m != 0; m &= m - 1) {
    if (pred(Card::FromIndex(std::countr_zero(m), ranks))) return true;
  }
  return false;
}

// True if some visible hand already holds a touched copy of `card`.
bool AlreadyClued(const Observation& obs, Card card) {
  for (int offset = 1; offset < obs.num_players(); ++offset) {
    const Hand& hand = obs.HandAt(offset);
    for (int s = 0; s < hand.size(); ++s) {
      if (hand[s] == card && obs.knowledge[offset][s].Touched()) return true;
    }
  }
  return false;
}

}  // namespace

void ConventionAgent::SyncSize(int hand_size) {
  while (signals_.size() < hand_size) signals_.push_back(false);
  while (signals_.size() > hand_size) signals_.erase(signals_.size() - 1);
}

void ConventionAgent::ObserveOutcome(const MoveOutcome& outcome, const Observation& after) {
  const int me = after.viewer;
  const Move& move = outcome.move;
  if (outcome.actor == me && !move.IsReveal()) {
    if (move.slot < signals_.size()) signals_.erase(move.slot);
    SyncSize(after.own_hand_size);
    return;
  }
  SyncSize(after.own_hand_size);
  if (move.IsReveal() && outcome.Target(after.num_players()) == me) {
    const int focus = FocusSlot(outcome.touched_slots);
    if (focus >= 0 && focus < signals_.size()) signals_[focus] = true;
  }
}

std::optional<Move> ConventionAgent::PlayablePartnerHint(const Observation& obs) const {
  const int P = obs.num_players();
  for (int offset = 1; offset < P; ++offset) {
    const Hand& hand = obs.HandAt(offset);
    const HandKnowledge& known = obs.knowledge[offset];
    for (int s = hand.size() - 1; s >= 0; --s) {
      const Card card = hand[s];
      if (!obs.IsPlayable(card) || known[s].Touched() || AlreadyClued(obs, card)) continue;
      const Move by_rank = Move::RevealRank(offset, card.rank);
      const Move by_color = Move::RevealColor(offset, card.color);
      const uint8_t rank_touch = TouchedSlots(hand, by_rank);
      const uint8_t color_touch = TouchedSlots(hand, by_color);
      const bool rank_ok = FocusSlot(rank_touch) == s;
      const bool color_ok = FocusSlot(color_touch) == s;
      if (rank_ok && (!color_ok || std::popcount(rank_touch) <= std::popcount(color_touch))) {
        return by_rank;
      }
      if (color_ok) return by_color;
    }
  }
  return std::nullopt;
}

Move ConventionAgent::StallHint(const Observation& obs) const {
  const int P = obs.num_players();
  const BoardView board = BoardView::FromObservation(obs);
  for (int offset = 1; offset < P; ++offset) {
    const Hand& hand = obs.HandAt(offset);
    for (int s = hand.size() - 1; s >= 0; --s) {
      for (const Move hint : {Move::RevealRank(offset, hand[s].rank),
                              Move::RevealColor(offset, hand[s].color)}) {
        const uint8_t touched = TouchedSlots(hand, hint);
        const int focus = FocusSlot(touched);
        const Card target = hand[focus];
        if (board.IsPlayable(target)) return hint;
        // Accept only if the receiver cannot read the hint as "play".
        MoveOutcome sim;
        sim.actor = int8_t(obs.viewer);
        sim.move = hint;
        sim.touched_slots = touched;
        const HandKnowledge after = UpdateKnowledge(obs.knowledge[offset], sim, obs.config);
        const uint32_t mask = KnowledgeCardMask(after[focus], obs.config);
        if (!AnyOf(mask, obs.config.ranks, [&](Card c) { return board.IsPlayable(c); })) {
          return hint;
        }
      }
    }
  }
  return Move::RevealRank(1, obs.HandAt(1).back().rank);
}

Move ConventionAgent::Act(const Observation& obs) {
  SyncSize(obs.own_hand_size);
  const int ranks = obs.config.ranks;
  const BoardView board = BoardView::FromObservation(obs);
  const std::vector<uint32_t> candidates = OwnCardCandidates(obs);
  auto playable = [&](Card c) { return board.IsPlayable(c); };
  auto dead = [&](Card c) { return board.IsDead(c); };

  for (int s = obs.own_hand_size - 1; s >= 0; --s) {
    if (AllOf(candidates[s], ranks, playable) ||
        (signals_[s] && AnyOf(candidates[s], ranks, playable))) {
      return Move::Play(s);
    }
  }

  if (obs.info_tokens >= 1) {
    if (auto hint = PlayablePartnerHint(obs)) return *hint;
  }

  if (obs.info_tokens < obs.config.max_info_tokens) {
    for (int s = 0; s < obs.own_hand_size; ++s) {
      if (AllOf(candidates[s], ranks, dead)) return Move::Discard(s);
    }
    for (int s = 0; s < obs.own_hand_size; ++s) {
      if (!obs.knowledge[0][s].Touched() && !signals_[s]) return Move::Discard(s);
    }
    if (obs.info_tokens == 0) return Move::Discard(0);
  }
  return StallHint(obs);
}

}  // namespace hanabi
