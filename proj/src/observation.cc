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

#include "hanabi/observation.h"

#include <bit>

namespace hanabi {

Observation Observe(const GameState& state, int viewer, ObservationMode mode) {
  const GameConfig& config = state.config();
  const int players = config.players;
  Observation obs;
  obs.config = config;
  obs.mode = mode;
  obs.viewer = viewer;
  obs.current_player_offset = (state.current_player() - viewer + players) % players;
  obs.other_hands.reserve(players - 1);
  for (int offset = 1; offset < players; ++offset) {
    obs.other_hands.push_back(state.hand((viewer + offset) % players));
  }
  obs.own_hand_size = state.hand(viewer).size();
  for (int c = 0; c < config.colors; ++c) obs.fireworks[c] = state.fireworks(c);
  obs.info_tokens = state.info_tokens();
  obs.lives = state.lives();
  obs.deck_size = state.deck_size();
  obs.discard_pile.assign(state.discard_pile().begin(), state.discard_pile().end());

  const auto history = state.history();
  std::size_t since = history.size();
  while (since > 0 && history[since - 1].actor != viewer) --since;
  if (since > 0) --since;
  obs.last_outcomes.assign(history.begin() + since, history.end());

  obs.knowledge.reserve(players);
  if (mode == ObservationMode::kDefault) {
    for (int offset = 0; offset < players; ++offset) {
      obs.knowledge.push_back(state.knowledge((viewer + offset) % players));
    }
  } else {
    const CardKnowledge fresh = CardKnowledge::Fresh(config.colors, config.ranks);
    for (int offset = 0; offset < players; ++offset) {
      HandKnowledge hand;
      for (int s = 0; s < state.hand((viewer + offset) % players).size(); ++s) hand.push_back(fresh);
      obs.knowledge.push_back(hand);
    }
    // Own slots cannot have moved after the viewer's last move, so the
    // touched mask of a later reveal still lines up.
    for (auto it = obs.last_outcomes.rbegin(); it != obs.last_outcomes.rend(); ++it) {
      if (!it->move.IsReveal() || it->Target(players) != viewer) continue;
      HandKnowledge& own = obs.knowledge[0];
      for (int s = 0; s < own.size(); ++s) {
        if (!((it->touched_slots >> s) & 1u)) continue;
        if (it->move.type == MoveType::kRevealColor) {
          own[s].hinted_color = it->move.color;
          own[s].color_plausible = uint8_t(1u << it->move.color);
        } else {
          own[s].hinted_rank = it->move.rank;
          own[s].rank_plausible = uint8_t(1u << (it->move.rank - 1));
        }
      }
      break;
    }
  }

  if (obs.current_player_offset == 0) LegalMoves(state, obs.legal_moves);
  return obs;
}

BoardView BoardView::FromObservation(const Observation& obs) {
  BoardView board;
  board.config = obs.config;
  board.fireworks = obs.fireworks;
  for (Card card : obs.discard_pile) board.discarded[card.color][card.rank - 1]++;
  return board;
}

bool BoardView::IsDead(Card card) const {
  if (card.rank <= fireworks[card.color]) return true;
  for (int r = fireworks[card.color] + 1; r < card.rank; ++r) {
    if (discarded[card.color][r - 1] >= config.CopiesOf(r)) return true;
  }
  return false;
}

uint32_t KnowledgeCardMask(const CardKnowledge& k, const GameConfig& config) {
  uint32_t mask = 0;
  for (int c = 0; c < config.colors; ++c) {
    if (!k.ColorPlausible(c)) continue;
    for (int r = 1; r <= config.ranks; ++r) {
      if (k.RankPlausible(r)) mask |= 1u << Card(c, r).Index(config.ranks);
    }
  }
  return mask;
}

std::array<int, kMaxColors * kMaxRanks> UnseenCounts(const Observation& obs) {
  const GameConfig& config = obs.config;
  std::array<int, kMaxColors * kMaxRanks> counts{};
  for (int c = 0; c < config.colors; ++c) {
    for (int r = 1; r <= config.ranks; ++r) {
      counts[Card(c, r).Index(config.ranks)] = config.CopiesOf(r) - (r <= obs.fireworks[c] ? 1 : 0);
    }
  }
  for (const Hand& hand : obs.other_hands) {
    for (Card card : hand) --counts[card.Index(config.ranks)];
  }
  for (Card card : obs.discard_pile) --counts[card.Index(config.ranks)];
  return counts;
}

namespace {

// Depth-first search for an assignment of unseen copies to slots [slot, n).
bool Assign(int slot, std::vector<uint32_t>& masks, std::array<int, 25>& counts,
            std::vector<int>& chosen) {
  if (slot == int(masks.size())) return true;
  if (chosen[slot] >= 0) return Assign(slot + 1, masks, counts, chosen);
  for (uint32_t m = masks[slot]; m != 0; m &= m - 1) {
    const int x = std::countr_zero(m);
    if (counts[x] <= 0) continue;
    --counts[x];
    chosen[slot] = x;
    if (Assign(slot + 1, masks, counts, chosen)) return true;
    chosen[slot] = -1;
    ++counts[x];
  }
  return false;
}

}  // namespace

std::vector<uint32_t> OwnCardCandidates(const Observation& obs) {
  const GameConfig& config = obs.config;
  auto counts = UnseenCounts(obs);
  const int n = obs.own_hand_size;
  std::vector<uint32_t> masks(n);
  for (int s = 0; s < n; ++s) {
    uint32_t mask = KnowledgeCardMask(obs.knowledge[0][s], config);
    for (uint32_t m = mask; m != 0; m &= m - 1) {
      const int x = std::countr_zero(m);
      if (counts[x] <= 0) mask &= ~(1u << x);
    }
    masks[s] = mask;
  }

  std::vector<uint32_t> supported(n, 0);
  std::vector<int> chosen(n);
  for (int s = 0; s < n; ++s) {
    for (uint32_t m = masks[s] & ~supported[s]; m != 0; m &= m - 1) {
      const int x = std::countr_zero(m);
      if ((supported[s] >> x) & 1u) continue;
      auto scratch = counts;
      std::fill(chosen.begin(), chosen.end(), -1);
      chosen[s] = x;
      --scratch[x];
      if (Assign(0, masks, scratch, chosen)) {
        // Every slot's choice in a full assignment is itself supported.
        for (int t = 0; t < n; ++t) supported[t] |= 1u << chosen[t];
      }
    }
  }
  return supported;
}

}  // namespace hanabi
