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

#include "hanabi/encoder.h"

#include <algorithm>

namespace hanabi {

EncodingLayout MakeEncodingLayout(const GameConfig& config) {
  const int P = config.players;
  const int C = config.colors;
  const int R = config.ranks;
  const int H = config.hand_size;
  const int cards = C * R;

  EncodingLayout layout;
  int offset = 0;
  auto place = [&offset](std::string_view name, int length) {
    EncodingLayout::Section section{name, offset, length};
    offset += length;
    return section;
  };
  layout.hands = place("hands", (P - 1) * H * cards);
  layout.missing_card = place("missing_card", P);
  layout.deck = place("deck", config.DeckSize() - P * H);
  layout.fireworks = place("fireworks", cards);
  layout.info_tokens = place("info_tokens", config.max_info_tokens);
  layout.lives = place("lives", config.max_lives);
  layout.discards = place("discards", C * config.CardsPerColor());
  layout.last_action = place("last_action", P + 4 + P + C + R + H + H + cards + 2);
  layout.knowledge = place("knowledge", P * H * (cards + C + R));
  layout.total = offset;
  return layout;
}

EncodedObservation Encode(const Observation& obs) {
  EncodedObservation out;
  EncodeInto(obs, MakeEncodingLayout(obs.config), out.bits);
  return out;
}

void EncodeInto(const Observation& obs, const EncodingLayout& layout,
                std::vector<uint8_t>& bits) {
  const GameConfig& config = obs.config;
  const int P = config.players;
  const int C = config.colors;
  const int R = config.ranks;
  const int H = config.hand_size;
  const int cards = C * R;
  bits.assign(layout.total, 0);
  uint8_t* out = bits.data();

  auto thermometer = [&](int offset, int count) {
    std::fill(out + offset, out + offset + count, uint8_t{1});
  };

  for (int i = 0; i < P - 1; ++i) {
    const Hand& hand = obs.other_hands[i];
    for (int s = 0; s < hand.size(); ++s) {
      out[layout.hands.offset + (i * H + s) * cards + hand[s].Index(R)] = 1;
    }
  }

  for (int offset = 0; offset < P; ++offset) {
    const int size = offset == 0 ? obs.own_hand_size : obs.other_hands[offset - 1].size();
    if (size < H) out[layout.missing_card.offset + offset] = 1;
  }

  thermometer(layout.deck.offset, obs.deck_size);
  for (int c = 0; c < C; ++c) {
    if (obs.fireworks[c] > 0) out[layout.fireworks.offset + c * R + obs.fireworks[c] - 1] = 1;
  }
  thermometer(layout.info_tokens.offset, obs.info_tokens);
  thermometer(layout.lives.offset, obs.lives);

  {
    int counts[kMaxColors][kMaxRanks] = {};
    for (Card card : obs.discard_pile) counts[card.color][card.rank - 1]++;
    int offset = layout.discards.offset;
    for (int c = 0; c < C; ++c) {
      for (int r = 1; r <= R; ++r) {
        thermometer(offset, counts[c][r - 1]);
        offset += config.CopiesOf(r);
      }
    }
  }

  if (!obs.last_outcomes.empty()) {
    const MoveOutcome& last = obs.last_outcomes.back();
    const Move& move = last.move;
    int offset = layout.last_action.offset;
    out[offset + (last.actor - obs.viewer + P) % P] = 1;
    offset += P;
    out[offset + int(move.type)] = 1;
    offset += 4;
    if (move.IsReveal()) out[offset + (last.Target(P) - obs.viewer + P) % P] = 1;
    offset += P;
    if (move.type == MoveType::kRevealColor) out[offset + move.color] = 1;
    offset += C;
    if (move.type == MoveType::kRevealRank) out[offset + move.rank - 1] = 1;
    offset += R;
    for (int s = 0; s < H; ++s) {
      if ((last.touched_slots >> s) & 1u) out[offset + s] = 1;
    }
    offset += H;
    if (!move.IsReveal()) out[offset + move.slot] = 1;
    offset += H;
    if (last.revealed_card) out[offset + last.revealed_card->Index(R)] = 1;
    offset += cards;
    if (last.success.value_or(false)) out[offset] = 1;
    if (move.type == MoveType::kPlay && last.info_token_delta > 0) out[offset + 1] = 1;
  }

  for (int p = 0; p < P; ++p) {
    const HandKnowledge& hand = obs.knowledge[p];
    for (int s = 0; s < hand.size(); ++s) {
      const CardKnowledge& k = hand[s];
      const int base = layout.knowledge.offset + (p * H + s) * (cards + C + R);
      for (int c = 0; c < C; ++c) {
        if (!k.ColorPlausible(c)) continue;
        for (int r = 1; r <= R; ++r) {
          if (k.RankPlausible(r)) out[base + c * R + r - 1] = 1;
        }
      }
      if (k.hinted_color >= 0) out[base + cards + k.hinted_color] = 1;
      if (k.hinted_rank > 0) out[base + cards + C + k.hinted_rank - 1] = 1;
    }
  }
}

}  // namespace hanabi
