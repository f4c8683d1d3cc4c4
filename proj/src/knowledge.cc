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

#include "hanabi/knowledge.h"

namespace hanabi {

void UpdateKnowledgeInPlace(HandKnowledge& hand, const MoveOutcome& outcome,
                            const GameConfig& config) {
  const Move& move = outcome.move;
  switch (move.type) {
    case MoveType::kRevealColor: {
      const uint8_t bit = uint8_t(1u << move.color);
      for (int s = 0; s < hand.size(); ++s) {
        CardKnowledge& k = hand[s];
        if ((outcome.touched_slots >> s) & 1u) {
          k.hinted_color = move.color;
          k.color_plausible = bit;
        } else {
          k.color_plausible &= uint8_t(~bit);
        }
      }
      break;
    }
    case MoveType::kRevealRank: {
      const uint8_t bit = uint8_t(1u << (move.rank - 1));
      for (int s = 0; s < hand.size(); ++s) {
        CardKnowledge& k = hand[s];
        if ((outcome.touched_slots >> s) & 1u) {
          k.hinted_rank = move.rank;
          k.rank_plausible = bit;
        } else {
          k.rank_plausible &= uint8_t(~bit);
        }
      }
      break;
    }
    case MoveType::kPlay:
    case MoveType::kDiscard:
      hand.erase(move.slot);
      if (outcome.drawn) hand.push_back(CardKnowledge::Fresh(config.colors, config.ranks));
      break;
  }
}

}  // namespace hanabi
