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

#ifndef HANABI_ENCODER_H_
#define HANABI_ENCODER_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "hanabi/game.h"
#include "hanabi/observation.h"

namespace hanabi {

inline constexpr std::string_view kEncodingVersion = "enc-v1";

// Offsets and lengths of the enc-v1 sections. See docs/encoding.md.
struct EncodingLayout {
  struct Section {
    std::string_view name;
    int offset = 0;
    int length = 0;
  };
  Section hands;         // (P-1) * H * (C*R): one-hot per visible slot
  Section missing_card;  // P: hand shorter than H, viewer first
  Section deck;          // deck_size - P*H: thermometer of remaining deck
  Section fireworks;     // C * R: one-hot top rank per color
  Section info_tokens;   // max_info_tokens: thermometer
  Section lives;         // max_lives: thermometer
  Section discards;      // C * sum(rank_counts): thermometer per identity
  Section last_action;   // P + 4 + P + C + R + H + H + C*R + 2
  Section knowledge;     // P * H * (C*R + C + R)
  int total = 0;

  std::vector<Section> sections() const {
    return {hands, missing_card, deck, fireworks, info_tokens, lives, discards, last_action,
            knowledge};
  }
};

EncodingLayout MakeEncodingLayout(const GameConfig& config);

inline int EncodingDim(const GameConfig& config) { return MakeEncodingLayout(config).total; }

struct EncodedObservation {
  std::vector<uint8_t> bits;  // 0/1 per entry
  int dim() const { return int(bits.size()); }
  friend bool operator==(const EncodedObservation&, const EncodedObservation&) = default;
};

// The last-action block carries the most recent outcome only. A Minimal
// observation encodes with whatever knowledge it carries.
EncodedObservation Encode(const Observation& obs);
void EncodeInto(const Observation& obs, const EncodingLayout& layout, std::vector<uint8_t>& bits);

}  // namespace hanabi

#endif  // HANABI_ENCODER_H_
