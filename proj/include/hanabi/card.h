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

#ifndef HANABI_CARD_H_
#define HANABI_CARD_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hanabi/inline_vector.h"

namespace hanabi {

inline constexpr int kMaxPlayers = 5;
inline constexpr int kMaxColors = 5;
inline constexpr int kMaxRanks = 5;
inline constexpr int kMaxHandSize = 5;

// Color index order used everywhere: in logs, one-hot blocks and tables.
inline constexpr std::string_view kColorLetters = "RYGWB";

inline char ColorLetter(int color) {
  return color >= 0 && color < kMaxColors ? kColorLetters[color] : 'X';
}
inline int ColorFromLetter(char c) {
  const auto pos = kColorLetters.find(c);
  return pos == std::string_view::npos ? -1 : int(pos);
}

// A (color, rank) pair. Ranks are 1-based; a default-constructed card is
// invalid and stands for "unknown".
struct Card {
  int8_t color = -1;
  int8_t rank = 0;

  constexpr Card() = default;
  constexpr Card(int c, int r) : color(int8_t(c)), rank(int8_t(r)) {}

  constexpr bool IsValid() const { return color >= 0 && rank >= 1; }
  // Color-major one-hot index.
  constexpr int Index(int num_ranks) const { return color * num_ranks + rank - 1; }
  static constexpr Card FromIndex(int index, int num_ranks) {
    return Card(index / num_ranks, index % num_ranks + 1);
  }

  // "Y3"; "XX" for an invalid card.
  std::string ToString() const;
  static std::optional<Card> Parse(std::string_view text);

  friend constexpr auto operator<=>(const Card&, const Card&) = default;
};

// Hint-derived knowledge about one hand slot. Masks are bit sets indexed by
// color and by rank-1.
struct CardKnowledge {
  uint8_t color_plausible = 0;
  uint8_t rank_plausible = 0;
  int8_t hinted_color = -1;
  int8_t hinted_rank = 0;

  static constexpr CardKnowledge Fresh(int colors, int ranks) {
    CardKnowledge k;
    k.color_plausible = uint8_t((1u << colors) - 1);
    k.rank_plausible = uint8_t((1u << ranks) - 1);
    return k;
  }

  constexpr bool ColorPlausible(int color) const {
    return (color_plausible >> color) & 1u;
  }
  constexpr bool RankPlausible(int rank) const {
    return (rank_plausible >> (rank - 1)) & 1u;
  }
  constexpr bool IsPlausible(Card card) const {
    return ColorPlausible(card.color) && RankPlausible(card.rank);
  }
  constexpr bool Touched() const { return hinted_color >= 0 || hinted_rank > 0; }

  friend constexpr bool operator==(const CardKnowledge&,
                                   const CardKnowledge&) = default;
};

using Hand = InlineVector<Card, kMaxHandSize>;
using HandKnowledge = InlineVector<CardKnowledge, kMaxHandSize>;

}  // namespace hanabi

#endif  // HANABI_CARD_H_
