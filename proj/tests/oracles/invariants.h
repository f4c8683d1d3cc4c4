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

#ifndef HANABI_TESTS_INVARIANTS_H_
#define HANABI_TESTS_INVARIANTS_H_

#include <map>
#include <optional>
#include <string>

#include "hanabi/game.h"

namespace hanabi::oracle {

// First broken state invariant, if any. `previous` enables the monotone
// firework check.
inline std::optional<std::string> CheckInvariants(const GameState& s,
                                                  const GameState* previous = nullptr) {
  const GameConfig& g = s.config();
  if (s.info_tokens() < 0 || s.info_tokens() > g.max_info_tokens) return "token bound";
  if (s.lives() < 0 || s.lives() > g.max_lives) return "life bound";
  std::map<Card, int> seen;
  for (Card c : s.deck()) ++seen[c];
  for (int p = 0; p < g.players; ++p) {
    if (s.hand(p).size() > g.hand_size) return "hand too large";
    if (s.knowledge(p).size() != s.hand(p).size()) return "knowledge size";
    for (Card c : s.hand(p)) ++seen[c];
  }
  for (Card c : s.discard_pile()) ++seen[c];
  for (int c = 0; c < g.colors; ++c) {
    if (s.fireworks(c) < 0 || s.fireworks(c) > g.ranks) return "firework range";
    if (previous && s.fireworks(c) < previous->fireworks(c)) return "firework decreased";
    for (int r = 1; r <= s.fireworks(c); ++r) ++seen[Card(c, r)];
  }
  int total = 0;
  for (int c = 0; c < g.colors; ++c) {
    for (int r = 1; r <= g.ranks; ++r) {
      if (seen[Card(c, r)] != g.rank_counts[r - 1]) return "card conservation " + Card(c, r).ToString();
      total += g.rank_counts[r - 1];
    }
  }
  if (int(seen.size()) != g.colors * g.ranks) return "foreign card";
  if (total != g.DeckSize()) return "deck size";
  const int score = s.Score();
  if (score < 0 || score > g.MaxScore()) return "score range";
  return std::nullopt;
}

// Sound turn bound for any game. Every turn is a play, a discard or a hint.
// Plays and discards each draw a card while the deck lasts, so at most
// deck - P*H of them happen before the last draw; the final round adds at
// most P turns. Hints spend tokens, which only plays of a rank-R card and
// discards replenish.
inline int TurnBound(const GameConfig& g) {
  const int draws = g.DeckSize() - g.players * g.hand_size;
  return 2 * draws + g.max_info_tokens + g.colors + g.players;
}

}  // namespace hanabi::oracle

#endif  // HANABI_TESTS_INVARIANTS_H_
