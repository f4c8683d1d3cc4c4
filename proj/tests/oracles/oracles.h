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

// Reference implementations used only by tests. Each one recomputes a value
// from first principles without calling the library code it is checked
// against; only plain data types (Card, Move, GameConfig) are shared.

#ifndef HANABI_TESTS_ORACLES_H_
#define HANABI_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "hanabi/game.h"

namespace hanabi::oracle {

// ---- deck -----------------------------------------------------------------

inline int DeckSize(const GameConfig& config) {
  int n = 0;
  for (int c = 0; c < config.colors; ++c) {
    for (int r = 1; r <= config.ranks; ++r) {
      for (int k = 0; k < config.rank_counts[r - 1]; ++k) ++n;
    }
  }
  return n;
}

// ---- encoding dimension ---------------------------------------------------

// Walks every feature the encoder describes and counts one bit each.
inline int CountEncodingBits(const GameConfig& g) {
  int bits = 0;
  const int deck = DeckSize(g);
  for (int p = 1; p < g.players; ++p)                     // visible hands
    for (int s = 0; s < g.hand_size; ++s)
      for (int c = 0; c < g.colors; ++c)
        for (int r = 1; r <= g.ranks; ++r) ++bits;
  for (int p = 0; p < g.players; ++p) ++bits;             // short-hand flags
  for (int d = 0; d < deck - g.players * g.hand_size; ++d) ++bits;
  for (int c = 0; c < g.colors; ++c)                      // fireworks
    for (int r = 1; r <= g.ranks; ++r) ++bits;
  for (int t = 0; t < g.max_info_tokens; ++t) ++bits;
  for (int l = 0; l < g.max_lives; ++l) ++bits;
  for (int c = 0; c < g.colors; ++c)                      // discards
    for (int r = 1; r <= g.ranks; ++r)
      for (int k = 0; k < g.rank_counts[r - 1]; ++k) ++bits;
  // last action: actor, type, target, color, rank, touched, slot, card,
  // success flag, token-gain flag
  bits += g.players + 4 + g.players + g.colors + g.ranks + g.hand_size + g.hand_size;
  for (int c = 0; c < g.colors; ++c)
    for (int r = 1; r <= g.ranks; ++r) ++bits;
  bits += 2;
  for (int p = 0; p < g.players; ++p)                     // knowledge
    for (int s = 0; s < g.hand_size; ++s) {
      for (int c = 0; c < g.colors; ++c)
        for (int r = 1; r <= g.ranks; ++r) ++bits;
      bits += g.colors + g.ranks;
    }
  return bits;
}

// ---- action space -----------------------------------------------------------

// Every syntactically possible move for the configuration, found by sweeping
// the whole field domain and keeping well-formed combinations.
inline std::vector<Move> EnumerateActions(const GameConfig& g) {
  std::vector<Move> out;
  for (int type = 0; type < 4; ++type) {
    for (int slot = -1; slot <= kMaxHandSize; ++slot) {
      for (int offset = 0; offset <= kMaxPlayers; ++offset) {
        for (int color = -1; color <= kMaxColors; ++color) {
          for (int rank = 0; rank <= kMaxRanks; ++rank) {
            bool ok = false;
            if (type <= 1) {
              ok = slot >= 0 && slot < g.hand_size && offset == 0 && color == -1 && rank == 0;
            } else if (type == 2) {
              ok = slot == -1 && offset >= 1 && offset < g.players && color >= 0 &&
                   color < g.colors && rank == 0;
            } else {
              ok = slot == -1 && offset >= 1 && offset < g.players && color == -1 &&
                   rank >= 1 && rank <= g.ranks;
            }
            if (ok) {
              out.push_back(Move{MoveType(type), int8_t(slot), int8_t(offset), int8_t(color),
                                 int8_t(rank)});
            }
          }
        }
      }
    }
  }
  return out;
}

// Canonical order key: type, then slot / (offset, value).
inline std::tuple<int, int, int> CanonicalKey(const Move& m) {
  switch (m.type) {
    case MoveType::kPlay:
    case MoveType::kDiscard:
      return {int(m.type), m.slot, 0};
    case MoveType::kRevealColor:
      return {2, m.target_offset, m.color};
    case MoveType::kRevealRank:
      return {3, m.target_offset, m.rank};
  }
  return {9, 0, 0};
}

// Legality straight from the rulebook text.
inline bool RulebookLegal(const GameState& s, const Move& m) {
  const GameConfig& g = s.config();
  if (s.lives() == 0 || s.final_round_countdown() == 0) return false;
  int played = 0;
  for (int c = 0; c < g.colors; ++c) played += s.fireworks(c);
  if (played == g.colors * g.ranks) return false;
  const Hand& mine = s.hand(s.current_player());
  if (m.type == MoveType::kPlay) return m.slot >= 0 && m.slot < mine.size();
  if (m.type == MoveType::kDiscard) {
    return m.slot >= 0 && m.slot < mine.size() && s.info_tokens() < g.max_info_tokens;
  }
  if (s.info_tokens() == 0 || m.target_offset < 1 || m.target_offset >= g.players) return false;
  const Hand& theirs = s.hand((s.current_player() + m.target_offset) % g.players);
  for (Card c : theirs) {
    if (m.type == MoveType::kRevealColor && c.color == m.color) return true;
    if (m.type == MoveType::kRevealRank && c.rank == m.rank) return true;
  }
  return false;
}

// ---- hat coding -------------------------------------------------------------

// Recommendation for one hand by the published priority list. `fireworks`
// and `discarded[c][r-1]` describe the board.
inline int HatRec(const std::vector<Card>& hand, const std::vector<int>& fireworks,
                  const std::vector<std::vector<int>>& discarded, const GameConfig& g,
                  int num_recs) {
  const int H = g.hand_size;
  auto usable_play = [&](int s) { return s < num_recs; };
  auto usable_discard = [&](int s) { return H + s < num_recs; };
  int best = -1;
  for (int s = 0; s < int(hand.size()); ++s) {
    const Card c = hand[s];
    if (fireworks[c.color] + 1 != c.rank || !usable_play(s)) continue;
    if (best == -1 || c.rank < hand[best].rank) best = s;
  }
  if (best != -1) return best;
  for (int s = 0; s < int(hand.size()); ++s) {
    const Card c = hand[s];
    bool dead = c.rank <= fireworks[c.color];
    for (int r = fireworks[c.color] + 1; r < c.rank && !dead; ++r) {
      dead = discarded[c.color][r - 1] == g.rank_counts[r - 1];
    }
    if (dead && usable_discard(s)) return H + s;
  }
  for (int s = 0; s < int(hand.size()); ++s) {
    if (!usable_discard(s)) continue;
    if (std::count(hand.begin(), hand.end(), hand[s]) > 1) return H + s;
  }
  return H;
}

// Class of a joint recommendation: running modular sum.
inline int HatClass(const std::vector<int>& recs, int classes) {
  int h = 0;
  for (int r : recs) h = (h + r) % classes;
  return h;
}

// ---- statistics -----------------------------------------------------------

struct Stats {
  double mean = 0.0;
  double std_error = 0.0;
  double perfect_pct = 0.0;
};

// Welford in long double.
inline Stats SummarizeScores(const std::vector<int>& scores, int max_score) {
  long double mean = 0.0L, m2 = 0.0L;
  long double n = 0.0L;
  int perfect = 0;
  for (int x : scores) {
    n += 1.0L;
    const long double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
    perfect += x == max_score;
  }
  Stats s;
  s.mean = double(mean);
  s.std_error = scores.size() > 1 ? double(std::sqrt(m2 / (n - 1.0L)) / std::sqrt(n)) : 0.0;
  s.perfect_pct = double(100.0L * perfect / n);
  return s;
}

// ---- own-hand candidates by deal enumeration --------------------------------

// Per-slot hint constraints, replayed from the public history without using
// the library's knowledge tracker.
struct SlotConstraint {
  std::set<int> is_color, not_color, is_rank, not_rank;
  bool Allows(Card c) const {
    for (int x : is_color) if (c.color != x) return false;
    for (int x : not_color) if (c.color == x) return false;
    for (int x : is_rank) if (c.rank != x) return false;
    for (int x : not_rank) if (c.rank == x) return false;
    return true;
  }
};

inline std::vector<SlotConstraint> ReplayConstraints(const GameState& s, int viewer) {
  const GameConfig& g = s.config();
  std::vector<SlotConstraint> slots(g.hand_size);
  for (const MoveOutcome& o : s.history()) {
    if (o.move.IsReveal() && o.Target(g.players) == viewer) {
      for (int k = 0; k < int(slots.size()); ++k) {
        const bool hit = (o.touched_slots >> k) & 1u;
        if (o.move.type == MoveType::kRevealColor) {
          (hit ? slots[k].is_color : slots[k].not_color).insert(o.move.color);
        } else {
          (hit ? slots[k].is_rank : slots[k].not_rank).insert(o.move.rank);
        }
      }
    } else if (!o.move.IsReveal() && o.actor == viewer) {
      slots.erase(slots.begin() + o.move.slot);
      if (o.drawn) slots.emplace_back();
    }
  }
  slots.resize(s.hand(viewer).size());
  return slots;
}

// Identity sets (bit = color*R + rank-1) each own slot can hold across every
// deal consistent with what the viewer has seen.
inline std::vector<uint32_t> EnumerateOwnCandidates(const GameState& s, int viewer) {
  const GameConfig& g = s.config();
  std::map<Card, int> pool;
  for (int c = 0; c < g.colors; ++c)
    for (int r = 1; r <= g.ranks; ++r) pool[Card(c, r)] = g.rank_counts[r - 1];
  for (int c = 0; c < g.colors; ++c)
    for (int r = 1; r <= s.fireworks(c); ++r) --pool[Card(c, r)];
  for (Card c : s.discard_pile()) --pool[c];
  for (int p = 0; p < g.players; ++p) {
    if (p == viewer) continue;
    for (Card c : s.hand(p)) --pool[c];
  }
  const auto constraints = ReplayConstraints(s, viewer);
  const int n = int(constraints.size());
  std::vector<uint32_t> result(n, 0);
  std::vector<Card> chosen(n);
  auto rec = [&](auto&& self, int slot) -> void {
    if (slot == n) {
      for (int k = 0; k < n; ++k) result[k] |= 1u << (chosen[k].color * g.ranks + chosen[k].rank - 1);
      return;
    }
    for (auto& [card, left] : pool) {
      if (left <= 0 || !constraints[slot].Allows(card)) continue;
      --left;
      chosen[slot] = card;
      self(self, slot + 1);
      ++left;
    }
  };
  rec(rec, 0);
  return result;
}

// ---- a maximal-hint two-player game ---------------------------------------

struct ScriptedGame {
  std::vector<Card> deck;
  std::vector<Move> moves;
  int hints = 0;
  int discards = 0;
  int score = 0;
};

// Builds a standard two-player deal lazily while playing: each draw is either
// the next card of the R1..B5 sequence or a spare copy. The team hints
// whenever it holds a token and otherwise plays or safely discards. Returns
// the first attempt reaching 29 hints and a perfect score.
inline ScriptedGame FindMaxHintGame(uint64_t seed, int max_attempts = 200000) {
  std::mt19937_64 rng(seed);
  const int counts[6] = {0, 3, 2, 2, 2, 1};
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Card> needed, spares;
    for (int c = 0; c < 5; ++c)
      for (int r = 1; r <= 5; ++r) {
        needed.emplace_back(c, r);
        for (int k = 1; k < counts[r]; ++k) spares.emplace_back(c, r);
      }
    std::shuffle(spares.begin(), spares.end(), rng);
    std::size_t next_needed = 0;
    ScriptedGame game;
    auto draw = [&]() -> std::optional<Card> {
      const bool take_needed =
          next_needed < needed.size() && (spares.empty() || (rng() & 1u));
      if (take_needed) return needed[next_needed++];
      if (spares.empty()) return std::nullopt;
      Card c = spares.back();
      spares.pop_back();
      return c;
    };
    std::vector<Card> hands[2];
    for (int i = 0; i < 10; ++i) {
      Card c = *draw();
      game.deck.push_back(c);
      hands[i % 2].push_back(c);
    }
    int fw[5] = {}, tokens = 8, actor = 0, countdown = -1;
    bool failed = false;
    for (;;) {
      if (std::all_of(fw, fw + 5, [](int f) { return f == 5; }) || countdown == 0) break;
      std::vector<Card>& h = hands[actor];
      if (tokens > 0) {
        --tokens;
        ++game.hints;
        game.moves.push_back(Move::RevealRank(1, hands[1 - actor][0].rank));
      } else {
        std::vector<int> play, toss;
        for (int i = 0; i < int(h.size()); ++i) {
          const Card c = h[i];
          if (fw[c.color] + 1 == c.rank) play.push_back(i);
          int copies = 0;
          for (const auto& hand : hands) copies += int(std::count(hand.begin(), hand.end(), c));
          if (c.rank <= fw[c.color] || copies > 1) toss.push_back(i);
        }
        const bool can_play = !play.empty(), can_toss = !toss.empty();
        if (!can_play && !can_toss) { failed = true; break; }
        const bool do_play = can_play && (!can_toss || (rng() & 1u));
        if (do_play) {
          const int i = play[rng() % play.size()];
          const Card c = h[i];
          h.erase(h.begin() + i);
          fw[c.color] = c.rank;
          if (c.rank == 5 && tokens < 8) ++tokens;
          game.moves.push_back(Move::Play(i));
        } else {
          const int i = toss[rng() % toss.size()];
          h.erase(h.begin() + i);
          ++tokens;
          ++game.discards;
          game.moves.push_back(Move::Discard(i));
        }
        if (game.deck.size() < 50) {
          auto c = draw();
          if (!c) { failed = true; break; }
          game.deck.push_back(*c);
          h.push_back(*c);
          if (game.deck.size() == 50) countdown = 3;
        }
      }
      if (countdown > 0) --countdown;
      actor ^= 1;
    }
    if (failed) continue;
    game.score = 0;
    for (int f : fw) game.score += f;
    if (game.hints != 29 || game.score != 25) continue;
    while (next_needed < needed.size()) game.deck.push_back(needed[next_needed++]);
    game.deck.insert(game.deck.end(), spares.rbegin(), spares.rend());
    return game;
  }
  return {};
}

}  // namespace hanabi::oracle

#endif  // HANABI_TESTS_ORACLES_H_
