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

#ifndef HANABI_GAME_H_
#define HANABI_GAME_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hanabi/card.h"

namespace hanabi {

class HanabiError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidConfigError : public HanabiError {
 public:
  using HanabiError::HanabiError;
};

// Raised for any move that is not in LegalMoves(state). `rule()` names the
// violated rule, e.g. "no information tokens".
class IllegalMoveError : public HanabiError {
 public:
  IllegalMoveError(std::string rule, const std::string& move)
      : HanabiError("illegal move " + move + ": " + rule), rule_(std::move(rule)) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

enum class ScoringMode : uint8_t {
  kZeroOnBombOut,  // published rules: losing the last life scores 0
  kCardsPlayed,    // cards on the stacks, even after a bomb-out
};

std::string_view ScoringModeName(ScoringMode mode);
ScoringMode ParseScoringMode(std::string_view name);

struct GameConfig {
  int players = 2;
  int colors = 5;
  int ranks = 5;
  int hand_size = 5;
  int max_info_tokens = 8;
  int max_lives = 3;
  std::array<int, kMaxRanks> rank_counts{3, 2, 2, 2, 1};
  ScoringMode scoring = ScoringMode::kZeroOnBombOut;
  uint64_t seed = 0;

  // Full 5-color game; hand size 5 for 2-3 players, 4 for 4-5.
  static GameConfig Standard(int players);
  // Debug game: 2 colors, 2 cards per hand, 3 information tokens, 1 life.
  static GameConfig Small(int players = 2);
  // Same as Small with a single color.
  static GameConfig VerySmall(int players = 2);

  int CardsPerColor() const;
  int DeckSize() const { return colors * CardsPerColor(); }
  int MaxScore() const { return colors * ranks; }
  int CopiesOf(int rank) const { return rank_counts[rank - 1]; }

  // Throws InvalidConfigError.
  void Validate() const;

  friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

enum class MoveType : uint8_t { kPlay, kDiscard, kRevealColor, kRevealRank };

std::string_view MoveTypeName(MoveType type);

// Reveal targets are offsets relative to the acting player, in [1, players).
struct Move {
  MoveType type = MoveType::kPlay;
  int8_t slot = -1;
  int8_t target_offset = 0;
  int8_t color = -1;
  int8_t rank = 0;

  static constexpr Move Play(int slot) {
    return Move{MoveType::kPlay, int8_t(slot), 0, -1, 0};
  }
  static constexpr Move Discard(int slot) {
    return Move{MoveType::kDiscard, int8_t(slot), 0, -1, 0};
  }
  static constexpr Move RevealColor(int target_offset, int color) {
    return Move{MoveType::kRevealColor, -1, int8_t(target_offset), int8_t(color), 0};
  }
  static constexpr Move RevealRank(int target_offset, int rank) {
    return Move{MoveType::kRevealRank, -1, int8_t(target_offset), -1, int8_t(rank)};
  }

  constexpr bool IsReveal() const {
    return type == MoveType::kRevealColor || type == MoveType::kRevealRank;
  }

  // "Play(2)", "Discard(0)", "RevealColor(+1,R)", "RevealRank(+2,3)".
  std::string ToString() const;

  friend constexpr bool operator==(const Move&, const Move&) = default;
};

// Public record of one resolved move. Every player observes it; the identity
// of a played or discarded card becomes public here.
struct MoveOutcome {
  int8_t actor = -1;
  Move move;
  std::optional<Card> revealed_card;
  std::optional<bool> success;
  int8_t info_token_delta = 0;
  int8_t life_delta = 0;
  uint8_t touched_slots = 0;
  bool drawn = false;

  // Absolute seat of a reveal's target.
  int Target(int players) const { return (actor + move.target_offset) % players; }

  friend bool operator==(const MoveOutcome&, const MoveOutcome&) = default;
};

enum class TerminalReason : uint8_t { kAllStacksComplete, kOutOfLives, kDeckExhausted };

std::string_view TerminalReasonName(TerminalReason reason);

// Everything needed to pin a game position by hand: used by tests, the
// replay loader and scenario tooling. Cards not mentioned stay in the deck.
struct Position {
  GameConfig config;
  std::vector<std::vector<Card>> hands;
  std::array<int, kMaxColors> fireworks{};
  std::vector<Card> discards;
  int info_tokens = -1;  // -1: max
  int lives = -1;        // -1: max
  int current_player = 0;
  // Top of the remaining deck, in draw order; the rest follows in canonical
  // order shuffled by config.seed.
  std::vector<Card> deck_top;
};

// Authoritative game state. A plain value: copy it freely.
class GameState {
 public:
  const GameConfig& config() const { return config_; }
  int num_players() const { return config_.players; }

  // The full deck order fixed at deal time (index 0 dealt first).
  std::span<const Card> initial_deck() const { return deck_; }
  // Remaining deck, top (next draw) first.
  std::span<const Card> deck() const {
    return std::span<const Card>(deck_).subspan(next_draw_);
  }
  int deck_size() const { return int(deck_.size()) - next_draw_; }

  const Hand& hand(int player) const { return hands_[player]; }
  const HandKnowledge& knowledge(int player) const { return knowledge_[player]; }
  int fireworks(int color) const { return fireworks_[color]; }
  std::span<const int8_t> all_fireworks() const {
    return std::span<const int8_t>(fireworks_.data(), config_.colors);
  }
  int info_tokens() const { return info_tokens_; }
  int lives() const { return lives_; }
  // Discarded and misplayed cards, in the order they arrived.
  std::span<const Card> discard_pile() const { return discard_pile_; }
  int DiscardCount(Card card) const { return discard_counts_[card.color][card.rank - 1]; }
  int current_player() const { return current_player_; }
  std::optional<int> final_round_countdown() const {
    if (countdown_ < 0) return std::nullopt;
    return countdown_;
  }
  int turn() const { return int(history_.size()); }
  std::span<const MoveOutcome> history() const { return history_; }
  uint64_t seed() const { return seed_; }

  int CardsPlayed() const;
  // Score if the game ended now, under the configured scoring mode.
  int Score() const;
  bool IsPlayable(Card card) const { return fireworks_[card.color] + 1 == card.rank; }

  // Applies a legal move in place and returns its public outcome. Throws
  // IllegalMoveError (leaving the state untouched) otherwise.
  MoveOutcome Apply(const Move& move);

  friend bool operator==(const GameState&, const GameState&) = default;

 private:
  friend GameState NewGame(const GameConfig&, uint64_t);
  friend GameState NewGameFromDeck(const GameConfig&, std::vector<Card>, uint64_t);
  friend GameState GameStateFromPosition(const Position&);

  static GameState Deal(const GameConfig& config, std::vector<Card> deck, uint64_t seed);
  void DrawInto(int player);

  GameConfig config_;
  std::vector<Card> deck_;
  int next_draw_ = 0;
  std::array<Hand, kMaxPlayers> hands_{};
  std::array<HandKnowledge, kMaxPlayers> knowledge_{};
  std::array<int8_t, kMaxColors> fireworks_{};
  std::vector<Card> discard_pile_;
  std::array<std::array<uint8_t, kMaxRanks>, kMaxColors> discard_counts_{};
  int info_tokens_ = 0;
  int lives_ = 0;
  int current_player_ = 0;
  int countdown_ = -1;
  std::vector<MoveOutcome> history_;
  uint64_t seed_ = 0;
};

// Every card of the configured deck in canonical order: color-major, rank
// ascending, copies adjacent.
std::vector<Card> StandardDeck(const GameConfig& config);

// Shuffles StandardDeck(config) with SplitMix64(seed) and deals round-robin
// starting at player 0. Throws InvalidConfigError.
GameState NewGame(const GameConfig& config, uint64_t seed);
inline GameState NewGame(const GameConfig& config) { return NewGame(config, config.seed); }

// Deals from an explicit deck order; `deck` must be a permutation of
// StandardDeck(config). `seed` is recorded only.
GameState NewGameFromDeck(const GameConfig& config, std::vector<Card> deck,
                          uint64_t seed = 0);

// Builds an arbitrary mid-game position. Throws InvalidConfigError if the
// position does not respect card conservation or the token/life bounds.
GameState GameStateFromPosition(const Position& position);

// Canonical order: plays by slot, discards by slot, color reveals by
// (target offset, color), rank reveals by (target offset, rank). This is the
// order of the flat action space.
std::vector<Move> LegalMoves(const GameState& state);
void LegalMoves(const GameState& state, std::vector<Move>& out);

// Names the rule `move` breaks in `state`, or nullopt if it is legal.
std::optional<std::string_view> MoveViolation(const GameState& state, const Move& move);

// Pure form of GameState::Apply.
std::pair<GameState, MoveOutcome> ApplyMove(const GameState& state, const Move& move);

std::optional<TerminalReason> IsTerminal(const GameState& state);

// Throws HanabiError on a non-terminal state.
int FinalScore(const GameState& state);

// Bit mask of slots in `hand` matching a reveal.
uint8_t TouchedSlots(const Hand& hand, const Move& reveal);

}  // namespace hanabi

#endif  // HANABI_GAME_H_
