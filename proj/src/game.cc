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

#include "hanabi/game.h"

#include <algorithm>
#include <numeric>

#include "hanabi/knowledge.h"
#include "hanabi/rng.h"

namespace hanabi {

namespace rules {
constexpr std::string_view kGameOver = "game is over";
constexpr std::string_view kBadSlot = "slot out of range";
constexpr std::string_view kTokensAtMax = "information tokens at maximum";
constexpr std::string_view kNoTokens = "no information tokens";
constexpr std::string_view kBadTarget = "hint target must be another player";
constexpr std::string_view kBadHintValue = "hint value out of range";
constexpr std::string_view kEmptyHint = "hint matches no cards";
}  // namespace rules

std::string Card::ToString() const {
  if (!IsValid()) return "XX";
  return std::string{ColorLetter(color), char('0' + rank)};
}

std::optional<Card> Card::Parse(std::string_view text) {
  if (text.size() != 2) return std::nullopt;
  const int color = ColorFromLetter(text[0]);
  const int rank = text[1] - '0';
  if (color < 0 || rank < 1 || rank > kMaxRanks) return std::nullopt;
  return Card(color, rank);
}

std::string_view ScoringModeName(ScoringMode mode) {
  return mode == ScoringMode::kZeroOnBombOut ? "zero_on_bomb_out" : "cards_played";
}

ScoringMode ParseScoringMode(std::string_view name) {
  if (name == "zero_on_bomb_out" || name == "zero") return ScoringMode::kZeroOnBombOut;
  if (name == "cards_played" || name == "played") return ScoringMode::kCardsPlayed;
  throw InvalidConfigError("unknown scoring mode: " + std::string(name));
}

std::string_view MoveTypeName(MoveType type) {
  switch (type) {
    case MoveType::kPlay: return "Play";
    case MoveType::kDiscard: return "Discard";
    case MoveType::kRevealColor: return "RevealColor";
    case MoveType::kRevealRank: return "RevealRank";
  }
  return "?";
}

std::string Move::ToString() const {
  std::string out(MoveTypeName(type));
  switch (type) {
    case MoveType::kPlay:
    case MoveType::kDiscard:
      return out + "(" + std::to_string(slot) + ")";
    case MoveType::kRevealColor:
      return out + "(+" + std::to_string(target_offset) + "," + ColorLetter(color) + ")";
    case MoveType::kRevealRank:
      return out + "(+" + std::to_string(target_offset) + "," + std::to_string(rank) + ")";
  }
  return out;
}

std::string_view TerminalReasonName(TerminalReason reason) {
  switch (reason) {
    case TerminalReason::kAllStacksComplete: return "all_stacks_complete";
    case TerminalReason::kOutOfLives: return "out_of_lives";
    case TerminalReason::kDeckExhausted: return "deck_exhausted";
  }
  return "?";
}

GameConfig GameConfig::Standard(int players) {
  GameConfig config;
  config.players = players;
  config.hand_size = players <= 3 ? 5 : 4;
  return config;
}

GameConfig GameConfig::Small(int players) {
  GameConfig config;
  config.players = players;
  config.colors = 2;
  config.hand_size = 2;
  config.max_info_tokens = 3;
  config.max_lives = 1;
  return config;
}

GameConfig GameConfig::VerySmall(int players) {
  GameConfig config = Small(players);
  config.colors = 1;
  return config;
}

int GameConfig::CardsPerColor() const {
  return std::accumulate(rank_counts.begin(), rank_counts.begin() + ranks, 0);
}

void GameConfig::Validate() const {
  auto fail = [](const std::string& what) { throw InvalidConfigError("invalid config: " + what); };
  if (players < 2 || players > kMaxPlayers) fail("players must be in [2, 5]");
  if (colors < 1 || colors > kMaxColors) fail("colors must be in [1, 5]");
  if (ranks < 1 || ranks > kMaxRanks) fail("ranks must be in [1, 5]");
  if (hand_size < 1 || hand_size > kMaxHandSize) fail("hand_size must be in [1, 5]");
  if (max_info_tokens < 1 || max_info_tokens > 64) fail("max_info_tokens must be in [1, 64]");
  if (max_lives < 1 || max_lives > 64) fail("max_lives must be in [1, 64]");
  for (int r = 0; r < ranks; ++r) {
    if (rank_counts[r] < 1 || rank_counts[r] > 8) fail("rank_counts entries must be in [1, 8]");
  }
  if (players * hand_size > DeckSize()) fail("players * hand_size exceeds the deck");
}

std::vector<Card> StandardDeck(const GameConfig& config) {
  std::vector<Card> deck;
  deck.reserve(config.DeckSize());
  for (int c = 0; c < config.colors; ++c) {
    for (int r = 1; r <= config.ranks; ++r) {
      for (int k = 0; k < config.CopiesOf(r); ++k) deck.emplace_back(c, r);
    }
  }
  return deck;
}

namespace {

void CheckPermutation(const GameConfig& config, std::vector<Card> deck) {
  std::vector<Card> expected = StandardDeck(config);
  std::sort(deck.begin(), deck.end());
  if (deck != expected) throw InvalidConfigError("deck is not a permutation of the configured deck");
}

}  // namespace

GameState NewGame(const GameConfig& config, uint64_t seed) {
  config.Validate();
  std::vector<Card> deck = StandardDeck(config);
  SplitMix64 rng(seed);
  Shuffle(std::span<Card>(deck), rng);
  return GameState::Deal(config, std::move(deck), seed);
}

GameState NewGameFromDeck(const GameConfig& config, std::vector<Card> deck, uint64_t seed) {
  config.Validate();
  CheckPermutation(config, deck);
  return GameState::Deal(config, std::move(deck), seed);
}

GameState GameState::Deal(const GameConfig& config, std::vector<Card> deck, uint64_t seed) {
  GameState state;
  state.config_ = config;
  state.deck_ = std::move(deck);
  state.seed_ = seed;
  state.info_tokens_ = config.max_info_tokens;
  state.lives_ = config.max_lives;
  for (int k = 0; k < config.hand_size; ++k) {
    for (int p = 0; p < config.players; ++p) state.DrawInto(p);
  }
  if (state.deck_size() == 0) state.countdown_ = config.players;
  state.history_.reserve(state.deck_.size() + config.max_info_tokens + 2 * config.players);
  return state;
}

GameState GameStateFromPosition(const Position& pos) {
  const GameConfig& config = pos.config;
  config.Validate();
  auto fail = [](const std::string& what) { throw InvalidConfigError("invalid position: " + what); };
  if (int(pos.hands.size()) != config.players) fail("need one hand per player");

  // Pool of cards not yet placed; every placement must come out of it.
  std::vector<Card> pool = StandardDeck(config);
  auto take = [&](Card card) {
    if (!card.IsValid() || card.color >= config.colors || card.rank > config.ranks) {
      fail("card out of range: " + card.ToString());
    }
    auto it = std::find(pool.begin(), pool.end(), card);
    if (it == pool.end()) fail("too many copies of " + card.ToString());
    pool.erase(it);
  };

  GameState state;
  state.config_ = config;
  state.seed_ = config.seed;
  for (int c = 0; c < config.colors; ++c) {
    if (pos.fireworks[c] < 0 || pos.fireworks[c] > config.ranks) fail("firework out of range");
    state.fireworks_[c] = int8_t(pos.fireworks[c]);
    for (int r = 1; r <= pos.fireworks[c]; ++r) take(Card(c, r));
  }
  for (Card card : pos.discards) {
    take(card);
    state.discard_pile_.push_back(card);
    state.discard_counts_[card.color][card.rank - 1]++;
  }
  std::vector<Card> dealt;
  for (int p = 0; p < config.players; ++p) {
    if (int(pos.hands[p].size()) > config.hand_size) fail("hand larger than hand_size");
    for (Card card : pos.hands[p]) {
      take(card);
      state.hands_[p].push_back(card);
      state.knowledge_[p].push_back(CardKnowledge::Fresh(config.colors, config.ranks));
      dealt.push_back(card);
    }
  }
  for (Card card : pos.deck_top) take(card);

  SplitMix64 rng(config.seed);
  Shuffle(std::span<Card>(pool), rng);
  // Dealt cards sit before the draw pointer so initial_deck() still lists
  // every card exactly once.
  state.deck_ = pos.discards;
  for (int c = 0; c < config.colors; ++c) {
    for (int r = 1; r <= pos.fireworks[c]; ++r) state.deck_.emplace_back(c, r);
  }
  state.deck_.insert(state.deck_.end(), dealt.begin(), dealt.end());
  state.next_draw_ = int(state.deck_.size());
  state.deck_.insert(state.deck_.end(), pos.deck_top.begin(), pos.deck_top.end());
  state.deck_.insert(state.deck_.end(), pool.begin(), pool.end());

  state.info_tokens_ = pos.info_tokens < 0 ? config.max_info_tokens : pos.info_tokens;
  state.lives_ = pos.lives < 0 ? config.max_lives : pos.lives;
  if (state.info_tokens_ > config.max_info_tokens) fail("info tokens above max");
  if (state.lives_ > config.max_lives) fail("lives above max");
  if (pos.current_player < 0 || pos.current_player >= config.players) fail("bad current player");
  state.current_player_ = pos.current_player;
  if (state.deck_size() == 0) state.countdown_ = config.players;
  return state;
}

void GameState::DrawInto(int player) {
  hands_[player].push_back(deck_[next_draw_++]);
  knowledge_[player].push_back(CardKnowledge::Fresh(config_.colors, config_.ranks));
}

int GameState::CardsPlayed() const {
  int total = 0;
  for (int c = 0; c < config_.colors; ++c) total += fireworks_[c];
  return total;
}

int GameState::Score() const {
  if (lives_ == 0 && config_.scoring == ScoringMode::kZeroOnBombOut) return 0;
  return CardsPlayed();
}

uint8_t TouchedSlots(const Hand& hand, const Move& reveal) {
  uint8_t mask = 0;
  for (int s = 0; s < hand.size(); ++s) {
    const bool hit = reveal.type == MoveType::kRevealColor ? hand[s].color == reveal.color
                                                            : hand[s].rank == reveal.rank;
    if (hit) mask |= uint8_t(1u << s);
  }
  return mask;
}

std::optional<TerminalReason> IsTerminal(const GameState& state) {
  if (state.lives() == 0) return TerminalReason::kOutOfLives;
  if (state.CardsPlayed() == state.config().MaxScore()) return TerminalReason::kAllStacksComplete;
  if (state.final_round_countdown() == 0) return TerminalReason::kDeckExhausted;
  return std::nullopt;
}

int FinalScore(const GameState& state) {
  if (!IsTerminal(state)) throw HanabiError("FinalScore called on a non-terminal state");
  return state.Score();
}

std::optional<std::string_view> MoveViolation(const GameState& state, const Move& move) {
  if (IsTerminal(state)) return rules::kGameOver;
  const GameConfig& config = state.config();
  const Hand& hand = state.hand(state.current_player());
  switch (move.type) {
    case MoveType::kDiscard:
      if (state.info_tokens() >= config.max_info_tokens) return rules::kTokensAtMax;
      [[fallthrough]];
    case MoveType::kPlay:
      if (move.slot < 0 || move.slot >= hand.size()) return rules::kBadSlot;
      return std::nullopt;
    case MoveType::kRevealColor:
    case MoveType::kRevealRank: {
      if (state.info_tokens() <= 0) return rules::kNoTokens;
      if (move.target_offset < 1 || move.target_offset >= config.players) return rules::kBadTarget;
      const bool in_range = move.type == MoveType::kRevealColor
                                ? move.color >= 0 && move.color < config.colors
                                : move.rank >= 1 && move.rank <= config.ranks;
      if (!in_range) return rules::kBadHintValue;
      const int target = (state.current_player() + move.target_offset) % config.players;
      if (TouchedSlots(state.hand(target), move) == 0) return rules::kEmptyHint;
      return std::nullopt;
    }
  }
  return rules::kBadSlot;
}

void LegalMoves(const GameState& state, std::vector<Move>& out) {
  out.clear();
  if (IsTerminal(state)) return;
  const GameConfig& config = state.config();
  const int me = state.current_player();
  const int hand_size = state.hand(me).size();
  for (int s = 0; s < hand_size; ++s) out.push_back(Move::Play(s));
  if (state.info_tokens() < config.max_info_tokens) {
    for (int s = 0; s < hand_size; ++s) out.push_back(Move::Discard(s));
  }
  if (state.info_tokens() == 0) return;
  for (int offset = 1; offset < config.players; ++offset) {
    uint32_t colors = 0;
    for (Card card : state.hand((me + offset) % config.players)) colors |= 1u << card.color;
    for (int c = 0; c < config.colors; ++c) {
      if ((colors >> c) & 1u) out.push_back(Move::RevealColor(offset, c));
    }
  }
  for (int offset = 1; offset < config.players; ++offset) {
    uint32_t ranks = 0;
    for (Card card : state.hand((me + offset) % config.players)) ranks |= 1u << card.rank;
    for (int r = 1; r <= config.ranks; ++r) {
      if ((ranks >> r) & 1u) out.push_back(Move::RevealRank(offset, r));
    }
  }
}

std::vector<Move> LegalMoves(const GameState& state) {
  std::vector<Move> out;
  LegalMoves(state, out);
  return out;
}

MoveOutcome GameState::Apply(const Move& move) {
  if (auto rule = MoveViolation(*this, move)) {
    throw IllegalMoveError(std::string(*rule), move.ToString());
  }
  MoveOutcome outcome;
  outcome.actor = int8_t(current_player_);
  outcome.move = move;
  const int me = current_player_;
  const bool deck_had_cards = deck_size() > 0;

  switch (move.type) {
    case MoveType::kPlay:
    case MoveType::kDiscard: {
      const Card card = hands_[me][move.slot];
      outcome.revealed_card = card;
      const bool success = move.type == MoveType::kPlay && IsPlayable(card);
      if (move.type == MoveType::kPlay) outcome.success = success;
      if (success) {
        fireworks_[card.color] = card.rank;
        if (card.rank == config_.ranks && info_tokens_ < config_.max_info_tokens) {
          ++info_tokens_;
          outcome.info_token_delta = 1;
        }
      } else {
        discard_pile_.push_back(card);
        discard_counts_[card.color][card.rank - 1]++;
        if (move.type == MoveType::kPlay) {
          --lives_;
          outcome.life_delta = -1;
        } else {
          ++info_tokens_;
          outcome.info_token_delta = 1;
        }
      }
      hands_[me].erase(move.slot);
      knowledge_[me].erase(move.slot);
      if (deck_had_cards) {
        DrawInto(me);
        outcome.drawn = true;
      }
      break;
    }
    case MoveType::kRevealColor:
    case MoveType::kRevealRank: {
      const int target = (me + move.target_offset) % config_.players;
      outcome.touched_slots = TouchedSlots(hands_[target], move);
      --info_tokens_;
      outcome.info_token_delta = -1;
      UpdateKnowledgeInPlace(knowledge_[target], outcome, config_);
      break;
    }
  }

  if (countdown_ >= 0) {
    --countdown_;
  } else if (deck_had_cards && deck_size() == 0) {
    countdown_ = config_.players;
  }
  current_player_ = (current_player_ + 1) % config_.players;
  history_.push_back(outcome);
  return outcome;
}

std::pair<GameState, MoveOutcome> ApplyMove(const GameState& state, const Move& move) {
  GameState next = state;
  MoveOutcome outcome = next.Apply(move);
  return {std::move(next), outcome};
}

}  // namespace hanabi
