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

#include <algorithm>

#include "doctest.h"
#include "hanabi/encoder.h"
#include "hanabi/knowledge.h"
#include "hanabi/observation.h"
#include "oracles/oracles.h"
#include "test_util.h"

namespace hanabi {
namespace {

using testing::C;
using testing::Cards;

MoveOutcome Reveal(Move move, uint8_t touched) {
  MoveOutcome o;
  o.actor = 0;
  o.move = move;
  o.touched_slots = touched;
  return o;
}

HandKnowledge FreshHand(const GameConfig& config, int n) {
  HandKnowledge hand;
  for (int i = 0; i < n; ++i) hand.push_back(CardKnowledge::Fresh(config.colors, config.ranks));
  return hand;
}

TEST_CASE("color reveal gives positive and negative knowledge") {
  const GameConfig config = GameConfig::Standard(4);
  const HandKnowledge hand =
      UpdateKnowledge(FreshHand(config, 4), Reveal(Move::RevealColor(1, 0), 0b0101), config);
  CHECK(hand[0].hinted_color == 0);
  CHECK(hand[0].color_plausible == 0b00001);
  CHECK(hand[2].color_plausible == 0b00001);
  CHECK(hand[1].color_plausible == 0b11110);
  CHECK(hand[3].color_plausible == 0b11110);
  CHECK(hand[1].hinted_color == -1);
  for (int s = 0; s < 4; ++s) CHECK(hand[s].rank_plausible == 0b11111);
}

TEST_CASE("rank reveal touching every slot") {
  const GameConfig config = GameConfig::Standard(2);
  const HandKnowledge hand =
      UpdateKnowledge(FreshHand(config, 5), Reveal(Move::RevealRank(1, 3), 0b11111), config);
  for (int s = 0; s < 5; ++s) {
    CHECK(hand[s].rank_plausible == 0b00100);
    CHECK(hand[s].hinted_rank == 3);
  }
}

TEST_CASE("play shifts knowledge down and appends a fresh slot") {
  const GameConfig config = GameConfig::Standard(2);
  HandKnowledge hand = FreshHand(config, 5);
  for (int s = 0; s < 5; ++s) {
    hand[s].hinted_color = int8_t(s);
    hand[s].color_plausible = uint8_t(1u << s);
    hand[s].hinted_rank = int8_t(s + 1);
    hand[s].rank_plausible = uint8_t(1u << s);
  }
  MoveOutcome play;
  play.actor = 0;
  play.move = Move::Play(1);
  play.drawn = true;
  const HandKnowledge after = UpdateKnowledge(hand, play, config);
  REQUIRE(after.size() == 5);
  CHECK(after[0] == hand[0]);
  CHECK(after[1] == hand[2]);
  CHECK(after[2] == hand[3]);
  CHECK(after[3] == hand[4]);
  CHECK(after[4] == CardKnowledge::Fresh(5, 5));
  play.drawn = false;
  CHECK(UpdateKnowledge(hand, play, config).size() == 4);
}

TEST_CASE("observe hides only the viewer's own cards") {
  Position pos;
  pos.config = GameConfig::Standard(4);
  pos.hands = {Cards({"G4", "W2", "Y4", "B4"}), Cards({"R1", "Y1", "W4", "G3"}),
               Cards({"R2", "B1", "R4", "Y3"}), Cards({"B2", "B3", "B4", "B5"})};
  pos.fireworks = {0, 2, 0, 1, 0};
  pos.discards = Cards({"G2", "G2"});
  const GameState s = GameStateFromPosition(pos);
  const Observation obs = Observe(s, 0);
  REQUIRE(obs.other_hands.size() == 3);
  CHECK(obs.other_hands[0] == s.hand(1));
  CHECK(obs.other_hands[1] == s.hand(2));
  CHECK(obs.other_hands[2] == s.hand(3));
  CHECK(obs.own_hand_size == 4);
  CHECK(obs.fireworks[1] == 2);
  CHECK(obs.discard_pile.size() == 2);
  CHECK(obs.IsMyTurn());
  CHECK(obs.legal_moves == LegalMoves(s));

  const Observation third = Observe(s, 2);
  CHECK(third.current_player_offset == 2);
  CHECK(third.legal_moves.empty());
  CHECK(third.other_hands[0] == s.hand(3));
  CHECK(third.other_hands[1] == s.hand(0));
  CHECK(third.other_hands[2] == s.hand(1));
}

TEST_CASE("knowledge is common to all viewers") {
  testing::RandomGame(GameConfig::Standard(3), 5, [](const GameState& s) {
    const Observation a = Observe(s, 0), b = Observe(s, 1), c = Observe(s, 2);
    for (int seat = 0; seat < 3; ++seat) {
      CHECK(a.knowledge[seat] == s.knowledge(seat));
      CHECK(b.knowledge[(seat + 2) % 3] == s.knowledge(seat));
      CHECK(c.knowledge[(seat + 1) % 3] == s.knowledge(seat));
    }
  });
}

TEST_CASE("true cards stay inside their knowledge masks") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    testing::RandomGame(GameConfig::Standard(2 + seed % 4), seed, [](const GameState& s) {
      for (int p = 0; p < s.num_players(); ++p) {
        for (int k = 0; k < s.hand(p).size(); ++k) {
          const CardKnowledge& kn = s.knowledge(p)[k];
          REQUIRE(kn.IsPlausible(s.hand(p)[k]));
          REQUIRE(kn.color_plausible != 0);
          REQUIRE(kn.rank_plausible != 0);
          if (kn.hinted_color >= 0) REQUIRE(kn.color_plausible == 1u << kn.hinted_color);
          if (kn.hinted_rank > 0) REQUIRE(kn.rank_plausible == 1u << (kn.hinted_rank - 1));
        }
      }
    });
  }
}

TEST_CASE("minimal mode keeps only the latest reveal to the viewer") {
  GameState s = NewGame(GameConfig::Standard(2), 21);
  const Observation fresh = Observe(s, 0, ObservationMode::kMinimal);
  for (const auto& k : fresh.knowledge) {
    for (const auto& slot : k) CHECK_FALSE(slot.Touched());
  }
  s.Apply(Move::RevealRank(1, s.hand(1)[0].rank));
  s.Apply(Move::RevealColor(1, s.hand(0)[4].color));
  const Observation min = Observe(s, 0, ObservationMode::kMinimal);
  const uint8_t touched = s.history().back().touched_slots;
  for (int k = 0; k < 5; ++k) {
    const bool hit = (touched >> k) & 1u;
    CHECK(min.knowledge[0][k].hinted_color == (hit ? s.hand(0)[4].color : -1));
    CHECK(min.knowledge[0][k].color_plausible == (hit ? 1u << s.hand(0)[4].color : 0b11111u));
    CHECK(min.knowledge[0][k].rank_plausible == 0b11111);
  }
  for (const auto& slot : min.knowledge[1]) CHECK_FALSE(slot.Touched());
  CHECK(min.other_hands == Observe(s, 0).other_hands);

  s.Apply(Move::Discard(0));
  const Observation later = Observe(s, 0, ObservationMode::kMinimal);
  for (const auto& slot : later.knowledge[0]) CHECK_FALSE(slot.Touched());
}

TEST_CASE("last outcomes cover the moves since the viewer acted") {
  GameState s = NewGame(GameConfig::Standard(3), 2);
  CHECK(Observe(s, 0).last_outcomes.empty());
  s.Apply(Move::RevealRank(1, s.hand(1)[0].rank));
  s.Apply(Move::RevealRank(1, s.hand(2)[0].rank));
  CHECK(Observe(s, 0).last_outcomes.size() == 2);
  CHECK(Observe(s, 1).last_outcomes.size() == 1);
  CHECK(Observe(s, 2).last_outcomes.size() == 2);
}

TEST_CASE("card counting candidates") {
  Position pos;
  pos.config = GameConfig::VerySmall();
  pos.hands = {Cards({"R1", "R5"}), Cards({"R1", "R2"})};
  pos.discards = Cards({"R2"});
  pos.fireworks = {1};
  const GameState s = GameStateFromPosition(pos);
  const auto counts = UnseenCounts(Observe(s, 0));
  CHECK(counts[0] == 1);
  CHECK(counts[1] == 0);
  CHECK(counts[4] == 1);
  // R2 is fully visible, so neither own slot can be R2.
  for (uint32_t m : OwnCardCandidates(Observe(s, 0))) CHECK((m & 0b10) == 0);
}

TEST_CASE("board view dead cards") {
  BoardView board;
  board.config = GameConfig::Standard(2);
  board.fireworks = {2, 0, 0, 0, 0};
  board.discarded[1][1] = 2;
  CHECK(board.IsDead(C("R1")));
  CHECK(board.IsDead(C("R2")));
  CHECK_FALSE(board.IsDead(C("R3")));
  CHECK(board.IsDead(C("Y3")));
  CHECK(board.IsDead(C("Y5")));
  CHECK_FALSE(board.IsDead(C("Y2")));
}

TEST_CASE("candidates equal deal enumeration in the one-color game") {
  int positions = 0;
  for (uint64_t seed = 0; positions < 1000; ++seed) {
    testing::RandomGame(GameConfig::VerySmall(), seed, [&](const GameState& s) {
      for (int viewer = 0; viewer < 2; ++viewer) {
        ++positions;
        REQUIRE(OwnCardCandidates(Observe(s, viewer)) == oracle::EnumerateOwnCandidates(s, viewer));
      }
    });
  }
}

TEST_CASE("candidates equal deal enumeration in the two-color game") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    testing::RandomGame(GameConfig::Small(3), seed, [&](const GameState& s) {
      const int viewer = s.current_player();
      REQUIRE(OwnCardCandidates(Observe(s, viewer)) == oracle::EnumerateOwnCandidates(s, viewer));
    });
  }
}

// Replaces one of `viewer`'s cards by an undrawn card that agrees with the
// slot's hint masks, then replays the same moves from the altered deal.
std::optional<GameState> AlternateDeal(const GameState& s, int viewer, SplitMix64& rng) {
  const Hand& hand = s.hand(viewer);
  if (hand.size() == 0 || s.deck_size() == 0) return std::nullopt;
  const int slot = int(rng.Uniform(hand.size()));
  const CardKnowledge& k = s.knowledge(viewer)[slot];
  std::vector<Card> deck(s.initial_deck().begin(), s.initial_deck().end());
  const int first_undrawn = int(deck.size()) - s.deck_size();
  // Locate the dealt copy of the card in that slot by replaying draws.
  std::vector<int> hand_pos[kMaxPlayers];
  int next = 0;
  for (int i = 0; i < s.config().hand_size; ++i)
    for (int p = 0; p < s.num_players(); ++p) hand_pos[p].push_back(next++);
  for (const MoveOutcome& o : s.history()) {
    if (o.move.IsReveal()) continue;
    hand_pos[o.actor].erase(hand_pos[o.actor].begin() + o.move.slot);
    if (o.drawn) hand_pos[o.actor].push_back(next++);
  }
  const int from = hand_pos[viewer][slot];
  for (int j = first_undrawn; j < int(deck.size()); ++j) {
    if (deck[j] != deck[from] && k.IsPlausible(deck[j])) {
      std::swap(deck[from], deck[j]);
      GameState alt = NewGameFromDeck(s.config(), deck);
      for (const MoveOutcome& o : s.history()) alt.Apply(o.move);
      return alt;
    }
  }
  return std::nullopt;
}

TEST_CASE("own card identities do not leak into the encoding") {
  int checked = 0;
  for (uint64_t seed = 0; seed < 300; ++seed) {
    SplitMix64 rng(seed);
    testing::RandomGame(GameConfig::Standard(2 + seed % 4), seed, [&](const GameState& s) {
      if (rng.Uniform(4) != 0) return;
      const int viewer = int(rng.Uniform(s.num_players()));
      auto alt = AlternateDeal(s, viewer, rng);
      if (!alt) return;
      REQUIRE(alt->hand(viewer) != s.hand(viewer));
      REQUIRE(Observe(*alt, viewer) == Observe(s, viewer));
      REQUIRE(Encode(Observe(*alt, viewer)) == Encode(Observe(s, viewer)));
      const int other = (viewer + 1) % s.num_players();
      CHECK_FALSE(Encode(Observe(*alt, other)) == Encode(Observe(s, other)));
      ++checked;
    });
  }
  CHECK(checked > 1000);
}

}  // namespace
}  // namespace hanabi
