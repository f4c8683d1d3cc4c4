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

#include "hanabi/agents/hat.h"

#include <bit>

namespace hanabi {

int HatCode::Encode(std::span<const int> recs) const {
  int sum = 0;
  for (int r : recs) sum += r;
  return sum % num_classes();
}

int HatCode::Decode(int hint_class, std::span<const int> recs, int receiver_offset) const {
  const int k = num_classes();
  int others = 0;
  for (int i = 0; i < int(recs.size()); ++i) {
    if (i + 1 != receiver_offset) others += recs[i];
  }
  return ((hint_class - others) % k + k) % k;
}

int HatRecommendation(const Hand& hand, const BoardView& board, int num_recs) {
  const int H = board.config.hand_size;
  int best = -1;
  for (int s = 0; s < hand.size() && s < num_recs; ++s) {
    if (board.IsPlayable(hand[s]) && (best < 0 || hand[s].rank < hand[best].rank)) best = s;
  }
  if (best >= 0) return best;

  for (int s = 0; s < hand.size() && H + s < num_recs; ++s) {
    if (board.IsDead(hand[s])) return H + s;
  }
  for (int s = 0; s < hand.size() && H + s < num_recs; ++s) {
    for (int t = 0; t < hand.size(); ++t) {
      if (t != s && hand[t] == hand[s]) return H + s;
    }
  }
  return H;
}

std::optional<Move> HatHintForClass(int hint_class, const Hand& target_hand, int colors,
                                    int ranks) {
  const int offset = HatCode::TargetOffsetOf(hint_class);
  const bool by_rank = HatCode::RevealTypeOf(hint_class) == MoveType::kRevealRank;
  std::array<int, kMaxRanks + 1> freq{};
  for (Card card : target_hand) freq[by_rank ? card.rank : card.color]++;
  int best = -1;
  const int lo = by_rank ? 1 : 0;
  const int hi = by_rank ? ranks : colors - 1;
  for (int v = lo; v <= hi; ++v) {
    if (freq[v] > 0 && (best < 0 || freq[v] > freq[best])) best = v;
  }
  if (best < 0) return std::nullopt;
  return by_rank ? Move::RevealRank(offset, best) : Move::RevealColor(offset, best);
}

Move HatEncode(const Observation& view) {
  const GameConfig& config = view.config;
  if (view.info_tokens < 1) throw HanabiError("hat hint requires an information token");
  const HatCode code(config);
  const BoardView board = BoardView::FromObservation(view);
  std::vector<int> recs(config.players - 1);
  for (int offset = 1; offset < config.players; ++offset) {
    recs[offset - 1] = HatRecommendation(view.HandAt(offset), board, code.num_recs());
  }
  const int wanted = code.Encode(recs);
  // A class has no content only when its target's hand is empty, which
  // cannot happen before the game ends; receivers decode the class as sent.
  for (int t = 0; t < code.num_classes(); ++t) {
    const int cls = (wanted + t) % code.num_classes();
    const auto hint = HatHintForClass(cls, view.HandAt(HatCode::TargetOffsetOf(cls)),
                                      config.colors, config.ranks);
    if (hint) return *hint;
  }
  throw HanabiError("no hat hint available");
}

int HatDecode(const Observation& after, int hinter, const Move& hint) {
  const GameConfig& config = after.config;
  const int P = config.players;
  const HatCode code(config);
  const BoardView board = BoardView::FromObservation(after);
  const int receiver_offset = (after.viewer - hinter + P) % P;
  std::vector<int> recs(P - 1, 0);
  for (int k = 1; k < P; ++k) {
    const int seat = (hinter + k) % P;
    if (seat == after.viewer) continue;
    recs[k - 1] = HatRecommendation(after.HandAt((seat - after.viewer + P) % P), board,
                                    code.num_recs());
  }
  return code.Decode(HatCode::ClassOf(hint), recs, receiver_offset);
}

HatAgent::HatAgent(const GameConfig& config) : code_(config) {}

namespace {

bool ProvablyPlayable(const Observation& obs, int slot) {
  const uint32_t candidates = OwnCardCandidates(obs)[slot];
  if (candidates == 0) return false;
  for (uint32_t m = candidates; m != 0; m &= m - 1) {
    if (!obs.IsPlayable(Card::FromIndex(std::countr_zero(m), obs.config.ranks))) return false;
  }
  return true;
}

}  // namespace

Move HatAgent::Act(const Observation& obs) {
  const int H = code_.hand_size();
  if (rec_) {
    const int rec = *rec_;
    rec_.reset();
    if (rec < H) {
      if (rec < obs.own_hand_size &&
          (obs.lives >= 2 || RecStillPlayable(obs, rec) || ProvablyPlayable(obs, rec))) {
        return Move::Play(rec);
      }
    } else if (rec - H < obs.own_hand_size && obs.info_tokens < obs.config.max_info_tokens) {
      return Move::Discard(rec - H);
    }
  }
  if (obs.info_tokens >= 1) return HatEncode(obs);
  return Move::Discard(0);
}

bool HatAgent::RecStillPlayable(const Observation& obs, int slot) const {
  const uint32_t candidates = OwnCardCandidates(obs)[slot];
  for (Card card : played_since_hint_) {
    const bool was_playable = fireworks_at_hint_[card.color] + 1 == card.rank;
    if (was_playable && ((candidates >> card.Index(obs.config.ranks)) & 1u)) return false;
  }
  return true;
}

void HatAgent::ObserveOutcome(const MoveOutcome& outcome, const Observation& after) {
  if (outcome.move.type == MoveType::kPlay && outcome.success.value_or(false)) {
    played_since_hint_.push_back(*outcome.revealed_card);
  }
  if (outcome.move.IsReveal()) {
    fireworks_at_hint_ = after.fireworks;
    played_since_hint_.clear();
  }
  if (outcome.actor == after.viewer) {
    rec_.reset();
  } else if (outcome.move.IsReveal()) {
    rec_ = HatDecode(after, outcome.actor, outcome.move);
  }
}

}  // namespace hanabi
