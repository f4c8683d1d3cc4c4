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

#ifndef HANABI_AGENTS_HAT_H_
#define HANABI_AGENTS_HAT_H_

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <vector>

#include "hanabi/agent.h"

namespace hanabi {

// Hat-guessing recommendation protocol.
//
// A hinter picks a recommendation for every other player and sends the sum
// of their indices modulo the number of hint classes. Hint classes are
// (target offset, reveal kind) pairs:
//   class = 2 * (target_offset - 1) + (RevealRank ? 0 : 1)
// so there are 2 * (P - 1) of them. A recommendation index is
//   play slot s    -> s
//   discard slot s -> H + s
// restricted to the first num_recs() values, num_recs() = min(2H, classes).
// Each receiver sees every hand but its own, recomputes the others'
// recommendations and recovers its own by modular subtraction.
class HatCode {
 public:
  HatCode(int players, int hand_size) : players_(players), hand_size_(hand_size) {}
  explicit HatCode(const GameConfig& config) : HatCode(config.players, config.hand_size) {}

  int num_classes() const { return 2 * (players_ - 1); }
  int num_recs() const { return std::min(2 * hand_size_, num_classes()); }
  int hand_size() const { return hand_size_; }

  static int ClassOf(const Move& reveal) {
    return 2 * (reveal.target_offset - 1) + (reveal.type == MoveType::kRevealRank ? 0 : 1);
  }
  static int TargetOffsetOf(int hint_class) { return hint_class / 2 + 1; }
  static MoveType RevealTypeOf(int hint_class) {
    return hint_class % 2 == 0 ? MoveType::kRevealRank : MoveType::kRevealColor;
  }

  // Joint recommendation -> hint class. recs[k] belongs to the player at
  // offset k + 1 from the hinter.
  int Encode(std::span<const int> recs) const;
  // Receiver at `receiver_offset` from the hinter recovers its own rec from
  // the hint class and the recs of the other receivers (recs indexed as in
  // Encode; the receiver's own entry is ignored).
  int Decode(int hint_class, std::span<const int> recs, int receiver_offset) const;

 private:
  int players_;
  int hand_size_;
};

// Recommendation for one hand, by priority:
//   1. play the lowest-rank playable card (lowest slot on ties);
//   2. discard the lowest-slot dead card;
//   3. discard the lowest-slot card duplicated elsewhere in the same hand;
//   4. discard slot 0.
// Candidates whose index is >= num_recs are skipped.
int HatRecommendation(const Hand& hand, const BoardView& board, int num_recs);

// Hint content for a class: the most frequent color/rank in the target's
// hand, ties to the lowest value.
std::optional<Move> HatHintForClass(int hint_class, const Hand& target_hand, int colors,
                                    int ranks);

// The hinter's move: sum the recommendations of all other players, emit
// that class, rotating to the next class if the target holds no cards.
// Requires info_tokens >= 1.
Move HatEncode(const Observation& hinter_view);

// Receiver side: recommendation for `after.viewer` encoded by a hint
// `hint` issued by seat `hinter`, from the view right after the hint.
int HatDecode(const Observation& after, int hinter, const Move& hint);

class HatAgent final : public Agent {
 public:
  explicit HatAgent(const GameConfig& config);

  // Execution policy:
  //   play rec and lives >= 2          -> play it
  //   play rec and lives == 1          -> play only if provably playable
  //                                       (see RecStillPlayable)
  //   discard rec and tokens < max     -> discard it
  //   otherwise, tokens >= 1           -> hat hint
  //   otherwise                        -> discard slot 0
  Move Act(const Observation& obs) override;
  void ObserveOutcome(const MoveOutcome& outcome, const Observation& after) override;
  void Reset() override {
    rec_.reset();
    fireworks_at_hint_ = {};
    played_since_hint_.clear();
  }
  std::string spec() const override { return "hat"; }

  std::optional<int> pending_rec() const { return rec_; }

  // A play rec names a card that was playable when the hint was given. It
  // can only have stopped being playable if a card of the same identity was
  // played since, so the rec is proven while no such card fits the slot.
  bool RecStillPlayable(const Observation& obs, int slot) const;

 private:
  HatCode code_;
  std::optional<int> rec_;
  std::array<int, kMaxColors> fireworks_at_hint_{};
  std::vector<Card> played_since_hint_;
};

}  // namespace hanabi

#endif  // HANABI_AGENTS_HAT_H_
