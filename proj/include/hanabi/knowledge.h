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

#ifndef HANABI_KNOWLEDGE_H_
#define HANABI_KNOWLEDGE_H_

#include "hanabi/card.h"
#include "hanabi/game.h"

namespace hanabi {

// Folds one public outcome into the hint knowledge of a single hand.
//
// The caller passes only outcomes that concern this hand: a reveal aimed at
// it, or the owner's own play/discard. A reveal gives touched slots the
// hinted value (singleton mask) and removes that value from untouched slots.
// A play/discard removes the slot; slots above shift down and, if a card
// was drawn, a fresh all-plausible entry is appended as the newest slot.
void UpdateKnowledgeInPlace(HandKnowledge& hand, const MoveOutcome& outcome,
                            const GameConfig& config);

inline HandKnowledge UpdateKnowledge(HandKnowledge hand, const MoveOutcome& outcome,
                                     const GameConfig& config) {
  UpdateKnowledgeInPlace(hand, outcome, config);
  return hand;
}

}  // namespace hanabi

#endif  // HANABI_KNOWLEDGE_H_
