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

#ifndef HANABI_TESTS_TEST_UTIL_H_
#define HANABI_TESTS_TEST_UTIL_H_

#include <functional>
#include <vector>

#include "hanabi/game.h"
#include "hanabi/rng.h"

namespace hanabi::testing {

// Plays uniformly random legal moves until the game ends, calling `visit`
// with the state before each move.
inline GameState RandomGame(const GameConfig& config, uint64_t seed,
                            const std::function<void(const GameState&)>& visit = {}) {
  GameState state = NewGame(config, seed);
  SplitMix64 rng(DeriveSeed(seed, 99));
  std::vector<Move> legal;
  while (!IsTerminal(state)) {
    if (visit) visit(state);
    LegalMoves(state, legal);
    state.Apply(legal[rng.Uniform(legal.size())]);
  }
  return state;
}

inline std::vector<Card> Cards(std::initializer_list<const char*> names) {
  std::vector<Card> out;
  for (const char* n : names) out.push_back(*Card::Parse(n));
  return out;
}

inline Card C(const char* name) { return *Card::Parse(name); }

}  // namespace hanabi::testing

#endif  // HANABI_TESTS_TEST_UTIL_H_
