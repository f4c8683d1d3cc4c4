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

#ifndef HANABI_AGENTS_RANDOM_AGENT_H_
#define HANABI_AGENTS_RANDOM_AGENT_H_

#include "hanabi/agent.h"
#include "hanabi/rng.h"

namespace hanabi {

// Uniform over the legal moves.
class RandomAgent final : public Agent {
 public:
  explicit RandomAgent(uint64_t seed, uint64_t spec_seed = 0)
      : seed_(seed), spec_seed_(spec_seed), rng_(seed) {}

  Move Act(const Observation& obs) override {
    return obs.legal_moves[rng_.Uniform(obs.legal_moves.size())];
  }
  void Reset() override { rng_ = SplitMix64(seed_); }
  std::string spec() const override { return "random:seed=" + std::to_string(spec_seed_); }

 private:
  uint64_t seed_;
  uint64_t spec_seed_;
  SplitMix64 rng_;
};

}  // namespace hanabi

#endif  // HANABI_AGENTS_RANDOM_AGENT_H_
