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

#include <cstdlib>

#include "hanabi/agent.h"
#include "hanabi/agents/convention.h"
#include "hanabi/agents/hat.h"
#include "hanabi/agents/random_agent.h"
#include "hanabi/rng.h"

namespace hanabi {

AgentSpec AgentSpec::Parse(std::string_view text) {
  AgentSpec spec;
  const auto colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  if (spec.name.empty()) throw InvalidConfigError("empty agent spec");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw InvalidConfigError("bad agent option '" + std::string(item) + "' in " + std::string(text));
    }
    spec.options[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return spec;
}

std::string AgentSpec::ToString() const {
  std::string out = name;
  char sep = ':';
  for (const auto& [key, value] : options) {
    out += sep + key + "=" + value;
    sep = ',';
  }
  return out;
}

namespace {

uint64_t ParseSeed(const AgentSpec& spec) {
  auto it = spec.options.find("seed");
  if (it == spec.options.end()) return 0;
  char* end = nullptr;
  const uint64_t seed = std::strtoull(it->second.c_str(), &end, 10);
  if (end == it->second.c_str() || *end != '\0') {
    throw InvalidConfigError("bad seed in agent spec: " + it->second);
  }
  return seed;
}

void CheckOptions(const AgentSpec& spec, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : spec.options) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw InvalidConfigError("unknown option '" + key + "' for agent " + spec.name);
  }
}

}  // namespace

void CheckAgentSupports(std::string_view text, const GameConfig& config) {
  const AgentSpec spec = AgentSpec::Parse(text);
  if (spec.name == "random") {
    CheckOptions(spec, {"seed"});
    ParseSeed(spec);
  } else if (spec.name == "hat") {
    CheckOptions(spec, {});
    if (config.players < 4) {
      throw InvalidConfigError("hat agent needs 4 or 5 players (got " +
                               std::to_string(config.players) + ")");
    }
  } else if (spec.name == "convention") {
    CheckOptions(spec, {});
  } else {
    throw InvalidConfigError("unknown agent: " + spec.name);
  }
}

std::unique_ptr<Agent> MakeAgent(std::string_view text, const AgentContext& context) {
  CheckAgentSupports(text, context.config);
  const AgentSpec spec = AgentSpec::Parse(text);
  if (spec.name == "random") {
    const uint64_t spec_seed = ParseSeed(spec);
    return std::make_unique<RandomAgent>(
        DeriveSeed(spec_seed ^ SplitMix64::Mix(context.game_seed), uint64_t(context.seat)),
        spec_seed);
  }
  if (spec.name == "hat") return std::make_unique<HatAgent>(context.config);
  return std::make_unique<ConventionAgent>(context.config);
}

}  // namespace hanabi
