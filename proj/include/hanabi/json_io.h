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

#ifndef HANABI_JSON_IO_H_
#define HANABI_JSON_IO_H_

#include "json.hpp"

#include "hanabi/game.h"
#include "hanabi/observation.h"

namespace hanabi {

using Json = nlohmann::json;

// Wire forms shared by replay files and the play-service protocol.
// Cards are "R1".."B5"; moves are {"type":"play","slot":0},
// {"type":"reveal_color","target":1,"color":"R"}, and so on.
Json CardToJson(Card card);
Card CardFromJson(const Json& j);

Json MoveToJson(const Move& move);
Move MoveFromJson(const Json& j);

Json OutcomeToJson(const MoveOutcome& outcome);
MoveOutcome OutcomeFromJson(const Json& j);

Json ConfigToJson(const GameConfig& config);
GameConfig ConfigFromJson(const Json& j);

Json KnowledgeToJson(const CardKnowledge& k, const GameConfig& config);

// Censored view; never includes the viewer's own card identities.
Json ObservationToJson(const Observation& obs);

}  // namespace hanabi

#endif  // HANABI_JSON_IO_H_
