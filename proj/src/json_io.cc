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

#include "hanabi/json_io.h"

namespace hanabi {

namespace {

[[noreturn]] void Bad(const std::string& what) { throw HanabiError("bad json: " + what); }

template <typename T>
T Get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) Bad(std::string("missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    Bad(std::string("wrong type for '") + key + "'");
  }
}

}  // namespace

Json CardToJson(Card card) { return card.ToString(); }

Card CardFromJson(const Json& j) {
  if (!j.is_string()) Bad("card must be a string");
  const auto card = Card::Parse(j.get<std::string>());
  if (!card) Bad("card '" + j.get<std::string>() + "'");
  return *card;
}

Json MoveToJson(const Move& move) {
  switch (move.type) {
    case MoveType::kPlay:
      return {{"type", "play"}, {"slot", move.slot}};
    case MoveType::kDiscard:
      return {{"type", "discard"}, {"slot", move.slot}};
    case MoveType::kRevealColor:
      return {{"type", "reveal_color"},
              {"target", move.target_offset},
              {"color", std::string(1, ColorLetter(move.color))}};
    case MoveType::kRevealRank:
      return {{"type", "reveal_rank"}, {"target", move.target_offset}, {"rank", move.rank}};
  }
  return {};
}

Move MoveFromJson(const Json& j) {
  const auto type = Get<std::string>(j, "type");
  if (type == "play") return Move::Play(Get<int>(j, "slot"));
  if (type == "discard") return Move::Discard(Get<int>(j, "slot"));
  if (type == "reveal_color") {
    const auto color = Get<std::string>(j, "color");
    const int c = color.size() == 1 ? ColorFromLetter(color[0]) : -1;
    if (c < 0) Bad("color '" + color + "'");
    return Move::RevealColor(Get<int>(j, "target"), c);
  }
  if (type == "reveal_rank") return Move::RevealRank(Get<int>(j, "target"), Get<int>(j, "rank"));
  Bad("move type '" + type + "'");
}

Json OutcomeToJson(const MoveOutcome& outcome) {
  Json j = {{"actor", outcome.actor},
            {"move", MoveToJson(outcome.move)},
            {"info_delta", outcome.info_token_delta},
            {"life_delta", outcome.life_delta},
            {"drawn", outcome.drawn}};
  if (outcome.revealed_card) j["card"] = CardToJson(*outcome.revealed_card);
  if (outcome.success) j["success"] = *outcome.success;
  if (outcome.move.IsReveal()) {
    Json slots = Json::array();
    for (int s = 0; s < kMaxHandSize; ++s) {
      if ((outcome.touched_slots >> s) & 1u) slots.push_back(s);
    }
    j["touched"] = slots;
  }
  return j;
}

MoveOutcome OutcomeFromJson(const Json& j) {
  MoveOutcome outcome;
  outcome.actor = int8_t(Get<int>(j, "actor"));
  if (!j.contains("move")) Bad("missing 'move'");
  outcome.move = MoveFromJson(j.at("move"));
  outcome.info_token_delta = int8_t(Get<int>(j, "info_delta"));
  outcome.life_delta = int8_t(Get<int>(j, "life_delta"));
  outcome.drawn = Get<bool>(j, "drawn");
  if (j.contains("card")) outcome.revealed_card = CardFromJson(j.at("card"));
  if (j.contains("success")) outcome.success = Get<bool>(j, "success");
  if (j.contains("touched")) {
    for (int s : Get<std::vector<int>>(j, "touched")) {
      if (s < 0 || s >= kMaxHandSize) Bad("touched slot " + std::to_string(s));
      outcome.touched_slots |= uint8_t(1u << s);
    }
  }
  return outcome;
}

Json ConfigToJson(const GameConfig& config) {
  return {{"players", config.players},
          {"colors", config.colors},
          {"ranks", config.ranks},
          {"hand_size", config.hand_size},
          {"max_info_tokens", config.max_info_tokens},
          {"max_lives", config.max_lives},
          {"rank_counts", std::vector<int>(config.rank_counts.begin(),
                                           config.rank_counts.begin() + config.ranks)},
          {"scoring", std::string(ScoringModeName(config.scoring))},
          {"seed", config.seed}};
}

GameConfig ConfigFromJson(const Json& j) {
  if (!j.is_object()) Bad("config must be an object");
  GameConfig config = GameConfig::Standard(j.value("players", 2));
  config.colors = j.value("colors", config.colors);
  config.ranks = j.value("ranks", config.ranks);
  config.hand_size = j.value("hand_size", config.hand_size);
  config.max_info_tokens = j.value("max_info_tokens", config.max_info_tokens);
  config.max_lives = j.value("max_lives", config.max_lives);
  if (j.contains("rank_counts")) {
    const auto counts = Get<std::vector<int>>(j, "rank_counts");
    if (counts.size() > kMaxRanks) Bad("rank_counts too long");
    config.rank_counts.fill(0);
    std::copy(counts.begin(), counts.end(), config.rank_counts.begin());
  }
  if (j.contains("scoring")) config.scoring = ParseScoringMode(Get<std::string>(j, "scoring"));
  config.seed = j.value("seed", uint64_t{0});
  config.Validate();
  return config;
}

Json KnowledgeToJson(const CardKnowledge& k, const GameConfig& config) {
  std::string colors, ranks;
  for (int c = 0; c < config.colors; ++c) {
    if (k.ColorPlausible(c)) colors += ColorLetter(c);
  }
  for (int r = 1; r <= config.ranks; ++r) {
    if (k.RankPlausible(r)) ranks += char('0' + r);
  }
  Json j = {{"colors", colors}, {"ranks", ranks}};
  j["hinted_color"] = k.hinted_color >= 0 ? Json(std::string(1, ColorLetter(k.hinted_color))) : Json();
  j["hinted_rank"] = k.hinted_rank > 0 ? Json(k.hinted_rank) : Json();
  return j;
}

Json ObservationToJson(const Observation& obs) {
  const GameConfig& config = obs.config;
  Json hands = Json::array();
  for (const Hand& hand : obs.other_hands) {
    Json cards = Json::array();
    for (Card card : hand) cards.push_back(CardToJson(card));
    hands.push_back(cards);
  }
  Json knowledge = Json::array();
  for (const HandKnowledge& hand : obs.knowledge) {
    Json slots = Json::array();
    for (const CardKnowledge& k : hand) slots.push_back(KnowledgeToJson(k, config));
    knowledge.push_back(slots);
  }
  Json discards = Json::array();
  for (Card card : obs.discard_pile) discards.push_back(CardToJson(card));
  Json last = Json::array();
  for (const MoveOutcome& outcome : obs.last_outcomes) last.push_back(OutcomeToJson(outcome));
  Json legal = Json::array();
  for (const Move& move : obs.legal_moves) legal.push_back(MoveToJson(move));
  return {{"viewer", obs.viewer},
          {"current_player_offset", obs.current_player_offset},
          {"other_hands", hands},
          {"own_hand_size", obs.own_hand_size},
          {"fireworks", std::vector<int>(obs.fireworks.begin(),
                                         obs.fireworks.begin() + config.colors)},
          {"info_tokens", obs.info_tokens},
          {"lives", obs.lives},
          {"deck_size", obs.deck_size},
          {"discards", discards},
          {"knowledge", knowledge},
          {"last_outcomes", last},
          {"legal_moves", legal}};
}

}  // namespace hanabi
