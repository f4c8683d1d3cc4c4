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

#include "hanabi/service.h"

#include <filesystem>
#include <random>
#include <thread>

#include "hanabi/rng.h"

namespace hanabi {

Json ServiceError::ToJson() const {
  Json j = {{"type", "error"}, {"code", code_}, {"message", what()}};
  if (!rule_.empty()) j["rule"] = rule_;
  return j;
}

SeatAssignment SeatAssignment::Parse(const std::string& text) {
  if (text == "human") return SeatAssignment{true, ""};
  CheckAgentSupports(text, GameConfig::Standard(kMaxPlayers));
  return SeatAssignment{false, text};
}

struct SessionRegistry::Session {
  struct Seat {
    SeatAssignment assignment;
    std::unique_ptr<Agent> bot;
    bool connected = false;
    std::string token;
    std::vector<Json> outbox;
  };

  std::string id;
  uint64_t seed = 0;
  GameState state;
  std::vector<Seat> seats;
  std::unique_ptr<ReplayWriter> writer;
  std::string replay_path;
  std::optional<Replay> finished;
  std::chrono::milliseconds bot_delay{0};

  mutable std::mutex mu;
  std::condition_variable cv;

  const GameConfig& config() const { return state.config(); }
  bool over() const { return IsTerminal(state).has_value(); }

  void Push(int seat, Json message) {
    Seat& s = seats[seat];
    message["session"] = id;
    message["seq"] = uint64_t(s.outbox.size() + 1);
    s.outbox.push_back(std::move(message));
    cv.notify_all();
  }

  Json SeatsJson() const {
    Json out = Json::array();
    for (const Seat& s : seats) {
      out.push_back({{"kind", s.assignment.human ? "human" : "agent"},
                     {"agent", s.assignment.agent},
                     {"connected", s.connected}});
    }
    return out;
  }

  Json View(int seat) const { return ObservationToJson(Observe(state, seat)); }

  Json GameOverJson() const {
    Json j = {{"type", "game_over"},
              {"score", state.Score()},
              {"reason", std::string(TerminalReasonName(*IsTerminal(state)))},
              {"turns", state.turn()}};
    if (!replay_path.empty()) j["replay"] = replay_path;
    return j;
  }

  void PushYourTurn(int seat) {
    Json legal = Json::array();
    for (const Move& move : LegalMoves(state)) legal.push_back(MoveToJson(move));
    Push(seat, {{"type", "your_turn"}, {"turn", state.turn()}, {"legal_moves", legal}});
  }

  void ApplyAndBroadcast(const Move& move) {
    const MoveOutcome outcome = state.Apply(move);
    if (writer) writer->Append(outcome);
    for (int s = 0; s < int(seats.size()); ++s) {
      if (seats[s].bot) {
        seats[s].bot->ObserveOutcome(outcome, Observe(state, s));
      } else {
        Push(s, {{"type", "outcome"},
                 {"turn", state.turn() - 1},
                 {"outcome", OutcomeToJson(outcome)},
                 {"view", View(s)}});
      }
    }
    if (over()) {
      if (writer) {
        writer->Finish(state);
        writer.reset();
      }
      std::vector<std::string> specs;
      for (const Seat& s : seats) specs.push_back(s.assignment.ToString());
      finished = RecordReplay(state, specs);
      for (int s = 0; s < int(seats.size()); ++s) {
        if (!seats[s].bot) Push(s, GameOverJson());
      }
    } else if (!seats[state.current_player()].bot) {
      PushYourTurn(state.current_player());
    }
  }

  void RunBots() {
    while (!over() && seats[state.current_player()].bot) {
      if (bot_delay.count() > 0) std::this_thread::sleep_for(bot_delay);
      const int actor = state.current_player();
      ApplyAndBroadcast(seats[actor].bot->Act(Observe(state, actor)));
    }
  }

  Seat& HumanSeat(int seat, const std::string& token) {
    if (seat < 0 || seat >= int(seats.size()) || !seats[seat].assignment.human) {
      throw ServiceError(service_error::kUnknownSeat, "no human seat " + std::to_string(seat));
    }
    Seat& s = seats[seat];
    if (s.token.empty() || s.token != token) {
      throw ServiceError(service_error::kBadToken, "seat " + std::to_string(seat) + " not joined with this token");
    }
    return s;
  }
};

SessionRegistry::SessionRegistry(ServiceOptions options) : options_(std::move(options)) {}
SessionRegistry::~SessionRegistry() = default;

std::shared_ptr<SessionRegistry::Session> SessionRegistry::Find(const std::string& id) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError(service_error::kUnknownSession, "unknown session '" + id + "'");
  return it->second;
}

std::string SessionRegistry::CreateSession(const GameConfig& config, uint64_t seed,
                                           const std::vector<SeatAssignment>& seats) {
  config.Validate();
  if (int(seats.size()) != config.players) {
    throw ServiceError(service_error::kBadRequest,
                       "expected " + std::to_string(config.players) + " seats, got " +
                           std::to_string(seats.size()));
  }
  auto session = std::make_shared<Session>();
  {
    std::lock_guard<std::mutex> lock(mu_);
    session->id = "s" + std::to_string(next_id_++);
  }
  session->seed = seed;
  session->state = NewGame(config, seed);
  session->bot_delay = options_.bot_delay;
  for (int s = 0; s < config.players; ++s) {
    Session::Seat seat;
    seat.assignment = seats[s];
    if (!seat.assignment.human) {
      try {
        seat.bot = MakeAgent(seat.assignment.agent, AgentContext{config, s, seed});
      } catch (const HanabiError& e) {
        throw ServiceError(service_error::kBadRequest, e.what());
      }
    }
    session->seats.push_back(std::move(seat));
  }
  if (!options_.replay_dir.empty()) {
    std::filesystem::create_directories(options_.replay_dir);
    session->replay_path =
        (std::filesystem::path(options_.replay_dir) / (session->id + ".hnb.jsonl")).string();
    std::vector<std::string> specs;
    for (const SeatAssignment& a : seats) specs.push_back(a.ToString());
    session->writer = std::make_unique<ReplayWriter>(session->replay_path, session->state, specs);
  }
  {
    std::lock_guard<std::mutex> lock(session->mu);
    session->RunBots();
  }
  std::lock_guard<std::mutex> lock(mu_);
  sessions_[session->id] = session;
  return session->id;
}

JoinResult SessionRegistry::Join(const std::string& id, int seat, const std::string& token) {
  auto session = Find(id);
  std::lock_guard<std::mutex> lock(session->mu);
  if (seat < 0 || seat >= int(session->seats.size()) || !session->seats[seat].assignment.human) {
    throw ServiceError(service_error::kUnknownSeat, "no human seat " + std::to_string(seat));
  }
  Session::Seat& s = session->seats[seat];
  if (!s.token.empty() && s.token != token) {
    throw ServiceError(service_error::kSeatTaken, "seat " + std::to_string(seat) + " is taken");
  }
  if (s.token.empty()) {
    std::random_device rd;
    SplitMix64 rng((uint64_t(rd()) << 32) ^ rd());
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", (unsigned long long)rng.Next(),
                  (unsigned long long)rng.Next());
    s.token = buf;
  }
  s.connected = true;
  session->Push(seat, {{"type", "hello"},
                       {"seat", seat},
                       {"config", ConfigToJson(session->config())},
                       {"seats", session->SeatsJson()}});
  session->Push(seat, {{"type", "snapshot"},
                       {"turn", session->state.turn()},
                       {"score", session->state.Score()},
                       {"view", session->View(seat)}});
  if (session->over()) {
    session->Push(seat, session->GameOverJson());
  } else if (session->state.current_player() == seat) {
    session->PushYourTurn(seat);
  }
  return JoinResult{s.token, uint64_t(s.outbox.size())};
}

void SessionRegistry::Leave(const std::string& id, int seat, const std::string& token) {
  auto session = Find(id);
  std::lock_guard<std::mutex> lock(session->mu);
  session->HumanSeat(seat, token).connected = false;
}

void SessionRegistry::SubmitMove(const std::string& id, int seat, const std::string& token,
                                 const Move& move) {
  auto session = Find(id);
  std::lock_guard<std::mutex> lock(session->mu);
  session->HumanSeat(seat, token);
  auto reject = [&](ServiceError error) {
    session->Push(seat, error.ToJson());
    throw error;
  };
  if (session->over()) reject(ServiceError(service_error::kGameOver, "the game is over"));
  if (session->state.current_player() != seat) {
    reject(ServiceError(service_error::kNotYourTurn,
                        "it is seat " + std::to_string(session->state.current_player()) + "'s turn"));
  }
  if (auto rule = MoveViolation(session->state, move)) {
    reject(ServiceError(service_error::kIllegalMove,
                        "illegal move " + move.ToString() + ": " + std::string(*rule),
                        std::string(*rule)));
  }
  session->ApplyAndBroadcast(move);
  session->RunBots();
}

std::vector<Json> SessionRegistry::Events(const std::string& id, int seat,
                                          const std::string& token, uint64_t since,
                                          std::chrono::milliseconds wait) {
  auto session = Find(id);
  std::unique_lock<std::mutex> lock(session->mu);
  Session::Seat& s = session->HumanSeat(seat, token);
  session->cv.wait_for(lock, wait, [&] { return s.outbox.size() > since; });
  std::vector<Json> out;
  for (std::size_t i = since; i < s.outbox.size(); ++i) out.push_back(s.outbox[i]);
  return out;
}

Json SessionRegistry::Health() const {
  std::vector<std::shared_ptr<Session>> all;
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& [id, session] : sessions_) all.push_back(session);
  }
  int active = 0, finished = 0, connected = 0;
  for (const auto& session : all) {
    std::lock_guard<std::mutex> lock(session->mu);
    (session->over() ? finished : active)++;
    for (const auto& seat : session->seats) connected += seat.connected;
  }
  return {{"status", "ok"},
          {"sessions", int(all.size())},
          {"active", active},
          {"finished", finished},
          {"connected_seats", connected}};
}

Json SessionRegistry::Describe(const std::string& id) const {
  auto session = Find(id);
  std::lock_guard<std::mutex> lock(session->mu);
  return {{"session", id},
          {"config", ConfigToJson(session->config())},
          {"seats", session->SeatsJson()},
          {"turn", session->state.turn()},
          {"current_player", session->state.current_player()},
          {"over", session->over()}};
}

GameState SessionRegistry::State(const std::string& id) const {
  auto session = Find(id);
  std::lock_guard<std::mutex> lock(session->mu);
  return session->state;
}

std::optional<Replay> SessionRegistry::FinishedReplay(const std::string& id) const {
  auto session = Find(id);
  std::lock_guard<std::mutex> lock(session->mu);
  return session->finished;
}

bool SessionRegistry::SeatConnected(const std::string& id, int seat) const {
  auto session = Find(id);
  std::lock_guard<std::mutex> lock(session->mu);
  if (seat < 0 || seat >= int(session->seats.size())) {
    throw ServiceError(service_error::kUnknownSeat, "no seat " + std::to_string(seat));
  }
  return session->seats[seat].connected;
}

}  // namespace hanabi
