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

#ifndef HANABI_SERVICE_H_
#define HANABI_SERVICE_H_

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hanabi/agent.h"
#include "hanabi/game.h"
#include "hanabi/json_io.h"
#include "hanabi/replay.h"

namespace hanabi {

// Error codes carried by `error` messages.
namespace service_error {
inline constexpr const char* kUnknownSession = "unknown_session";
inline constexpr const char* kUnknownSeat = "unknown_seat";
inline constexpr const char* kSeatTaken = "seat_taken";
inline constexpr const char* kBadToken = "bad_token";
inline constexpr const char* kNotYourTurn = "not_your_turn";
inline constexpr const char* kIllegalMove = "illegal_move";
inline constexpr const char* kGameOver = "game_over";
inline constexpr const char* kBadRequest = "bad_request";
}  // namespace service_error

class ServiceError : public HanabiError {
 public:
  ServiceError(std::string code, const std::string& message, std::string rule = "")
      : HanabiError(message), code_(std::move(code)), rule_(std::move(rule)) {}
  const std::string& code() const { return code_; }
  const std::string& rule() const { return rule_; }
  Json ToJson() const;

 private:
  std::string code_;
  std::string rule_;
};

// "human" or an agent spec.
struct SeatAssignment {
  bool human = false;
  std::string agent;

  static SeatAssignment Parse(const std::string& text);
  std::string ToString() const { return human ? "human" : agent; }
};

struct ServiceOptions {
  std::string replay_dir;  // empty: keep replays in memory only
  std::chrono::milliseconds bot_delay{0};
};

struct JoinResult {
  std::string token;
  uint64_t last_seq = 0;
};

class SessionRegistry {
 public:
  explicit SessionRegistry(ServiceOptions options = {});
  ~SessionRegistry();

  // Bots seated before the first human move act at once.
  std::string CreateSession(const GameConfig& config, uint64_t seed,
                            const std::vector<SeatAssignment>& seats);

  // Claims a human seat (or reclaims it with its token) and queues hello,
  // snapshot and, when due, your_turn for that seat.
  JoinResult Join(const std::string& session, int seat, const std::string& token = "");
  void Leave(const std::string& session, int seat, const std::string& token);

  // Validates and applies a human move, then lets bot seats act. Throws
  // ServiceError; a rejected move also queues an error message.
  void SubmitMove(const std::string& session, int seat, const std::string& token,
                  const Move& move);

  // Messages for `seat` with seq > since, waiting up to `wait` for one.
  std::vector<Json> Events(const std::string& session, int seat, const std::string& token,
                           uint64_t since, std::chrono::milliseconds wait = {});

  Json Health() const;
  Json Describe(const std::string& session) const;

  // Server-side inspection for tests and tools.
  GameState State(const std::string& session) const;
  std::optional<Replay> FinishedReplay(const std::string& session) const;
  bool SeatConnected(const std::string& session, int seat) const;

 private:
  struct Session;
  std::shared_ptr<Session> Find(const std::string& id) const;

  ServiceOptions options_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  uint64_t next_id_ = 1;
};

}  // namespace hanabi

#endif  // HANABI_SERVICE_H_
