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

#include "hanabi/http_server.h"

#include "httplib.h"

namespace hanabi {

namespace {

constexpr auto kJson = "application/json";
constexpr int kMaxWaitMs = 30000;

int StatusFor(const std::string& code) {
  if (code == service_error::kUnknownSession || code == service_error::kUnknownSeat) return 404;
  if (code == service_error::kBadToken) return 403;
  if (code == service_error::kNotYourTurn || code == service_error::kSeatTaken ||
      code == service_error::kGameOver) {
    return 409;
  }
  return 400;
}

void Reply(httplib::Response& res, const Json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

// Runs a handler, mapping errors to protocol `error` bodies.
template <typename Fn>
void Guard(httplib::Response& res, Fn&& fn) {
  try {
    fn();
  } catch (const ServiceError& e) {
    Reply(res, e.ToJson(), StatusFor(e.code()));
  } catch (const Json::exception& e) {
    Reply(res, ServiceError(service_error::kBadRequest, e.what()).ToJson(), 400);
  } catch (const std::exception& e) {
    Reply(res, ServiceError(service_error::kBadRequest, e.what()).ToJson(), 400);
  }
}

Json Body(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  Json j = Json::parse(req.body);
  if (!j.is_object()) throw ServiceError(service_error::kBadRequest, "body must be a JSON object");
  return j;
}

}  // namespace

PlayServer::PlayServer(SessionRegistry& registry)
    : registry_(registry), server_(std::make_unique<httplib::Server>()) {
  httplib::Server& s = *server_;

  s.Get("/health", [this](const httplib::Request&, httplib::Response& res) {
    Reply(res, registry_.Health());
  });

  s.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] {
      const Json body = Body(req);
      GameConfig config = body.contains("config") ? ConfigFromJson(body.at("config"))
                                                  : GameConfig::Standard(body.value("players", 2));
      std::vector<SeatAssignment> seats;
      for (const Json& seat : body.at("seats")) seats.push_back(SeatAssignment::Parse(seat.get<std::string>()));
      uint64_t seed = body.value("seed", config.seed);
      if (!body.contains("seed") && !body.contains("config")) seed = std::random_device{}();
      const std::string id = registry_.CreateSession(config, seed, seats);
      Reply(res, registry_.Describe(id), 201);
    });
  });

  s.Get(R"(/sessions/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] { Reply(res, registry_.Describe(req.matches[1])); });
  });

  s.Post(R"(/sessions/([^/]+)/join)", [this](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] {
      const Json body = Body(req);
      const JoinResult joined =
          registry_.Join(req.matches[1], body.at("seat").get<int>(), body.value("token", ""));
      Reply(res, {{"session", std::string(req.matches[1])},
                  {"seat", body.at("seat")},
                  {"token", joined.token},
                  {"last_seq", joined.last_seq}});
    });
  });

  s.Post(R"(/sessions/([^/]+)/leave)", [this](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] {
      const Json body = Body(req);
      registry_.Leave(req.matches[1], body.at("seat").get<int>(), body.value("token", ""));
      Reply(res, {{"ok", true}});
    });
  });

  s.Post(R"(/sessions/([^/]+)/move)", [this](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] {
      const Json body = Body(req);
      if (body.value("type", "move") != "move") {
        throw ServiceError(service_error::kBadRequest, "expected a move message");
      }
      Move move;
      try {
        move = MoveFromJson(body.at("move"));
      } catch (const HanabiError& e) {
        throw ServiceError(service_error::kBadRequest, e.what());
      }
      registry_.SubmitMove(req.matches[1], body.at("seat").get<int>(), body.value("token", ""), move);
      Reply(res, {{"accepted", true}});
    });
  });

  s.Get(R"(/sessions/([^/]+)/events)", [this](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] {
      auto param = [&](const char* key, const std::string& fallback) {
        return req.has_param(key) ? req.get_param_value(key) : fallback;
      };
      const int seat = std::stoi(param("seat", "-1"));
      const uint64_t since = std::stoull(param("since", "0"));
      const int wait_ms = std::clamp(std::stoi(param("wait_ms", "0")), 0, kMaxWaitMs);
      const auto events = registry_.Events(req.matches[1], seat, param("token", ""), since,
                                           std::chrono::milliseconds(wait_ms));
      Reply(res, {{"events", events}});
    });
  });
}

PlayServer::~PlayServer() = default;

bool PlayServer::Listen(const std::string& host, int port) { return server_->listen(host, port); }

int PlayServer::BindToAnyPort(const std::string& host) { return server_->bind_to_any_port(host); }

bool PlayServer::ListenAfterBind() { return server_->listen_after_bind(); }

void PlayServer::Stop() { server_->stop(); }

}  // namespace hanabi
