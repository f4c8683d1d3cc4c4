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

#ifndef HANABI_HTTP_SERVER_H_
#define HANABI_HTTP_SERVER_H_

#include <memory>
#include <string>

#include "hanabi/service.h"

namespace httplib {
class Server;
}

namespace hanabi {

// JSON-over-HTTP front end for a SessionRegistry. Server-to-client messages
// are delivered by long-polling the events route. Routes are listed in
// docs/protocol.md.
class PlayServer {
 public:
  explicit PlayServer(SessionRegistry& registry);
  ~PlayServer();

  // Blocks until Stop().
  bool Listen(const std::string& host, int port);
  // Binds to a free port, returns it; serve with ListenAfterBind().
  int BindToAnyPort(const std::string& host);
  bool ListenAfterBind();
  void Stop();

 private:
  SessionRegistry& registry_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace hanabi

#endif  // HANABI_HTTP_SERVER_H_
