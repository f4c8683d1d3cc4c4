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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hanabi/agent.h"
#include "hanabi/encoder.h"
#include "hanabi/env.h"
#include "hanabi/eval.h"
#include "hanabi/json_io.h"
#include "hanabi/replay.h"

namespace py = pybind11;

namespace hanabi {
namespace {

py::object ToPy(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<int64_t>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<uint64_t>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const Json& v : j) out.append(ToPy(v));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = ToPy(v);
      return out;
    }
  }
}

Json FromPy(py::handle h) {
  if (h.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
  if (py::isinstance<py::int_>(h)) return h.cast<int64_t>();
  if (py::isinstance<py::float_>(h)) return h.cast<double>();
  if (py::isinstance<py::str>(h)) return h.cast<std::string>();
  if (py::isinstance<py::dict>(h)) {
    Json out = Json::object();
    for (auto [k, v] : h.cast<py::dict>()) out[py::str(k).cast<std::string>()] = FromPy(v);
    return out;
  }
  if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
    Json out = Json::array();
    for (py::handle v : h) out.push_back(FromPy(v));
    return out;
  }
  throw py::type_error("not JSON-like: " + py::repr(h).cast<std::string>());
}

template <typename T>
py::array_t<T> ToArray(const std::vector<T>& v) {
  py::array_t<T> out(py::ssize_t(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

ObservationMode ParseMode(const std::string& mode) {
  if (mode == "default") return ObservationMode::kDefault;
  if (mode == "minimal") return ObservationMode::kMinimal;
  throw py::value_error("observation mode must be 'default' or 'minimal'");
}

ScoringMode ParseScoring(const std::string& s) {
  if (s == "zero_on_bomb_out") return ScoringMode::kZeroOnBombOut;
  if (s == "cards_played") return ScoringMode::kCardsPlayed;
  throw py::value_error("scoring must be 'zero_on_bomb_out' or 'cards_played'");
}

py::dict StepToPy(const EnvStep& step) {
  py::dict d;
  d["observation"] = step.observation.config.players > 0 ? ToPy(ObservationToJson(step.observation))
                                                         : py::none();
  d["encoded"] = ToArray(step.encoded.bits);
  d["legal_mask"] = ToArray(step.legal_mask);
  d["reward"] = step.reward;
  d["done"] = step.done;
  d["score"] = step.score;
  d["current_player"] = step.current_player;
  d["outcome"] = step.outcome ? ToPy(OutcomeToJson(*step.outcome)) : py::none();
  d["terminal"] = step.terminal ? py::object(py::str(std::string(TerminalReasonName(*step.terminal))))
                                : py::none();
  d["forfeited"] = step.forfeited;
  return d;
}

// Owns one agent per seat and plays them against a live GameState.
class Table {
 public:
  Table(const GameConfig& config, uint64_t seed, const std::vector<std::string>& specs)
      : state_(NewGame(config, seed)) {
    if (int(specs.size()) != config.players) throw py::value_error("one agent spec per seat");
    for (int s = 0; s < config.players; ++s) {
      agents_.push_back(MakeAgent(specs[s], AgentContext{config, s, seed}));
    }
  }

  Move Suggest() const {
    const int seat = state_.current_player();
    return agents_[seat]->Act(Observe(state_, seat));
  }

  py::object Step() {
    if (IsTerminal(state_)) throw py::value_error("game is over");
    const int seat = state_.current_player();
    const MoveOutcome outcome = state_.Apply(agents_[seat]->Act(Observe(state_, seat)));
    for (int s = 0; s < int(agents_.size()); ++s) agents_[s]->ObserveOutcome(outcome, Observe(state_, s));
    return ToPy(OutcomeToJson(outcome));
  }

  const GameState& state() const { return state_; }

 private:
  GameState state_;
  std::vector<std::unique_ptr<Agent>> agents_;
};

}  // namespace
}  // namespace hanabi

PYBIND11_MODULE(_hanabi, m) {
  using namespace hanabi;
  m.doc() = "Hanabi game engine, environment, agents and evaluation";

  py::register_exception<HanabiError>(m, "HanabiError", PyExc_ValueError);
  py::register_exception<IllegalMoveError>(m, "IllegalMoveError", PyExc_ValueError);
  py::register_exception<InvalidConfigError>(m, "InvalidConfigError", PyExc_ValueError);
  py::register_exception<ReplayError>(m, "ReplayError", PyExc_ValueError);

  py::class_<GameConfig>(m, "GameConfig")
      .def(py::init<>())
      .def_static("standard", &GameConfig::Standard, py::arg("players"))
      .def_static("small", &GameConfig::Small, py::arg("players") = 2)
      .def_static("very_small", &GameConfig::VerySmall, py::arg("players") = 2)
      .def_static("from_dict", [](const py::dict& d) { return ConfigFromJson(FromPy(d)); })
      .def_readwrite("players", &GameConfig::players)
      .def_readwrite("colors", &GameConfig::colors)
      .def_readwrite("ranks", &GameConfig::ranks)
      .def_readwrite("hand_size", &GameConfig::hand_size)
      .def_readwrite("max_info_tokens", &GameConfig::max_info_tokens)
      .def_readwrite("max_lives", &GameConfig::max_lives)
      .def_readwrite("seed", &GameConfig::seed)
      .def_property(
          "scoring",
          [](const GameConfig& c) {
            return c.scoring == ScoringMode::kZeroOnBombOut ? "zero_on_bomb_out" : "cards_played";
          },
          [](GameConfig& c, const std::string& s) { c.scoring = ParseScoring(s); })
      .def_property_readonly("deck_size", &GameConfig::DeckSize)
      .def_property_readonly("max_score", &GameConfig::MaxScore)
      .def("validate", &GameConfig::Validate)
      .def("to_dict", [](const GameConfig& c) { return ToPy(ConfigToJson(c)); })
      .def("__eq__", [](const GameConfig& a, const GameConfig& b) { return a == b; })
      .def("__repr__", [](const GameConfig& c) { return "GameConfig(" + ConfigToJson(c).dump() + ")"; });

  py::class_<Move>(m, "Move")
      .def_static("play", [](int slot) { return Move::Play(slot); }, py::arg("slot"))
      .def_static("discard", [](int slot) { return Move::Discard(slot); }, py::arg("slot"))
      .def_static("reveal_color", [](int target, const std::string& color) {
        if (color.size() != 1 || ColorFromLetter(color[0]) < 0) throw py::value_error("color letter");
        return Move::RevealColor(target, ColorFromLetter(color[0]));
      }, py::arg("target_offset"), py::arg("color"))
      .def_static("reveal_rank", [](int target, int rank) { return Move::RevealRank(target, rank); },
                  py::arg("target_offset"), py::arg("rank"))
      .def_static("from_dict", [](const py::dict& d) { return MoveFromJson(FromPy(d)); })
      .def_property_readonly("type", [](const Move& mv) { return std::string(MoveTypeName(mv.type)); })
      .def_property_readonly("slot", [](const Move& mv) { return int(mv.slot); })
      .def_property_readonly("target_offset", [](const Move& mv) { return int(mv.target_offset); })
      .def_property_readonly("rank", [](const Move& mv) { return int(mv.rank); })
      .def_property_readonly("color", [](const Move& mv) {
        return mv.color >= 0 ? py::object(py::str(std::string(1, ColorLetter(mv.color)))) : py::none();
      })
      .def("to_dict", [](const Move& mv) { return ToPy(MoveToJson(mv)); })
      .def("__eq__", [](const Move& a, const Move& b) { return a == b; })
      .def("__hash__", [](const Move& mv) { return std::hash<std::string>()(mv.ToString()); })
      .def("__repr__", &Move::ToString);

  py::class_<GameState>(m, "GameState")
      .def_property_readonly("config", &GameState::config)
      .def_property_readonly("current_player", &GameState::current_player)
      .def_property_readonly("info_tokens", &GameState::info_tokens)
      .def_property_readonly("lives", &GameState::lives)
      .def_property_readonly("deck_size", &GameState::deck_size)
      .def_property_readonly("turn", &GameState::turn)
      .def_property_readonly("seed", &GameState::seed)
      .def_property_readonly("fireworks", [](const GameState& s) {
        return std::vector<int>(s.all_fireworks().begin(), s.all_fireworks().end());
      })
      .def_property_readonly("discard_pile", [](const GameState& s) {
        std::vector<std::string> out;
        for (Card c : s.discard_pile()) out.push_back(c.ToString());
        return out;
      })
      .def("hand", [](const GameState& s, int player) {
        if (player < 0 || player >= s.num_players()) throw py::index_error("player");
        std::vector<std::string> out;
        for (Card c : s.hand(player)) out.push_back(c.ToString());
        return out;
      })
      .def("score", &GameState::Score)
      .def("cards_played", &GameState::CardsPlayed)
      .def("legal_moves", [](const GameState& s) { return LegalMoves(s); })
      .def("apply", [](GameState& s, const Move& mv) { return ToPy(OutcomeToJson(s.Apply(mv))); })
      .def("terminal_reason", [](const GameState& s) -> py::object {
        const auto t = IsTerminal(s);
        return t ? py::object(py::str(std::string(TerminalReasonName(*t)))) : py::none();
      })
      .def("is_terminal", [](const GameState& s) { return IsTerminal(s).has_value(); })
      .def("observe", [](const GameState& s, int viewer, const std::string& mode) {
        return ToPy(ObservationToJson(Observe(s, viewer, ParseMode(mode))));
      }, py::arg("viewer"), py::arg("mode") = "default")
      .def("encode", [](const GameState& s, int viewer, const std::string& mode) {
        return ToArray(Encode(Observe(s, viewer, ParseMode(mode))).bits);
      }, py::arg("viewer"), py::arg("mode") = "default")
      .def("copy", [](const GameState& s) { return s; })
      .def("__eq__", [](const GameState& a, const GameState& b) { return a == b; });

  m.def("new_game", [](const GameConfig& c, uint64_t seed) { return NewGame(c, seed); },
        py::arg("config"), py::arg("seed"));
  m.def("encoding_dim", &EncodingDim, py::arg("config"));
  m.def("action_space", &ActionSpace, py::arg("config"));
  m.def("action_space_size", &ActionSpaceSize, py::arg("config"));

  py::class_<Env>(m, "Env")
      .def(py::init([](const GameConfig& c, const std::string& mode, bool forfeit, bool build, int64_t budget) {
             EnvOptions o;
             o.mode = ParseMode(mode);
             o.illegal_action_forfeits = forfeit;
             o.build_observations = build;
             auto b = std::make_shared<StepBudget>();
             if (budget > 0) b->limit = budget;
             return std::make_unique<Env>(c, o, b);
           }),
           py::arg("config"), py::arg("mode") = "default", py::arg("illegal_action_forfeits") = false,
           py::arg("build_observations") = true, py::arg("step_budget") = 0)
      .def("reset", [](Env& e, uint64_t seed) { return StepToPy(e.Reset(seed)); }, py::arg("seed"))
      .def("step", [](Env& e, int a) { return StepToPy(e.Step(a)); }, py::arg("action"))
      .def_property_readonly("state", &Env::state, py::return_value_policy::copy)
      .def_property_readonly("config", &Env::config)
      .def_property_readonly("action_space", &Env::action_space)
      .def_property_readonly("done", &Env::done)
      .def_property_readonly("steps_consumed", [](const Env& e) { return e.budget().consumed; });

  py::class_<Table>(m, "Table")
      .def(py::init<const GameConfig&, uint64_t, const std::vector<std::string>&>(), py::arg("config"),
           py::arg("seed"), py::arg("agents"))
      .def("suggest", &Table::Suggest)
      .def("step", &Table::Step)
      .def_property_readonly("state", &Table::state, py::return_value_policy::copy);

  m.def("record_game", [](const GameConfig& c, uint64_t seed, const std::vector<std::string>& specs) {
    return ReplayToJsonLines(PlayRecordedGame(c, seed, specs));
  }, py::arg("config"), py::arg("seed"), py::arg("agents"));
  m.def("verify_replay", [](const std::string& text) {
    const VerifyResult v = VerifyReplay(ParseReplay(text));
    py::dict d;
    d["ok"] = v.ok;
    d["divergent_turn"] = v.divergent_turn ? py::object(py::int_(*v.divergent_turn)) : py::none();
    d["message"] = v.message;
    return d;
  }, py::arg("text"));
  m.def("replay_to_state", [](const std::string& text) { return ReplayToState(ParseReplay(text)); },
        py::arg("text"));

  m.def("summarize", [](const std::vector<int>& scores, int max_score) {
    const Summary s = Summarize(scores, max_score);
    py::dict d;
    d["n"] = s.n;
    d["mean"] = s.mean;
    d["std_error"] = s.std_error;
    d["perfect_pct"] = s.perfect_pct;
    return d;
  }, py::arg("scores"), py::arg("max_score") = 25);
  m.def("run_self_play", [](const std::string& agent, const GameConfig& c, int n, uint64_t base, int threads) {
    SelfPlayReport r;
    {
      py::gil_scoped_release release;
      r = RunSelfPlay(agent, c, n, base, threads);
    }
    py::dict d = ToPy(r.ToJson()).cast<py::dict>();
    d["scores"] = r.scores;
    return d;
  }, py::arg("agent"), py::arg("config"), py::arg("n_games"), py::arg("base_seed") = 0, py::arg("threads") = 1);
  m.def("run_crosstable", [](const std::vector<std::string>& agents, const GameConfig& c, int trials,
                             int sample_sets, uint64_t base, int threads) {
    AdHocOptions o;
    o.trials_per_pair = trials;
    o.sample_sets = sample_sets;
    o.base_seed = base;
    o.threads = threads;
    CrossTable t;
    {
      py::gil_scoped_release release;
      t = RunCrossTable(agents, c, o);
    }
    return ToPy(t.ToJson());
  }, py::arg("agents"), py::arg("config"), py::arg("trials_per_pair") = 1000, py::arg("sample_sets") = 100,
     py::arg("base_seed") = 0, py::arg("threads") = 1);
}
