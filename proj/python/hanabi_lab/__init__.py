# Copyright 2026 The Hanabi Lab Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Hanabi engine, environment, agents and evaluation harness."""

from hanabi_lab._hanabi import (
    Env,
    GameConfig,
    GameState,
    HanabiError,
    IllegalMoveError,
    InvalidConfigError,
    Move,
    ReplayError,
    Table,
    action_space,
    action_space_size,
    encoding_dim,
    new_game,
    record_game,
    replay_to_state,
    run_crosstable,
    run_self_play,
    summarize,
    verify_replay,
)

__all__ = [
    "Env",
    "GameConfig",
    "GameState",
    "HanabiError",
    "IllegalMoveError",
    "InvalidConfigError",
    "Move",
    "ReplayError",
    "Table",
    "action_space",
    "action_space_size",
    "encoding_dim",
    "new_game",
    "record_game",
    "replay_to_state",
    "run_crosstable",
    "run_self_play",
    "summarize",
    "verify_replay",
]
