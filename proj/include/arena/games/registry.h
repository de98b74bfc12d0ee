// Copyright 2026 The Arena Authors. All rights reserved.
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

#ifndef ARENA_GAMES_REGISTRY_H_
#define ARENA_GAMES_REGISTRY_H_

#include <cstdint>
#include <memory>

#include "arena/core/game.h"

namespace arena {

// Initial state for (env, seed, config). `config` holds the env-specific
// knobs (null or {} for defaults); unknown keys and bad values throw
// InvalidConfigError.
std::unique_ptr<GameState> Reset(EnvKind env, std::uint64_t seed,
                                 const nlohmann::json& config = nullptr);

// Fully expanded default configuration.
nlohmann::json DefaultConfig(EnvKind env);

int SeatCount(EnvKind env);

// Upper bound on plies before any playout terminates.
int PlyBound(EnvKind env);

}  // namespace arena

#endif  // ARENA_GAMES_REGISTRY_H_
