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

#ifndef ARENA_CORE_SERIALIZE_H_
#define ARENA_CORE_SERIALIZE_H_

#include "arena/core/action.h"
#include "arena/core/game.h"
#include "json.hpp"

namespace arena {

// {"env", "surface", "payload": {...}, optional "utterance"}. Payload keys are
// documented in docs/record_schema.json.
nlohmann::json ActionToJson(const ActionSpec& action);
// Throws CorruptRecordError on malformed input.
ActionSpec ActionFromJson(const nlohmann::json& j);

nlohmann::json PayloadToJson(const ActionPayload& payload);
ActionPayload PayloadFromJson(EnvKind env, const nlohmann::json& j);

nlohmann::json OutcomeToJson(const Outcome& outcome);
Outcome OutcomeFromJson(const nlohmann::json& j);

// Legal surfaces are inlined only up to `max_listed`; the count is always kept.
nlohmann::json ObservationToJson(const Observation& obs,
                                 std::size_t max_listed = 100);

// Seeds travel as decimal strings so 64-bit values survive any JSON reader.
std::string SeedToString(std::uint64_t seed);
std::uint64_t SeedFromJson(const nlohmann::json& j);

}  // namespace arena

#endif  // ARENA_CORE_SERIALIZE_H_
