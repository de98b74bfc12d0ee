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

#ifndef ARENA_CORE_ASSETS_H_
#define ARENA_CORE_ASSETS_H_

#include <filesystem>
#include <string>

namespace arena {

// Root of the shipped assets (prompt templates, word pairs). ARENA_ASSET_DIR
// in the environment overrides the path baked in at build time.
std::filesystem::path AssetDir();

// Whole file as a string; throws ArenaError when unreadable.
std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace arena

#endif  // ARENA_CORE_ASSETS_H_
