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

#include "arena/core/assets.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "arena/core/types.h"

#ifndef ARENA_DEFAULT_ASSET_DIR
#define ARENA_DEFAULT_ASSET_DIR "assets"
#endif

namespace arena {

std::filesystem::path AssetDir() {
  if (const char* env = std::getenv("ARENA_ASSET_DIR"); env && *env) {
    return env;
  }
  return ARENA_DEFAULT_ASSET_DIR;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArenaError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace arena
