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

#ifndef ARENA_RATING_TRUESKILL_H_
#define ARENA_RATING_TRUESKILL_H_

#include <utility>

#include "arena/core/types.h"
#include "json.hpp"

namespace arena {

class RatingError : public ArenaError {
 public:
  using ArenaError::ArenaError;
};

struct Rating {
  double mu = 25.0;
  double sigma = 25.0 / 3.0;
  bool operator==(const Rating&) const = default;
};

struct TrueSkillParams {
  double mu0 = 25.0;
  double sigma0 = 25.0 / 3.0;
  double beta = 25.0 / 6.0;
  double tau = 0.0;
  double draw_probability = 0.0;  // in [0, 1)

  Rating Initial() const { return {mu0, sigma0}; }
  // sqrt(2) * beta * PhiInverse((p + 1) / 2).
  double DrawMargin() const;
  // Throws RatingError on out-of-range values.
  void Validate() const;

  static TrueSkillParams FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
};

enum class MatchResult { kAWins, kBWins, kDraw };

// Standard normal density and distribution.
double NormalPdf(double x);
double NormalCdf(double x);

// Truncation corrections for a win (x = t - eps) and a draw.
double VWin(double t, double eps);
double WWin(double t, double eps);
double VDraw(double t, double eps);
double WDraw(double t, double eps);

// Two-player TrueSkill update. Throws RatingError on non-finite results.
std::pair<Rating, Rating> UpdateOneVsOne(const Rating& a, const Rating& b,
                                         MatchResult result,
                                         const TrueSkillParams& params = {});

}  // namespace arena

#endif  // ARENA_RATING_TRUESKILL_H_
