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

#include "arena/rating/trueskill.h"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/erf.hpp>

namespace arena {
namespace {

// Below this the draw window is treated as closed and the eps -> 0 limits
// are used.
constexpr double kTinyWindow = 1e-12;

}  // namespace

double NormalPdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double NormalCdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double TrueSkillParams::DrawMargin() const {
  if (draw_probability <= 0.0) return 0.0;
  const double z = std::numbers::sqrt2 *
                   boost::math::erf_inv(draw_probability);  // PhiInv((p+1)/2)
  return z * std::numbers::sqrt2 * beta;
}

void TrueSkillParams::Validate() const {
  if (!(sigma0 > 0.0)) throw RatingError("sigma0 must be positive");
  if (!(beta > 0.0)) throw RatingError("beta must be positive");
  if (!(tau >= 0.0)) throw RatingError("tau must be non-negative");
  if (!(draw_probability >= 0.0 && draw_probability < 1.0)) {
    throw RatingError("draw_probability must be in [0, 1)");
  }
}

TrueSkillParams TrueSkillParams::FromJson(const nlohmann::json& j) {
  TrueSkillParams p;
  if (j.is_null()) return p;
  bool beta_set = false;
  for (const auto& [key, value] : j.items()) {
    if (key == "mu0") p.mu0 = value.get<double>();
    else if (key == "sigma0") p.sigma0 = value.get<double>();
    else if (key == "beta") { p.beta = value.get<double>(); beta_set = true; }
    else if (key == "tau") p.tau = value.get<double>();
    else if (key == "draw_probability") p.draw_probability = value.get<double>();
    else throw InvalidConfigError("unknown trueskill key '" + key + "'");
  }
  if (!beta_set) p.beta = p.sigma0 / 2.0;
  try {
    p.Validate();
  } catch (const RatingError& e) {
    throw InvalidConfigError(e.what());
  }
  return p;
}

nlohmann::json TrueSkillParams::ToJson() const {
  return {{"mu0", mu0}, {"sigma0", sigma0}, {"beta", beta}, {"tau", tau},
          {"draw_probability", draw_probability}};
}

double VWin(double t, double eps) {
  const double x = t - eps;
  const double cdf = NormalCdf(x);
  // Far in the lower tail pdf/cdf approaches -x.
  if (cdf < 1e-300) return -x;
  return NormalPdf(x) / cdf;
}

double WWin(double t, double eps) {
  const double v = VWin(t, eps);
  return v * (v + t - eps);
}

double VDraw(double t, double eps) {
  if (eps < kTinyWindow) return -t;
  const double num = NormalPdf(-eps - t) - NormalPdf(eps - t);
  const double den = NormalCdf(eps - t) - NormalCdf(-eps - t);
  if (den < 1e-300) return t < 0 ? -t - eps : -t + eps;
  return num / den;
}

double WDraw(double t, double eps) {
  if (eps < kTinyWindow) return 1.0;
  const double den = NormalCdf(eps - t) - NormalCdf(-eps - t);
  const double v = VDraw(t, eps);
  if (den < 1e-300) return 1.0;
  return v * v + ((eps - t) * NormalPdf(eps - t) + (eps + t) * NormalPdf(-eps - t)) / den;
}

std::pair<Rating, Rating> UpdateOneVsOne(const Rating& a, const Rating& b,
                                         MatchResult result,
                                         const TrueSkillParams& params) {
  params.Validate();
  const double var_a = a.sigma * a.sigma + params.tau * params.tau;
  const double var_b = b.sigma * b.sigma + params.tau * params.tau;
  const double c2 = 2.0 * params.beta * params.beta + var_a + var_b;
  const double c = std::sqrt(c2);
  const double eps = params.DrawMargin() / c;

  Rating na, nb;
  if (result == MatchResult::kDraw) {
    const double t = (a.mu - b.mu) / c;
    const double v = VDraw(t, eps);
    const double w = WDraw(t, eps);
    na.mu = a.mu + var_a / c * v;
    nb.mu = b.mu - var_b / c * v;
    na.sigma = std::sqrt(var_a * (1.0 - var_a / c2 * w));
    nb.sigma = std::sqrt(var_b * (1.0 - var_b / c2 * w));
  } else {
    const bool a_wins = result == MatchResult::kAWins;
    const Rating& win = a_wins ? a : b;
    const Rating& lose = a_wins ? b : a;
    const double var_w = a_wins ? var_a : var_b;
    const double var_l = a_wins ? var_b : var_a;
    const double t = (win.mu - lose.mu) / c;
    const double v = VWin(t, eps);
    const double w = WWin(t, eps);
    Rating nw{win.mu + var_w / c * v, std::sqrt(var_w * (1.0 - var_w / c2 * w))};
    Rating nl{lose.mu - var_l / c * v, std::sqrt(var_l * (1.0 - var_l / c2 * w))};
    na = a_wins ? nw : nl;
    nb = a_wins ? nl : nw;
  }
  for (double x : {na.mu, na.sigma, nb.mu, nb.sigma}) {
    if (!std::isfinite(x) || x < -1e12) {
      throw RatingError("non-finite rating update; check beta/tau/draw_probability");
    }
  }
  if (!(na.sigma > 0.0) || !(nb.sigma > 0.0)) {
    throw RatingError("rating variance collapsed to zero");
  }
  return {na, nb};
}

}  // namespace arena
