// Copyright 2026 The rsmc Authors
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

#include "rsmc/speed_profile.hpp"

#include <cmath>

#include "rsmc/errors.hpp"

namespace rsmc {

SpeedProfile::SpeedProfile(std::vector<SpeedSample> samples)
    : samples_(std::move(samples)) {
  if (samples_.empty()) throw InvalidProfileError("speed profile is empty");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    if (!(s.time >= 0.0) || !std::isfinite(s.time)) {
      throw InvalidProfileError("sample " + std::to_string(i) +
                                " has a negative or non-finite time");
    }
    if (!(s.speed >= 0.0)) {
      throw InvalidProfileError("sample " + std::to_string(i) +
                                " has a negative speed");
    }
    if (i > 0 && !(samples_[i - 1].time < s.time)) {
      throw InvalidProfileError("sample times must be strictly increasing");
    }
  }
}

SpeedStats speed_profile_stats(const SpeedProfile& profile, double delta) {
  if (!(delta > 0.0)) {
    throw InputError("speed threshold delta must be positive");
  }
  SpeedStats stats;
  bool moving = false;
  for (const SpeedSample& s : profile.samples()) {
    if (!moving && s.speed > 0.0) {
      stats.shortest_transmission_time = s.time;
      moving = true;
    }
    if (s.speed >= delta) {
      stats.critical_moment = s.time;
      break;
    }
  }
  if (!moving) {
    throw AllZeroProfileError("no sample has a positive transfer speed");
  }
  return stats;
}

}  // namespace rsmc
