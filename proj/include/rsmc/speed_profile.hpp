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

#pragma once

#include <optional>
#include <vector>

namespace rsmc {

struct SpeedSample {
  double time = 0.0;
  double speed = 0.0;
};

// Sampled transfer speed over a direct link (points moved per unit time).
// Times are nonnegative and strictly increasing; speeds are nonnegative.
class SpeedProfile {
 public:
  // Throws InvalidProfileError when the samples break the invariants or are
  // empty.
  explicit SpeedProfile(std::vector<SpeedSample> samples);

  const std::vector<SpeedSample>& samples() const { return samples_; }

 private:
  std::vector<SpeedSample> samples_;
};

struct SpeedStats {
  double shortest_transmission_time = 0.0;   // first sample with speed > 0
  std::optional<double> critical_moment;     // first sample with speed >= delta
};

// Throws AllZeroProfileError if no sample has positive speed and
// InputError unless delta > 0.
SpeedStats speed_profile_stats(const SpeedProfile& profile, double delta);

}  // namespace rsmc
