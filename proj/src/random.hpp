// Copyright 2026 The horoflow Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace horoflow {

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, Weyl increment
/// 0x9E3779B97F4A7C15 followed by the variant-13 finalizer. Every draw is a
/// pure function of (seed, index), so random test corpora reproduce across
/// platforms and languages. Floating draws use only the top 53 bits.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  constexpr double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  /// -1 or +1 with equal probability.
  constexpr int sign() noexcept { return (next() >> 63) ? -1 : 1; }

  /// Independent stream for a labelled sub-task.
  constexpr SplitMix64 fork(std::uint64_t label) noexcept {
    SplitMix64 child(next() ^ (label * 0xD1B54A32D192ED03ull));
    child.next();
    return child;
  }

  constexpr std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace horoflow
