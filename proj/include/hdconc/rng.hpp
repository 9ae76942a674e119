// Copyright 2026 The hdconc Authors.
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

#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace hdconc {

/// 64-bit seed. Strong type so seeds are never confused with counts.
struct RandomSeed {
  std::uint64_t value = 0;

  friend bool operator==(RandomSeed, RandomSeed) = default;
};

/// Derives the seed of substream `index`. For a fixed parent the map is a
/// bijection of (parent + (index+1)*golden) through the splitmix64 finalizer,
/// hence injective in `index` over the whole 64-bit range.
RandomSeed child_seed(RandomSeed seed, std::uint64_t index) noexcept;

/// Draws a seed from OS entropy. Only used when the caller supplied none.
RandomSeed entropy_seed();

/// Philox4x32-10 counter-based generator (Salmon et al. 2011).
///
/// The key is the 64-bit seed, the 128-bit counter starts at zero. Satisfies
/// UniformRandomBitGenerator with 64-bit output; each Philox block yields two
/// outputs.
class Philox {
 public:
  using result_type = std::uint64_t;

  explicit Philox(RandomSeed seed) noexcept;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform double on [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  /// Standard normal by the Marsaglia polar method. Fixed per release so
  /// seeds reproduce across platforms.
  double normal() noexcept;

  /// Raw block function, exposed for known-answer tests.
  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) noexcept;

 private:
  void refill() noexcept;

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_{0, 0, 0, 0};
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace hdconc
