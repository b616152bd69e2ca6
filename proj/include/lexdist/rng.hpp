// Copyright 2026 The lexdist Authors
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

#include <cstdint>
#include <string_view>

namespace lexdist::rng {

// Counter-addressed randomness built on SplitMix64 (Steele, Lea &
// Flood, 2014). Every value is a pure function of (key, counter), so
// draws can be made in any order, skipped, or parallelized without
// changing any other draw; golden outputs survive refactors. The exact
// scheme, reproducible in any language:
//
//   mix64(z): z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//             z ^= z >> 27; z *= 0x94D049BB133111EB;
//             z ^= z >> 31; return z            (64-bit wrapping)
//   draw(key, n) = mix64(key + (n + 1) * 0x9E3779B97F4A7C15)
//                = the (n+1)-th output of SplitMix64 seeded with key
//   word_key(seed, word) = mix64(seed ^ fnv1a64(word bytes))
//   unit_interval(r) = (r >> 11) / 2^53, a double in [0, 1)

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// The (n+1)-th output of SplitMix64 seeded with key.
inline constexpr std::uint64_t draw(std::uint64_t key, std::uint64_t n) {
  return mix64(key + (n + 1) * kGolden);
}

// FNV-1a over the bytes of a string.
inline constexpr std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline constexpr std::uint64_t word_key(std::uint64_t seed,
                                        std::string_view word) {
  return mix64(seed ^ fnv1a64(word));
}

// Maps a draw onto [0, 1) using the top 53 bits, which a double holds
// exactly on every IEEE-754 platform.
inline double unit_interval(std::uint64_t r) {
  return static_cast<double>(r >> 11) * 0x1.0p-53;
}

}  // namespace lexdist::rng
