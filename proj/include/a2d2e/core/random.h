/*
 * Copyright 2026 The A2D2E Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef A2D2E_CORE_RANDOM_H_
#define A2D2E_CORE_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace a2d2e {

using Engine = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Child seed for a numbered stream. Streams derived from distinct (parent,
// index) pairs are statistically independent.
constexpr std::uint64_t DeriveSeed(std::uint64_t parent, std::uint64_t index) {
  return Mix64(Mix64(parent) ^ Mix64(index + 0x632be59bd9b4e019ULL));
}

// Child seed for a named stream ("sampling", "noise", ...).
constexpr std::uint64_t DeriveSeed(std::uint64_t parent,
                                   std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (const char c : label) {
    h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  }
  return DeriveSeed(parent, h);
}

inline Engine MakeEngine(std::uint64_t seed) { return Engine(Mix64(seed)); }

}  // namespace a2d2e

#endif  // A2D2E_CORE_RANDOM_H_
