// Copyright 2026 The Hanabi Lab Authors.
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

#ifndef HANABI_RNG_H_
#define HANABI_RNG_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

namespace hanabi {

// Version tag written into replay headers. Bump whenever SplitMix64, the
// bounded-integer reduction or the shuffle order changes.
inline constexpr std::string_view kPrngVersion = "splitmix64-fy-v1";

// SplitMix64 (Steele, Lea & Flood). The state is a plain counter advanced
// by the golden-ratio increment; each output is a bijective mix of the
// counter, so the n-th draw depends only on (seed, n).
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed = 0) : counter_(seed) {}

  uint64_t Next() {
    counter_ += 0x9e3779b97f4a7c15ULL;
    return Mix(counter_);
  }

  // Uniform integer in [0, bound). Rejection sampling on the low end of the
  // 64-bit range removes modulo bias; bound must be positive.
  uint64_t Uniform(uint64_t bound) {
    const uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const uint64_t x = Next();
      if (x >= threshold) return x % bound;
    }
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double UniformDouble() { return double(Next() >> 11) * 0x1.0p-53; }

  uint64_t counter() const { return counter_; }

  static constexpr uint64_t Mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  uint64_t counter_;
};

// Fisher-Yates, high to low: for i = n-1 .. 1 swap a[i] with a[Uniform(i+1)].
template <class T>
void Shuffle(std::span<T> items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = rng.Uniform(i);
    std::swap(items[i - 1], items[j]);
  }
}

// Derives an independent stream seed from (base, index). Used wherever a
// family of games needs non-overlapping seeds.
inline uint64_t DeriveSeed(uint64_t base, uint64_t index) {
  return SplitMix64::Mix(base ^ SplitMix64::Mix(index + 0x632be59bd9b4e019ULL));
}

}  // namespace hanabi

#endif  // HANABI_RNG_H_
