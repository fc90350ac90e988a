// Copyright 2026 The paraeval Authors.
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

// Seeded randomness shared by sampling and perturbations. The generator is
// std::mt19937_64, whose output sequence is fixed by the C++ standard, and
// bounded draws use plain rejection sampling rather than
// std::uniform_int_distribution (whose algorithm is implementation-defined),
// so a seed selects the same subset on every platform.

#ifndef PARAEVAL_RNG_HPP_
#define PARAEVAL_RNG_HPP_

#include <cstdint>
#include <limits>
#include <random>

namespace paraeval {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound). Rejects draws from the final partial block of
  // 2^64 so that `x % bound` is unbiased.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x > limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace paraeval

#endif  // PARAEVAL_RNG_HPP_
