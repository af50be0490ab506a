/*
   Copyright 2026 The charp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHARP_RNG_HPP
#define CHARP_RNG_HPP

#include <cstdint>
#include <string>

namespace charp {

/// Deterministic splittable counter-based generator (SplitMix64 core).
/// Identical seeds yield identical streams on every platform; children
/// split off by label are independent of draws from the parent, so suite
/// case ordering is reproducible regardless of evaluation order.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream), counter_(0) {}

    std::uint64_t next();
    /// Uniform value in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform value in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi);

    /// Independent child stream derived from a label and index.
    Rng split(const std::string& label, std::uint64_t index = 0) const;

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_;
};

}  // namespace charp

#endif
