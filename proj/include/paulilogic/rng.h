// Copyright 2026 The paulilogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAULILOGIC_RNG_H
#define PAULILOGIC_RNG_H

#include <cstdint>
#include <limits>

namespace paulilogic {

/// SplitMix64. Small state, so a fresh stream per run is cheap, and the
/// output sequence is fixed by the algorithm (unlike std:: distributions).
class SplitMix64 {
   public:
    using result_type = uint64_t;

    explicit SplitMix64(uint64_t seed) : state_(seed) {
    }

    /// Independent stream for `(seed, index)`; the basis of per-run streams.
    static SplitMix64 stream(uint64_t seed, uint64_t index) {
        SplitMix64 mixer(seed ^ (index * 0xD1B54A32D192ED03ull));
        mixer();
        return SplitMix64(mixer() ^ index);
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<uint64_t>::max();
    }

    uint64_t operator()() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 bits of resolution.
    double uniform() {
        return double((*this)() >> 11) * 0x1.0p-53;
    }
    bool coin() {
        return (*this)() >> 63;
    }
    /// Uniform integer in [0, bound). Bound must be positive.
    uint64_t below(uint64_t bound) {
        // Lemire's multiply-shift; the bias is below 2^-64 * bound.
        return uint64_t((__uint128_t((*this)()) * bound) >> 64);
    }

   private:
    uint64_t state_;
};

}  // namespace paulilogic

#endif
