/*
   Copyright 2026 The twistor authors

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

#ifndef TWISTOR_EXACT_RANDOM_HPP
#define TWISTOR_EXACT_RANDOM_HPP

#include <cstdint>
#include <random>

#include "twistor/exact/scalar.hpp"

namespace twistor {

/// Seeded generator with platform-independent output (mt19937_64 with a
/// plain modulo reduction instead of the implementation-defined distributions).
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    /// Uniform-ish integer in [lo, hi].
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(long num, long den) { return uniform(0, den - 1) < num; }
    Scalar scalar(long range) { return Scalar(uniform(-range, range)); }
    Scalar gaussian(long range) { return Scalar(mpq_class(uniform(-range, range)), mpq_class(uniform(-range, range))); }
    std::uint64_t next() { return gen_(); }

   private:
    std::mt19937_64 gen_;
};

}  // namespace twistor

#endif
