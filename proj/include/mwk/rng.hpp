// Copyright 2026 The mwkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace mw {

/// Deterministic RNG. All randomized draws go through this wrapper rather
/// than std distributions, whose output is not pinned by the standard; a
/// given seed must produce the same stream on every build.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, bound) by rejection, exact.
    uint64_t uniform(uint64_t bound);

    /// Uniform in [lo, hi] inclusive.
    uint64_t range(uint64_t lo, uint64_t hi) { return lo + uniform(hi - lo + 1); }

    /// Bernoulli(p) coin, p in [0,1].
    bool coin(double p);

    /// Derive an independent child seed (for per-trial sub-streams).
    uint64_t fork_seed() { return next_u64(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace mw
