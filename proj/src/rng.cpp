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

#include "mwk/rng.hpp"

namespace mw {

uint64_t Rng::uniform(uint64_t bound) {
    if (bound == 0) return 0;
    // Largest multiple of bound that fits in 64 bits; reject above it.
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % bound;
}

bool Rng::coin(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    // 53-bit mantissa draw, same everywhere.
    double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
}

}  // namespace mw
