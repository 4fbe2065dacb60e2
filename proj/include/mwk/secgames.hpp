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

#include "mwk/commit.hpp"

namespace mw {

/// Commitment security games, runnable on the tiny group where the
/// discrete log is brute-forceable. Trials are independently seeded so a
/// game and its reduction see identical adversary randomness per trial.

struct GameResult {
    uint64_t trials = 0;
    uint64_t successes = 0;
    double success_rate = 0.0;
};

/// Binding adversary: produces two openings it claims collide.
struct BindingPair {
    Opening first;
    Opening second;
};
using BindingAdversary = std::function<BindingPair(const GroupParams&, Rng&)>;

/// Hiding adversary: chooses two candidate values, then guesses which
/// one a commitment hides.
struct HidingAdversary {
    std::function<std::pair<Scalar, Scalar>(const GroupParams&, Rng&)> choose;
    std::function<int(const Commitment&, const GroupParams&, Rng&)> guess;
};

/// Success: Com(v1,r1) == Com(v2,r2) and v1 != v2.
GameResult game_binding(const GroupParams& params, const BindingAdversary& adv, uint64_t trials,
                        uint64_t seed);

/// Runs the adversary once; on a double opening returns
/// (r1 - r2) * (v2 - v1)^-1 — the discrete log of H base G — and failure
/// otherwise. (The division by v2 - v1 cannot hit zero: success requires
/// v1 != v2.)
std::optional<Scalar> inversor_dlog(const GroupParams& params, const BindingAdversary& adv,
                                    Rng& rng);

/// Dlog game harness: success iff the inversor returns x with x.G == H.
GameResult game_dlog(const GroupParams& params, const BindingAdversary& adv, uint64_t trials,
                     uint64_t seed);

/// Hiding game per the standard picture: adversary picks (v0, v1), the
/// challenger commits v_b under fresh randomness, the adversary guesses
/// b. Throws std::invalid_argument if the adversary returns v0 == v1.
GameResult game_hiding(const GroupParams& params, const HidingAdversary& adv, uint64_t trials,
                       uint64_t seed);

// Canned adversaries.
BindingAdversary honest_binding_adversary();   // returns equal openings; never wins
BindingAdversary random_binding_adversary();   // independent random openings
/// Tiny backend only: recovers dlog(H base G) by exhaustive search and
/// forges r2 = r1 + (v1 - v2) * dlog. Wins every trial.
BindingAdversary breaking_binding_adversary();

HidingAdversary random_guess_hiding_adversary();
HidingAdversary constant_hiding_adversary(int bit);
/// Computationally unbounded: enumerates every opening of the challenge
/// commitment for both candidate values. Tiny backend only (refused on
/// the curve).
HidingAdversary exhaustive_hiding_adversary();

}  // namespace mw
