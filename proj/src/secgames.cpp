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

#include "mwk/secgames.hpp"

#include <memory>

namespace mw {

namespace {

uint64_t trial_seed(uint64_t base, uint64_t trial) {
    ByteWriter w;
    w.str("mwkit/v1/game-trial");
    w.u64(base);
    w.u64(trial);
    Bytes d = sha256(w.bytes());
    uint64_t s = 0;
    for (int i = 0; i < 8; ++i) s = s << 8 | d[i];
    return s;
}

GameResult finish(uint64_t trials, uint64_t successes) {
    return GameResult{trials, successes,
                      trials == 0 ? 0.0 : static_cast<double>(successes) / trials};
}

bool binding_success(const GroupParams& g, const BindingPair& pair) {
    return commit(g, pair.first).point == commit(g, pair.second).point &&
           !(pair.first.v == pair.second.v);
}

}  // namespace

GameResult game_binding(const GroupParams& params, const BindingAdversary& adv, uint64_t trials,
                        uint64_t seed) {
    uint64_t wins = 0;
    for (uint64_t t = 0; t < trials; ++t) {
        Rng rng(trial_seed(seed, t));
        if (binding_success(params, adv(params, rng))) wins++;
    }
    return finish(trials, wins);
}

std::optional<Scalar> inversor_dlog(const GroupParams& params, const BindingAdversary& adv,
                                    Rng& rng) {
    BindingPair pair = adv(params, rng);
    if (!binding_success(params, pair)) return std::nullopt;
    Scalar dr = s_sub(params, pair.first.r, pair.second.r);   // r1 - r2
    Scalar dv = s_sub(params, pair.second.v, pair.first.v);   // v2 - v1, nonzero here
    return s_mul(params, dr, s_inv(params, dv));
}

GameResult game_dlog(const GroupParams& params, const BindingAdversary& adv, uint64_t trials,
                     uint64_t seed) {
    uint64_t wins = 0;
    for (uint64_t t = 0; t < trials; ++t) {
        Rng rng(trial_seed(seed, t));
        auto y = inversor_dlog(params, adv, rng);
        if (!y) continue;  // adversary failed, so the inversor fails
        if (scalar_mul(params, *y, params.G) == params.H) wins++;
    }
    return finish(trials, wins);
}

GameResult game_hiding(const GroupParams& params, const HidingAdversary& adv, uint64_t trials,
                       uint64_t seed) {
    uint64_t wins = 0;
    for (uint64_t t = 0; t < trials; ++t) {
        Rng rng(trial_seed(seed, t));
        auto [v0, v1] = adv.choose(params, rng);
        if (v0 == v1) throw std::invalid_argument("hiding adversary must pick distinct values");
        int b = static_cast<int>(rng.uniform(2));
        Scalar r = random_scalar(params, rng);
        Commitment com = commit(params, Opening{b == 0 ? v0 : v1, r});
        int guess = adv.guess(com, params, rng);
        if (guess == b) wins++;
    }
    return finish(trials, wins);
}

BindingAdversary honest_binding_adversary() {
    return [](const GroupParams& g, Rng& rng) {
        Opening o{random_scalar(g, rng), random_scalar(g, rng)};
        return BindingPair{o, o};  // v1 == v2 fails the win condition
    };
}

BindingAdversary random_binding_adversary() {
    return [](const GroupParams& g, Rng& rng) {
        return BindingPair{Opening{random_scalar(g, rng), random_scalar(g, rng)},
                           Opening{random_scalar(g, rng), random_scalar(g, rng)}};
    };
}

BindingAdversary breaking_binding_adversary() {
    return [](const GroupParams& g, Rng& rng) {
        auto dlog = brute_force_dlog(g, g.H, g.G);  // throws on the curve backend
        if (!dlog) throw GroupError("H has no discrete log base G");
        Scalar v1 = random_scalar(g, rng);
        Scalar v2 = random_scalar(g, rng);
        while (v2 == v1) v2 = random_scalar(g, rng);
        Scalar r1 = random_scalar(g, rng);
        // r2 = r1 + (v1 - v2) * dlog keeps r2.G + v2.H == r1.G + v1.H.
        Scalar r2 = s_add(g, r1, s_mul(g, s_sub(g, v1, v2), *dlog));
        return BindingPair{Opening{v1, r1}, Opening{v2, r2}};
    };
}

HidingAdversary random_guess_hiding_adversary() {
    HidingAdversary adv;
    adv.choose = [](const GroupParams& g, Rng& rng) {
        Scalar v0 = random_scalar(g, rng);
        Scalar v1 = random_scalar(g, rng);
        while (v1 == v0) v1 = random_scalar(g, rng);
        return std::make_pair(v0, v1);
    };
    adv.guess = [](const Commitment&, const GroupParams&, Rng& rng) {
        return static_cast<int>(rng.uniform(2));
    };
    return adv;
}

HidingAdversary constant_hiding_adversary(int bit) {
    HidingAdversary adv = random_guess_hiding_adversary();
    adv.guess = [bit](const Commitment&, const GroupParams&, Rng&) { return bit; };
    return adv;
}

HidingAdversary exhaustive_hiding_adversary() {
    // choose and guess share the picked candidates through the closure.
    auto picked = std::make_shared<std::pair<Scalar, Scalar>>();
    HidingAdversary adv;
    adv.choose = [picked](const GroupParams& g, Rng& rng) {
        if (g.backend != Backend::tiny)
            throw GroupError("unbounded adversary only runs on the tiny backend");
        Scalar v0 = random_scalar(g, rng);
        Scalar v1 = random_scalar(g, rng);
        while (v1 == v0) v1 = random_scalar(g, rng);
        *picked = {v0, v1};
        return *picked;
    };
    adv.guess = [picked](const Commitment& com, const GroupParams& g, Rng& rng) {
        // Brute force every blinding factor for both candidates. Each
        // value opens com for exactly as many r as the other, so the
        // counts tie and the coin is all that is left.
        uint64_t hits0 = 0, hits1 = 0;
        for (BigInt r = 0; r < g.n; ++r) {
            if (commit(g, Opening{picked->first, Scalar{r}}).point == com.point) hits0++;
            if (commit(g, Opening{picked->second, Scalar{r}}).point == com.point) hits1++;
        }
        if (hits0 > hits1) return 0;
        if (hits1 > hits0) return 1;
        return static_cast<int>(rng.uniform(2));
    };
    return adv;
}

}  // namespace mw
