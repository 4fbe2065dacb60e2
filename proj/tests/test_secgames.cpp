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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwk/secgames.hpp"

#include "oracle.hpp"

using namespace mw;

TEST_CASE("the honest adversary never wins the binding game") {
    GroupParams g = oracle::tiny_params();
    GameResult r = game_binding(g, honest_binding_adversary(), 200, 1);
    CHECK(r.trials == 200);
    CHECK(r.successes == 0);
    CHECK(r.success_rate == 0.0);
}

TEST_CASE("the breaking adversary always wins on the tiny backend") {
    GroupParams g = oracle::tiny_params();
    GameResult r = game_binding(g, breaking_binding_adversary(), 100, 2);
    CHECK(r.successes == 100);
    CHECK(r.success_rate == 1.0);
}

TEST_CASE("the breaking adversary cannot run on the curve backend") {
    GroupParams g = setup(Backend::curve, 0);
    CHECK_THROWS_AS(game_binding(g, breaking_binding_adversary(), 1, 3), GroupError);
}

TEST_CASE("random openings never collide on the curve") {
    GroupParams g = setup(Backend::curve, 0);
    GameResult r = game_binding(g, random_binding_adversary(), 1000, 4);
    CHECK(r.successes == 0);
}

TEST_CASE("the inversor recovers the discrete log of H") {
    GroupParams g = oracle::tiny_params();
    Rng rng(5);
    auto x = inversor_dlog(g, breaking_binding_adversary(), rng);
    REQUIRE(x.has_value());
    CHECK(scalar_mul(g, *x, g.G) == g.H);
    auto expected = brute_force_dlog(g, g.H, g.G);
    REQUIRE(expected.has_value());
    CHECK(*x == *expected);
}

TEST_CASE("a failing adversary makes the inversor fail") {
    GroupParams g = oracle::tiny_params();
    Rng rng(6);
    CHECK_FALSE(inversor_dlog(g, honest_binding_adversary(), rng).has_value());
    GameResult r = game_dlog(g, honest_binding_adversary(), 50, 7);
    CHECK(r.successes == 0);
}

TEST_CASE("inversor success rate equals adversary success rate, exactly") {
    GroupParams g = oracle::tiny_params();
    // A flaky adversary: breaks only when its coin lands heads, so both
    // games see a non-trivial, identical success pattern per seed.
    BindingAdversary flaky = [](const GroupParams& gp, Rng& rng) {
        bool lucky = rng.coin(0.5);
        if (!lucky) {
            Opening o{random_scalar(gp, rng), random_scalar(gp, rng)};
            return BindingPair{o, o};
        }
        return breaking_binding_adversary()(gp, rng);
    };
    GameResult adv = game_binding(g, flaky, 200, 8);
    GameResult inv = game_dlog(g, flaky, 200, 8);
    CHECK(adv.successes == inv.successes);
    CHECK(adv.success_rate == inv.success_rate);
    CHECK(adv.successes > 0);
    CHECK(adv.successes < 200);
}

TEST_CASE("the reduction identity holds algebraically whenever binding succeeds") {
    GroupParams g = oracle::tiny_params();
    for (uint64_t t = 0; t < 50; ++t) {
        Rng rng(1000 + t);
        BindingPair pair = breaking_binding_adversary()(g, rng);
        REQUIRE(commit(g, pair.first).point == commit(g, pair.second).point);
        Scalar x = s_mul(g, s_sub(g, pair.first.r, pair.second.r),
                         s_inv(g, s_sub(g, pair.second.v, pair.first.v)));
        REQUIRE(scalar_mul(g, x, g.G) == g.H);
    }
}

TEST_CASE("random guessing wins the hiding game half the time") {
    GroupParams g = oracle::tiny_params();
    GameResult r = game_hiding(g, random_guess_hiding_adversary(), 10000, 9);
    CHECK(r.success_rate > 0.48);
    CHECK(r.success_rate < 0.52);
}

TEST_CASE("the unbounded adversary cannot beat one half on the tiny group") {
    GroupParams g = oracle::tiny_params();
    GameResult r = game_hiding(g, exhaustive_hiding_adversary(), 10000, 10);
    CHECK(r.success_rate > 0.48);
    CHECK(r.success_rate < 0.52);
}

TEST_CASE("the unbounded adversary refuses the curve backend") {
    GroupParams g = setup(Backend::curve, 0);
    CHECK_THROWS_AS(game_hiding(g, exhaustive_hiding_adversary(), 1, 11), GroupError);
}

TEST_CASE("a constant guesser also sits at one half") {
    GroupParams g = oracle::tiny_params();
    GameResult r = game_hiding(g, constant_hiding_adversary(0), 10000, 12);
    CHECK(r.success_rate > 0.48);
    CHECK(r.success_rate < 0.52);
}

TEST_CASE("equal candidate values are rejected") {
    GroupParams g = oracle::tiny_params();
    HidingAdversary bad = random_guess_hiding_adversary();
    bad.choose = [](const GroupParams&, Rng&) {
        return std::make_pair(Scalar{3}, Scalar{3});
    };
    CHECK_THROWS_AS(game_hiding(g, bad, 1, 13), std::invalid_argument);
}
