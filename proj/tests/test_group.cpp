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

#include "oracle.hpp"

using namespace mw;

TEST_CASE("tiny setup matches the configured constants") {
    GroupParams g = oracle::tiny_params();
    CHECK(g.n == 23);
    CHECK(oracle::residue(g.G) == 5);
    CHECK(oracle::residue(g.H) == 7);
    CHECK(oracle::residue(g.J) == 11);
    // Primality and non-identity checked by direct arithmetic.
    for (uint64_t d = 2; d * d <= 23; ++d) CHECK(23 % d != 0);
    CHECK(oracle::residue(g.G) % 23 != 0);
    CHECK(oracle::residue(g.H) % 23 != 0);
    CHECK(oracle::residue(g.J) % 23 != 0);
}

TEST_CASE("setup is deterministic") {
    GroupParams a = setup(Backend::tiny, 1, oracle::tiny23());
    GroupParams b = setup(Backend::tiny, 1, oracle::tiny23());
    CHECK(a.n == b.n);
    CHECK(a.G == b.G);
    CHECK(a.H == b.H);
    CHECK(a.J == b.J);

    GroupParams c = setup(Backend::curve, 7);
    GroupParams d = setup(Backend::curve, 8);  // seed has nothing to vary
    CHECK(c.G == d.G);
    CHECK(c.H == d.H);
    CHECK(c.J == d.J);
}

TEST_CASE("setup rejects bad tiny configs") {
    CHECK_THROWS_AS(setup(Backend::tiny, 1, TinyConstants{22, 5, 7, 11}), GroupError);
    CHECK_THROWS_AS(setup(Backend::tiny, 1, TinyConstants{21, 5, 7, 11}), GroupError);
    CHECK_THROWS_AS(setup(Backend::tiny, 1, TinyConstants{23, 0, 7, 11}), GroupError);
    CHECK_THROWS_AS(setup(Backend::tiny, 1, TinyConstants{23, 5, 5, 11}), GroupError);
}

TEST_CASE("tiny scalar_mul matches modular arithmetic") {
    GroupParams g = oracle::tiny_params();
    CHECK(oracle::residue(scalar_mul(g, oracle::sc(g, 3), g.G)) == oracle::mod_mul(3, 5, 23));
    CHECK(oracle::residue(scalar_mul(g, oracle::sc(g, 3), g.G)) == 15);
}

TEST_CASE("0.P and n.P are the identity") {
    for (auto backend : {Backend::tiny, Backend::curve}) {
        GroupParams g = backend == Backend::tiny ? oracle::tiny_params() : setup(backend, 0);
        Rng rng(11);
        GroupElement p = scalar_mul(g, random_scalar(g, rng), g.G);
        CHECK(is_identity(g, scalar_mul(g, Scalar{0}, p)));
        CHECK(is_identity(g, scalar_mul(g, Scalar{g.n}, p)));
    }
}

TEST_CASE("scalar multiplication distributes over addition") {
    for (auto backend : {Backend::tiny, Backend::curve}) {
        GroupParams g = backend == Backend::tiny ? oracle::tiny_params() : setup(backend, 0);
        size_t rounds = backend == Backend::tiny ? 1000 : 150;
        Rng rng(2024);
        for (size_t i = 0; i < rounds; ++i) {
            Scalar k1 = random_scalar(g, rng);
            Scalar k2 = random_scalar(g, rng);
            GroupElement p = scalar_mul(g, random_scalar(g, rng), g.G);
            GroupElement lhs = scalar_mul(g, s_add(g, k1, k2), p);
            GroupElement rhs = add(g, scalar_mul(g, k1, p), scalar_mul(g, k2, p));
            REQUIRE(lhs == rhs);
            GroupElement assoc = scalar_mul(g, k1, scalar_mul(g, k2, p));
            REQUIRE(assoc == scalar_mul(g, s_mul(g, k1, k2), p));
        }
    }
}

TEST_CASE("encode/decode round-trips bit-exactly") {
    GroupParams g = setup(Backend::curve, 0);
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        GroupElement p = scalar_mul(g, random_scalar(g, rng), g.G);
        CHECK(decode_element(g, encode(g, p)) == p);
    }
    CHECK(decode_element(g, encode(g, identity(g))) == identity(g));

    GroupParams t = oracle::tiny_params();
    for (uint64_t x = 0; x < 23; ++x) {
        GroupElement p{false, x, 0};
        CHECK(decode_element(t, encode(t, p)) == p);
    }
}

TEST_CASE("scalar codec round-trips and rejects out-of-range") {
    GroupParams g = oracle::tiny_params();
    for (uint64_t v = 0; v < 23; ++v)
        CHECK(decode_scalar(g, encode(g, oracle::sc(g, v))) == oracle::sc(g, v));
    Bytes over = encode(g, Scalar{22});
    over[7] = 23;  // == n
    CHECK_THROWS_AS(decode_scalar(g, over), GroupError);
}

TEST_CASE("brute_force_dlog recovers exponents on the tiny backend") {
    GroupParams g = oracle::tiny_params();
    auto x = brute_force_dlog(g, GroupElement{false, 15, 0}, g.G);
    REQUIRE(x.has_value());
    CHECK(x->v == 3);
    CHECK(x->v == oracle::slow_dlog(15, 5, 23));

    // Whole-range inversion.
    for (uint64_t k = 0; k < 23; ++k) {
        auto r = brute_force_dlog(g, scalar_mul(g, oracle::sc(g, k), g.G), g.G);
        REQUIRE(r.has_value());
        CHECK(r->v == k);
    }
}

TEST_CASE("brute_force_dlog identity-base cases") {
    GroupParams g = oracle::tiny_params();
    auto zero = brute_force_dlog(g, identity(g), identity(g));
    REQUIRE(zero.has_value());
    CHECK(zero->v == 0);
    CHECK_FALSE(brute_force_dlog(g, g.G, identity(g)).has_value());
}

TEST_CASE("brute_force_dlog is forbidden on the curve backend") {
    GroupParams g = setup(Backend::curve, 0);
    CHECK_THROWS_AS(brute_force_dlog(g, g.H, g.G), GroupError);
}

TEST_CASE("hash_to_scalar reduces mod n and is deterministic") {
    GroupParams g = oracle::tiny_params();
    Bytes msg{1, 2, 3};
    Scalar a = hash_to_scalar(g, msg);
    Scalar b = hash_to_scalar(g, msg);
    CHECK(a == b);
    CHECK(a.v < g.n);
    CHECK(!(hash_to_scalar(g, Bytes{1, 2, 4}) == a));
}

TEST_CASE("scalar field arithmetic") {
    GroupParams g = oracle::tiny_params();
    CHECK(s_add(g, oracle::sc(g, 20), oracle::sc(g, 5)).v == 2);
    CHECK(s_sub(g, oracle::sc(g, 3), oracle::sc(g, 5)).v == 21);
    CHECK(s_mul(g, oracle::sc(g, 6), oracle::sc(g, 4)).v == 1);
    for (uint64_t v = 1; v < 23; ++v)
        CHECK(s_mul(g, oracle::sc(g, v), s_inv(g, oracle::sc(g, v))).v == 1);
    CHECK_THROWS_AS(s_inv(g, Scalar{0}), GroupError);
}
