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

#include <algorithm>

#include "oracle.hpp"

using namespace mw;

TEST_CASE("tiny commitment matches modular arithmetic") {
    GroupParams g = oracle::tiny_params();
    // 4*G + 3*H = 4*5 + 3*7 = 41 = 18 (mod 23)
    Commitment c = commit(g, oracle::opening(g, 3, 4));
    CHECK(oracle::residue(c.point) ==
          oracle::mod_add(oracle::mod_mul(4, 5, 23), oracle::mod_mul(3, 7, 23), 23));
    CHECK(oracle::residue(c.point) == 18);
    CHECK(c.mode == CommitMode::plain);
}

TEST_CASE("commit(0,0) is the identity") {
    for (auto backend : {Backend::tiny, Backend::curve}) {
        GroupParams g = backend == Backend::tiny ? oracle::tiny_params() : setup(backend, 0);
        CHECK(is_identity(g, commit(g, Opening{Scalar{0}, Scalar{0}}).point));
    }
}

TEST_CASE("homomorphism: Com(v1,r1) + Com(v2,r2) == Com(v1+v2, r1+r2)") {
    for (auto backend : {Backend::tiny, Backend::curve}) {
        GroupParams g = backend == Backend::tiny ? oracle::tiny_params() : setup(backend, 0);
        size_t rounds = backend == Backend::tiny ? 1000 : 100;
        Rng rng(7);
        for (size_t i = 0; i < rounds; ++i) {
            Opening a{random_scalar(g, rng), random_scalar(g, rng)};
            Opening b{random_scalar(g, rng), random_scalar(g, rng)};
            GroupElement lhs = add(g, commit(g, a).point, commit(g, b).point);
            Opening sum{s_add(g, a.v, b.v), s_add(g, a.r, b.r)};
            REQUIRE(lhs == commit(g, sum).point);
        }
    }
}

TEST_CASE("switch commitment agrees with an independent spelling of the formula") {
    for (auto backend : {Backend::tiny, Backend::curve}) {
        GroupParams g = backend == Backend::tiny ? oracle::tiny_params() : setup(backend, 0);
        Opening o = backend == Backend::tiny ? oracle::opening(g, 3, 4)
                                             : Opening{Scalar{3}, Scalar{4}};
        // r' = r + hash(encode(v.H + r.G) || encode(r.J)), written out again.
        GroupElement vh_rg = add(g, scalar_mul(g, o.v, g.H), scalar_mul(g, o.r, g.G));
        GroupElement rj = scalar_mul(g, o.r, g.J);
        Bytes buf = encode(g, vh_rg);
        Bytes rjb = encode(g, rj);
        buf.insert(buf.end(), rjb.begin(), rjb.end());
        Scalar r_prime = s_add(g, o.r, hash_to_scalar(g, buf));
        GroupElement expect = add(g, scalar_mul(g, r_prime, g.G), scalar_mul(g, o.v, g.H));

        Commitment c = switch_commit(g, o);
        CHECK(c.point == expect);
        CHECK(c.mode == CommitMode::switch_);
    }
}

TEST_CASE("switch commitment with a zero hash degenerates to the plain one") {
    GroupParams g = oracle::tiny_params();
    Opening o = oracle::opening(g, 3, 4);
    auto zero_hash = [](const GroupParams&, BytesView) { return Scalar{0}; };
    CHECK(switch_commit(g, o, zero_hash).point == commit(g, o).point);
}

TEST_CASE("switch commitment is deterministic") {
    GroupParams g = oracle::tiny_params();
    Opening o = oracle::opening(g, 9, 13);
    CHECK(switch_commit(g, o) == switch_commit(g, o));
}

TEST_CASE("verify_opening round-trips and rejects wrong openings") {
    GroupParams g = oracle::tiny_params();
    Commitment c = commit(g, oracle::opening(g, 3, 4));
    CHECK(verify_opening(g, c, oracle::opening(g, 3, 4)));
    CHECK_FALSE(verify_opening(g, c, oracle::opening(g, 3, 5)));

    Commitment sw = switch_commit(g, oracle::opening(g, 3, 4));
    CHECK(verify_opening(g, sw, oracle::opening(g, 3, 4)));
    CHECK_FALSE(verify_opening(g, sw, oracle::opening(g, 4, 4)));
    // The tweak moved the point, so the two modes disagree on the same
    // opening.
    CHECK_FALSE(sw.point == c.point);
}

TEST_CASE("a second opening found by brute force also verifies") {
    GroupParams g = oracle::tiny_params();
    Opening o = oracle::opening(g, 3, 4);
    Commitment c = commit(g, o);
    uint64_t dlog_h = oracle::slow_dlog(7, 5, 23);

    bool found_other = false;
    for (uint64_t v2 = 0; v2 < 23; ++v2) {
        if (v2 == 3) continue;
        // r' = r + (v - v') * dlog(H)
        uint64_t r2 =
            oracle::mod_add(4, oracle::mod_mul(oracle::mod_sub(3, v2, 23), dlog_h, 23), 23);
        if (verify_opening(g, c, oracle::opening(g, v2, r2))) found_other = true;
    }
    CHECK(found_other);
}

TEST_CASE("tiny backend is perfectly hiding: commitment images are the whole group") {
    GroupParams g = oracle::tiny_params();
    auto image = [&](uint64_t v) {
        std::vector<uint64_t> points;
        for (uint64_t r = 0; r < 23; ++r)
            points.push_back(oracle::residue(commit(g, oracle::opening(g, v, r)).point));
        std::sort(points.begin(), points.end());
        return points;
    };
    std::vector<uint64_t> whole;
    for (uint64_t x = 0; x < 23; ++x) whole.push_back(x);

    CHECK(image(0) == whole);
    CHECK(image(1) == whole);
    CHECK(image(0) == image(17));  // exact multiset equality for any two values
}

TEST_CASE("commitment_less is a strict order usable for sorting") {
    GroupParams g = oracle::tiny_params();
    Commitment a = commit(g, oracle::opening(g, 1, 2));
    Commitment b = commit(g, oracle::opening(g, 2, 5));
    CHECK_FALSE(commitment_less(a, a));
    if (commitment_less(a, b)) CHECK_FALSE(commitment_less(b, a));
}
