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

// Test-only oracles, independent of the library's group implementation.
// Tiny-group expectations are computed with plain uint64 modular
// arithmetic here and compared against the library.

#include <cstdint>

#include "mwk/block.hpp"
#include "mwk/chain.hpp"

namespace oracle {

// The worked tiny group: Z_23 with G=5, H=7, J=11.
inline mw::TinyConstants tiny23() { return mw::TinyConstants{23, 5, 7, 11}; }

inline mw::GroupParams tiny_params() { return mw::setup(mw::Backend::tiny, 1, tiny23()); }

// A larger tiny prime for randomized chain tests (fewer commitment
// collisions than n = 23); still brute-forceable.
inline mw::GroupParams tiny_big_params() {
    return mw::setup(mw::Backend::tiny, 1, mw::TinyConstants{1009, 5, 7, 11});
}

// ---- independent modular arithmetic ----

inline uint64_t mod_add(uint64_t a, uint64_t b, uint64_t n) { return (a + b) % n; }
inline uint64_t mod_sub(uint64_t a, uint64_t b, uint64_t n) { return (a + n - b % n) % n; }
inline uint64_t mod_mul(uint64_t a, uint64_t b, uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

// Exhaustive dlog, written separately from the library's oracle.
inline uint64_t slow_dlog(uint64_t q, uint64_t base, uint64_t n) {
    uint64_t acc = 0;
    for (uint64_t k = 0; k < n; ++k) {
        if (acc == q) return k;
        acc = mod_add(acc, base, n);
    }
    return UINT64_MAX;
}

inline uint64_t residue(const mw::GroupElement& p) { return p.x.convert_to<uint64_t>(); }

inline mw::Scalar sc(const mw::GroupParams& g, uint64_t v) { return mw::scalar_from_u64(g, v); }

inline mw::Opening opening(const mw::GroupParams& g, uint64_t v, uint64_t r) {
    return mw::Opening{sc(g, v), sc(g, r)};
}

// ---- randomized builders ----

struct RandomTx {
    mw::Transaction tx;
    std::vector<mw::Opening> ins;
    std::vector<mw::Opening> outs;
    mw::Scalar tko;
};

// Balanced random transaction: output values repartition the input total.
inline RandomTx random_tx(const mw::GroupParams& g, mw::Rng& rng, const mw::TxPolicy& policy,
                          size_t max_io = 3) {
    RandomTx r;
    size_t n_in = rng.range(0, max_io);
    size_t n_out = rng.range(n_in == 0 ? 0 : 1, max_io);
    uint64_t cap = policy.range_bits >= 16 ? 50 : (1u << policy.range_bits) - 1;
    uint64_t total = 0;
    for (size_t i = 0; i < n_in; ++i) {
        uint64_t v = rng.range(0, cap / (n_in ? n_in : 1));
        total += v;
        r.ins.push_back(mw::Opening{sc(g, v), mw::random_scalar(g, rng)});
    }
    for (size_t i = 0; i < n_out; ++i) {
        uint64_t v = i + 1 == n_out ? total : rng.range(0, total);
        total -= v;
        r.outs.push_back(mw::Opening{sc(g, v), mw::random_scalar(g, rng)});
    }
    r.tko = mw::random_scalar(g, rng);
    r.tx = mw::build_transaction(g, r.ins, r.outs, r.tko, policy, rng);
    return r;
}

}  // namespace oracle
