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

#include "mwk/rangeproof.hpp"

#include <map>
#include <mutex>

namespace mw {

namespace {

// ---- stub oracle registry ----

struct StubRecord {
    Bytes commitment;  // encoded point
    uint8_t mode;
    uint32_t incubation;
};

std::mutex g_stub_mu;
std::map<Bytes, StubRecord> g_stub_registry;
uint64_t g_stub_counter = 0;

// ---- bits construction ----
//
// Per bit j with commitment C_j = r_j.G + b_j.H, the OR proof shows
// knowledge of r_j for one of B0 = C_j (bit 0) or B1 = C_j - H (bit 1).
// Stored as (e0, e1, s0, s1); the verifier recomputes R_i = s_i.G - e_i.B_i
// and checks e0 + e1 == challenge.

struct BitProof {
    Bytes c;  // encoded bit commitment
    Scalar e0, e1, s0, s1;
};

struct BitsPayload {
    uint8_t mode = 0;  // commit mode of the target
    Bytes target;      // encoded target point
    uint32_t incubation = 0;
    uint32_t bits = 0;
    std::vector<BitProof> proofs;
};

Scalar bit_challenge(const GroupParams& g, const BitsPayload& bp, size_t idx,
                     const GroupElement& C, const GroupElement& R0, const GroupElement& R1) {
    ByteWriter w;
    w.str("mwkit/v1/rangeproof-bit");
    w.u8(bp.mode);
    w.blob(bp.target);
    w.u32(bp.incubation);
    w.u32(static_cast<uint32_t>(idx));
    w.blob(encode(g, C));
    w.blob(encode(g, R0));
    w.blob(encode(g, R1));
    return hash_to_scalar(g, w.bytes());
}

Bytes pack_bits(const GroupParams& g, const BitsPayload& bp) {
    ByteWriter w;
    w.u8(bp.mode);
    w.blob(bp.target);
    w.u32(bp.incubation);
    w.u32(bp.bits);
    for (const auto& p : bp.proofs) {
        w.blob(p.c);
        w.blob(encode(g, p.e0));
        w.blob(encode(g, p.e1));
        w.blob(encode(g, p.s0));
        w.blob(encode(g, p.s1));
    }
    return w.take();
}

std::optional<BitsPayload> unpack_bits(const GroupParams& g, BytesView payload) {
    try {
        ByteReader r(payload);
        BitsPayload bp;
        bp.mode = r.u8();
        bp.target = r.blob();
        bp.incubation = r.u32();
        bp.bits = r.u32();
        if (bp.bits == 0 || bp.bits > 256) return std::nullopt;
        for (uint32_t i = 0; i < bp.bits; ++i) {
            BitProof p;
            p.c = r.blob();
            p.e0 = decode_scalar(g, r.blob());
            p.e1 = decode_scalar(g, r.blob());
            p.s0 = decode_scalar(g, r.blob());
            p.s1 = decode_scalar(g, r.blob());
            bp.proofs.push_back(std::move(p));
        }
        if (!r.done()) return std::nullopt;
        return bp;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// Effective blinding: the scalar x with target = x.G + v.H. Equals r for
// plain commitments, r plus the public tweak for switch ones.
Scalar effective_blinding(const GroupParams& g, const Opening& o, CommitMode mode) {
    if (mode == CommitMode::plain) return o.r;
    GroupElement inner = add(g, scalar_mul(g, o.v, g.H), scalar_mul(g, o.r, g.G));
    GroupElement rj = scalar_mul(g, o.r, g.J);
    Bytes buf = encode(g, inner);
    Bytes rjb = encode(g, rj);
    buf.insert(buf.end(), rjb.begin(), rjb.end());
    return s_add(g, o.r, hash_to_scalar(g, buf));
}

}  // namespace

RangeProof make_range_proof(const GroupParams& params, const Opening& o, uint32_t bits,
                            RangeProofKind kind, Rng& rng, CommitMode mode, uint32_t incubation) {
    if (bits == 0 || bits > 256) throw RangeProofError("bit width out of range");
    BigInt v = o.v.v;
    if (v < 0 || v >> bits != 0) throw RangeProofError("value out of range");

    Commitment target =
        mode == CommitMode::plain ? commit(params, o) : switch_commit(params, o);

    if (kind == RangeProofKind::stub) {
        ByteWriter w;
        w.str("stub");
        w.u64(++g_stub_counter);
        w.u64(rng.next_u64());
        Bytes token = sha256(w.bytes());
        token.resize(16);
        std::lock_guard<std::mutex> lock(g_stub_mu);
        g_stub_registry[token] =
            StubRecord{encode(params, target.point), static_cast<uint8_t>(mode), incubation};
        return RangeProof{RangeProofKind::stub, token};
    }

    Scalar x = effective_blinding(params, o, mode);

    BitsPayload bp;
    bp.mode = static_cast<uint8_t>(mode);
    bp.target = encode(params, target.point);
    bp.incubation = incubation;
    bp.bits = bits;

    // Split x over the bit blindings so the weighted sum re-derives the
    // target: r_0 = x - sum_{j>=1} 2^j r_j.
    std::vector<Scalar> blind(bits);
    Scalar acc{0};
    for (uint32_t j = 1; j < bits; ++j) {
        blind[j] = random_scalar(params, rng);
        Scalar w = make_scalar(params, BigInt(1) << j);
        acc = s_add(params, acc, s_mul(params, w, blind[j]));
    }
    blind[0] = s_sub(params, x, acc);

    for (uint32_t j = 0; j < bits; ++j) {
        int bit = boost::multiprecision::bit_test(v, j) ? 1 : 0;
        GroupElement C = add(params, scalar_mul(params, blind[j], params.G),
                             scalar_mul(params, scalar_from_u64(params, bit), params.H));
        GroupElement B0 = C;
        GroupElement B1 = sub(params, C, params.H);

        BitProof p;
        p.c = encode(params, C);

        // Simulate the false branch, prove the true one.
        Scalar e_sim = random_scalar(params, rng);
        Scalar s_sim = random_scalar(params, rng);
        Scalar k = random_scalar(params, rng);
        GroupElement Rb = scalar_mul(params, k, params.G);
        GroupElement Rsim = sub(params, scalar_mul(params, s_sim, params.G),
                                scalar_mul(params, e_sim, bit == 0 ? B1 : B0));
        GroupElement R0 = bit == 0 ? Rb : Rsim;
        GroupElement R1 = bit == 0 ? Rsim : Rb;

        Scalar e = bit_challenge(params, bp, j, C, R0, R1);
        Scalar e_true = s_sub(params, e, e_sim);
        Scalar s_true = s_add(params, k, s_mul(params, e_true, blind[j]));

        p.e0 = bit == 0 ? e_true : e_sim;
        p.e1 = bit == 0 ? e_sim : e_true;
        p.s0 = bit == 0 ? s_true : s_sim;
        p.s1 = bit == 0 ? s_sim : s_true;
        bp.proofs.push_back(std::move(p));
    }

    return RangeProof{RangeProofKind::bits, pack_bits(params, bp)};
}

bool verify_range_proof(const GroupParams& params, const Commitment& c, const RangeProof& rp) {
    auto target = range_proof_target(params, rp);
    if (!target || !(*target == c)) return false;
    return verify_range_proof_embedded(params, rp);
}

bool verify_range_proof_embedded(const GroupParams& params, const RangeProof& rp) {
    if (rp.kind == RangeProofKind::stub) {
        std::lock_guard<std::mutex> lock(g_stub_mu);
        return g_stub_registry.find(rp.payload) != g_stub_registry.end();
    }
    auto bp = unpack_bits(params, rp.payload);
    if (!bp) return false;

    GroupElement target;
    try {
        target = decode_element(params, bp->target);
    } catch (const std::exception&) {
        return false;
    }

    GroupElement weighted = identity(params);
    for (uint32_t j = 0; j < bp->bits; ++j) {
        const BitProof& p = bp->proofs[j];
        GroupElement C;
        try {
            C = decode_element(params, p.c);
        } catch (const std::exception&) {
            return false;
        }
        GroupElement B0 = C;
        GroupElement B1 = sub(params, C, params.H);
        GroupElement R0 =
            sub(params, scalar_mul(params, p.s0, params.G), scalar_mul(params, p.e0, B0));
        GroupElement R1 =
            sub(params, scalar_mul(params, p.s1, params.G), scalar_mul(params, p.e1, B1));
        Scalar e = bit_challenge(params, *bp, j, C, R0, R1);
        if (!(s_add(params, p.e0, p.e1) == e)) return false;

        Scalar w = make_scalar(params, BigInt(1) << j);
        weighted = add(params, weighted, scalar_mul(params, w, C));
    }
    return weighted == target;
}

std::optional<Commitment> range_proof_target(const GroupParams& params, const RangeProof& rp) {
    if (rp.kind == RangeProofKind::stub) {
        std::lock_guard<std::mutex> lock(g_stub_mu);
        auto it = g_stub_registry.find(rp.payload);
        if (it == g_stub_registry.end()) return std::nullopt;
        try {
            return Commitment{decode_element(params, it->second.commitment),
                              static_cast<CommitMode>(it->second.mode)};
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    auto bp = unpack_bits(params, rp.payload);
    if (!bp) return std::nullopt;
    try {
        return Commitment{decode_element(params, bp->target), static_cast<CommitMode>(bp->mode)};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

uint32_t range_proof_incubation(const GroupParams& params, const RangeProof& rp) {
    if (rp.kind == RangeProofKind::stub) {
        std::lock_guard<std::mutex> lock(g_stub_mu);
        auto it = g_stub_registry.find(rp.payload);
        return it == g_stub_registry.end() ? 0 : it->second.incubation;
    }
    auto bp = unpack_bits(params, rp.payload);
    return bp ? bp->incubation : 0;
}

void stub_oracle_reset() {
    std::lock_guard<std::mutex> lock(g_stub_mu);
    g_stub_registry.clear();
}

}  // namespace mw
