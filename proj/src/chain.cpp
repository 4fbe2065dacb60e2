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

#include "mwk/chain.hpp"

#include <algorithm>

namespace mw {

const char* error_name(ErrorCode ec) {
    switch (ec) {
        case ErrorCode::not_balanced: return "not-balanced";
        case ErrorCode::bad_range_proof: return "bad-range-proof";
        case ErrorCode::bad_signature: return "bad-signature";
        case ErrorCode::double_spend: return "double-spend";
        case ErrorCode::unknown_input: return "unknown-input";
        case ErrorCode::incubation_violation: return "incubation-violation";
        case ErrorCode::bad_genesis: return "bad-genesis";
    }
    return "?";
}

bool UtxoSet::spend(const Bytes& key) {
    auto it = live_.find(key);
    if (it == live_.end() || it->second.empty()) return false;
    it->second.erase(it->second.begin());
    if (it->second.empty()) live_.erase(it);
    spent_[key] += 1;
    return true;
}

size_t UtxoSet::count(const Bytes& key) const {
    auto it = live_.find(key);
    return it == live_.end() ? 0 : it->second.size();
}

bool UtxoSet::ever_created(const Bytes& key) const {
    return live_.count(key) != 0 || spent_.count(key) != 0;
}

size_t UtxoSet::size() const {
    size_t n = 0;
    for (const auto& [k, v] : live_) n += v.size();
    return n;
}

Bytes commitment_key(const GroupParams& params, const Commitment& c) {
    ByteWriter w;
    w.u8(static_cast<uint8_t>(c.mode));
    w.blob(encode(params, c.point));
    return w.take();
}

namespace {

// Classifies the inputs of a candidate block against the UTXO set,
// honoring in-block multiplicity. Any over-consumption or historic
// re-spend is a double spend; a commitment never created is unknown.
// Double-spend outranks unknown-input when both occur.
struct InputScan {
    bool has_double_spend = false;
    bool has_unknown = false;
    bool has_incubation_violation = false;
};

InputScan scan_inputs(const GroupParams& params, const UtxoSet& utxo,
                      const std::vector<Commitment>& inputs, uint64_t spend_height,
                      bool enforce_incubation) {
    InputScan scan;
    std::map<Bytes, size_t> consumed;
    for (const auto& in : inputs) {
        Bytes key = commitment_key(params, in);
        size_t used = consumed[key]++;
        size_t avail = utxo.count(key);
        if (used < avail) {
            if (enforce_incubation) {
                const auto& copies = utxo.live().at(key);
                const UtxoMeta& meta = copies[used];  // FIFO order
                if (spend_height < meta.created_height + meta.incubation)
                    scan.has_incubation_violation = true;
            }
            continue;
        }
        if (utxo.ever_created(key) || used > 0)
            scan.has_double_spend = true;
        else
            scan.has_unknown = true;
    }
    return scan;
}

Response block_check_response(const GroupParams& params, const Block& b,
                              const ChainPolicy& policy) {
    switch (validate_block(params, b, policy.tx)) {
        case BlockCheck::balance: return Response::error(ErrorCode::not_balanced);
        case BlockCheck::range_proofs: return Response::error(ErrorCode::bad_range_proof);
        case BlockCheck::signature: return Response::error(ErrorCode::bad_signature);
        case BlockCheck::ok: break;
    }
    return Response::okay();
}

void apply_block(const GroupParams& params, UtxoSet& utxo, const Block& b, uint64_t height) {
    for (const auto& in : b.inputs) utxo.spend(commitment_key(params, in));
    for (const auto& out : b.outputs)
        utxo.add(commitment_key(params, out.c), UtxoMeta{height, out.incubation});
}

}  // namespace

Response validate_append(const GroupParams& params, const Chain& c, const Block& b,
                         const ChainPolicy& policy) {
    if (b.genesis) return Response::error(ErrorCode::bad_genesis);
    // Supply is only lawful through the grant feature and only at the
    // configured amount; anything else fails the zero-supply balance.
    if (b.supply.v != 0 && (!policy.allow_grants || b.supply.v != policy.grant_amount))
        return Response::error(ErrorCode::not_balanced);
    if (Response r = block_check_response(params, b, policy); !r.ok()) return r;

    UtxoSet utxo = rebuild_utxo(params, c);
    InputScan scan = scan_inputs(params, utxo, b.inputs, c.blocks.size(),
                                 policy.tx.incubation_enabled);
    if (scan.has_double_spend) return Response::error(ErrorCode::double_spend);
    if (scan.has_unknown) return Response::error(ErrorCode::unknown_input);
    if (scan.has_incubation_violation) return Response::error(ErrorCode::incubation_violation);
    return Response::okay();
}

bool valid_chain(const GroupParams& params, const Chain& c, const ChainPolicy& policy) {
    if (c.blocks.empty() || !(c.blocks[0] == genesis_block())) return false;
    Chain prefix{{c.blocks[0]}};
    for (size_t i = 1; i < c.blocks.size(); ++i) {
        if (!validate_append(params, prefix, c.blocks[i], policy).ok()) return false;
        prefix.blocks.push_back(c.blocks[i]);
    }
    return true;
}

UtxoSet rebuild_utxo(const GroupParams& params, const Chain& c) {
    UtxoSet utxo;
    for (size_t h = 0; h < c.blocks.size(); ++h) apply_block(params, utxo, c.blocks[h], h);
    return utxo;
}

static bool mempool_inputs_available(const GroupParams& params, const UtxoSet& utxo,
                                     const Mempool& pool, size_t member,
                                     std::optional<ErrorCode>* why = nullptr) {
    // Membership check against UTXO plus sibling mempool outputs.
    std::map<Bytes, size_t> avail;
    for (const auto& [key, copies] : utxo.live()) avail[key] += copies.size();
    for (size_t i = 0; i < pool.size(); ++i) {
        if (i == member) continue;
        for (const auto& out : pool[i].outputs) avail[commitment_key(params, out.c)] += 1;
    }
    std::map<Bytes, size_t> used;
    for (const auto& in : pool[member].inputs) {
        Bytes key = commitment_key(params, in);
        if (++used[key] > avail[key]) {
            if (why) {
                *why = (utxo.ever_created(key) || used[key] > 1) ? ErrorCode::double_spend
                                                                 : ErrorCode::unknown_input;
            }
            return false;
        }
    }
    return true;
}

static void refilter_mempool(const GroupParams& params, NodeState& s) {
    // Drop members whose inputs are no longer covered; shrinking the pool
    // can strand later members, so iterate to a fixpoint.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < s.mempool.size(); ++i) {
            if (!mempool_inputs_available(params, s.utxo, s.mempool, i)) {
                s.mempool.erase(s.mempool.begin() + i);
                changed = true;
                break;
            }
        }
    }
}

Response submit_tx(const GroupParams& params, NodeState& s, const AggregateTransaction& tx,
                   const ChainPolicy& policy) {
    switch (validate_aggregate(params, tx, policy.tx)) {
        case TxCheck::range_proofs: return Response::error(ErrorCode::bad_range_proof);
        case TxCheck::balance: return Response::error(ErrorCode::not_balanced);
        case TxCheck::signature: return Response::error(ErrorCode::bad_signature);
        case TxCheck::ok: break;
    }
    Mempool candidate = s.mempool;
    candidate.push_back(tx);
    std::optional<ErrorCode> why;
    if (!mempool_inputs_available(params, s.utxo, candidate, candidate.size() - 1, &why))
        return Response::error(why.value_or(ErrorCode::unknown_input));
    s.mempool = std::move(candidate);
    return Response::okay();
}

Response append_block(const GroupParams& params, NodeState& s, const Block& b,
                      const ChainPolicy& policy) {
    Response r = validate_append(params, s.chain, b, policy);
    if (!r.ok()) return r;
    apply_block(params, s.utxo, b, s.chain.blocks.size());
    s.chain.blocks.push_back(b);
    refilter_mempool(params, s);
    return Response::okay();
}

Block make_grant_block(const GroupParams& params, const std::vector<Opening>& outs,
                       const Scalar& ko, const ChainPolicy& policy, Rng& rng) {
    Block b = empty_block();
    Scalar r_sum{0};
    Scalar v_sum{0};
    TxKernel k;
    for (const auto& o : outs) {
        b.outputs.push_back(Output{commit(params, o), 0});
        k.rp.push_back(
            make_range_proof(params, o, policy.tx.range_bits, policy.tx.proof_kind, rng));
        r_sum = s_add(params, r_sum, o.r);
        v_sum = s_add(params, v_sum, o.v);
    }
    Scalar excess = s_sub(params, r_sum, ko);
    k.ke = scalar_mul(params, excess, params.G);
    k.sigma = sign_kernel(params, excess, kernel_message(policy.tx, k));
    b.kernels.push_back(std::move(k));
    b.ko = ko;
    b.supply = v_sum;
    return b;
}

Response grant(const GroupParams& params, NodeState& s, const std::vector<Opening>& outs,
               const Scalar& ko, const ChainPolicy& policy, Rng& rng) {
    Block b = make_grant_block(params, outs, ko, policy, rng);
    return append_block(params, s, b, policy);
}

Response step(const GroupParams& params, NodeState& s, const StepAction& action,
              const ChainPolicy& policy, Rng& rng) {
    switch (action.kind) {
        case StepAction::Kind::submit_tx: return submit_tx(params, s, action.tx, policy);
        case StepAction::Kind::append_block: return append_block(params, s, action.block, policy);
        case StepAction::Kind::grant:
            return grant(params, s, action.grant_outs, action.grant_ko, policy, rng);
    }
    return Response::error(ErrorCode::bad_genesis);
}

bool valid_state(const GroupParams& params, const NodeState& s, const ChainPolicy& policy) {
    if (!valid_chain(params, s.chain, policy)) return false;
    if (!(rebuild_utxo(params, s.chain) == s.utxo)) return false;
    for (size_t i = 0; i < s.mempool.size(); ++i) {
        if (validate_aggregate(params, s.mempool[i], policy.tx) != TxCheck::ok) return false;
        if (!mempool_inputs_available(params, s.utxo, s.mempool, i)) return false;
    }
    return true;
}

// ---- canonical encodings ----

namespace {

void put_scalar(ByteWriter& w, const GroupParams& g, const Scalar& s) { w.blob(encode(g, s)); }

void put_commitment(ByteWriter& w, const GroupParams& g, const Commitment& c) {
    w.u8(static_cast<uint8_t>(c.mode));
    w.blob(encode(g, c.point));
}

void put_output(ByteWriter& w, const GroupParams& g, const Output& o) {
    put_commitment(w, g, o.c);
    w.u32(o.incubation);
}

void put_kernel(ByteWriter& w, const GroupParams& g, const TxKernel& k) {
    w.u32(static_cast<uint32_t>(k.rp.size()));
    for (const auto& rp : k.rp) {
        w.u8(static_cast<uint8_t>(rp.kind));
        w.blob(rp.payload);
    }
    w.blob(encode(g, k.ke));
    w.blob(encode(g, k.sigma.R));
    put_scalar(w, g, k.sigma.s);
}

void put_io(ByteWriter& w, const GroupParams& g, const std::vector<Commitment>& ins,
            const std::vector<Output>& outs) {
    w.u32(static_cast<uint32_t>(ins.size()));
    for (const auto& c : ins) put_commitment(w, g, c);
    w.u32(static_cast<uint32_t>(outs.size()));
    for (const auto& o : outs) put_output(w, g, o);
}

}  // namespace

Bytes canonical_bytes(const GroupParams& params, const Transaction& t) {
    ByteWriter w;
    w.str("tx");
    put_io(w, params, t.inputs, t.outputs);
    put_kernel(w, params, t.kernel);
    put_scalar(w, params, t.tko);
    return w.take();
}

Bytes canonical_bytes(const GroupParams& params, const AggregateTransaction& tx) {
    ByteWriter w;
    w.str("aggtx");
    put_io(w, params, tx.inputs, tx.outputs);
    w.u32(static_cast<uint32_t>(tx.kernels.size()));
    for (const auto& k : tx.kernels) put_kernel(w, params, k);
    put_scalar(w, params, tx.tko);
    return w.take();
}

Bytes canonical_bytes(const GroupParams& params, const Block& b) {
    ByteWriter w;
    w.str("block");
    w.u8(b.genesis ? 1 : 0);
    put_io(w, params, b.inputs, b.outputs);
    w.u32(static_cast<uint32_t>(b.kernels.size()));
    for (const auto& k : b.kernels) put_kernel(w, params, k);
    put_scalar(w, params, b.ko);
    put_scalar(w, params, b.supply);
    return w.take();
}

Bytes serialize_state(const GroupParams& params, const NodeState& s) {
    ByteWriter w;
    w.str("state");
    w.u32(static_cast<uint32_t>(s.chain.blocks.size()));
    for (const auto& b : s.chain.blocks) w.blob(canonical_bytes(params, b));
    w.u32(static_cast<uint32_t>(s.mempool.size()));
    for (const auto& t : s.mempool) w.blob(canonical_bytes(params, t));
    w.u32(static_cast<uint32_t>(s.utxo.live().size()));
    for (const auto& [key, copies] : s.utxo.live()) {
        w.blob(key);
        w.u32(static_cast<uint32_t>(copies.size()));
        for (const auto& m : copies) {
            w.u64(m.created_height);
            w.u32(m.incubation);
        }
    }
    w.u32(static_cast<uint32_t>(s.utxo.spent().size()));
    for (const auto& [key, n] : s.utxo.spent()) {
        w.blob(key);
        w.u64(n);
    }
    return w.take();
}

}  // namespace mw
