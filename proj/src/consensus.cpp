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

#include "mwk/consensus.hpp"

#include <algorithm>

namespace mw {

HashVal zero_hash() { return HashVal(32, 0); }

bool is_genesis(const ConsensusParams& cp, const CBlock& b) { return b == cp.genesis; }

static Bytes canonical_cblock(const GroupParams& g, const CBlock& b) {
    ByteWriter w;
    w.str("cblock");
    w.blob(b.prev);
    w.u32(static_cast<uint32_t>(b.txs.size()));
    for (const auto& t : b.txs) w.blob(canonical_bytes(g, t));
    w.u32(b.pf.minter);
    w.u64(b.pf.height);
    return w.take();
}

UtxoSet utxo_of_chain(const GroupParams& g, const ChainSeq& c) {
    UtxoSet utxo;
    for (size_t h = 0; h < c.size(); ++h) {
        for (const auto& t : c[h].txs) {
            for (const auto& in : t.inputs) utxo.spend(commitment_key(g, in));
            for (const auto& out : t.outputs)
                utxo.add(commitment_key(g, out.c), UtxoMeta{h, out.incubation});
        }
    }
    return utxo;
}

ConsensusParams default_consensus_params(GroupParams group, ChainPolicy policy,
                                         uint32_t round_robin_nodes, size_t pool_cap) {
    ConsensusParams cp;
    cp.group = std::move(group);
    cp.policy = std::move(policy);
    cp.genesis = CBlock{zero_hash(), {}, ProofObj{0, 0}};

    // hashb is injective up to collision resistance; the genesis block
    // hashes to the zero digest so that GB.prev == hashb(GB) holds.
    CBlock gb = cp.genesis;
    GroupParams g = cp.group;
    cp.hashb = [g, gb](const CBlock& b) -> HashVal {
        if (b == gb) return zero_hash();
        return sha256(canonical_cblock(g, b));
    };
    cp.hasht = [g](const Tx& t) -> HashVal { return sha256(canonical_bytes(g, t)); };

    cp.mk_proof = [](Addr a, const ChainSeq& c) { return ProofObj{a, c.size()}; };

    // Proof checks pin the minted height to the chain being extended,
    // which also enforces the axiom that a block already in the chain
    // cannot revalidate against it (its proof height is strictly
    // smaller). Round-robin eligibility keeps multi-node runs
    // deterministic.
    cp.vaf = [round_robin_nodes](const ProofObj& pf, uint64_t, const ChainSeq& c) {
        if (pf.height != c.size()) return false;
        if (round_robin_nodes > 0 && pf.minter % round_robin_nodes != c.size() % round_robin_nodes)
            return false;
        return true;
    };

    ChainPolicy pol = cp.policy;
    cp.tx_valid = [g, pol](const Tx& t, const ChainSeq& c) {
        if (validate_aggregate(g, t, pol.tx) != TxCheck::ok) return false;
        UtxoSet utxo = utxo_of_chain(g, c);
        std::map<Bytes, size_t> used;
        for (const auto& in : t.inputs) {
            Bytes key = commitment_key(g, in);
            if (++used[key] > utxo.count(key)) return false;
        }
        // Treat a transaction whose outputs all already exist as
        // confirmed; without this, zero-input transactions would be
        // re-minted forever.
        if (!t.outputs.empty()) {
            std::map<Bytes, size_t> have;
            bool all_present = true;
            for (const auto& out : t.outputs) {
                Bytes key = commitment_key(g, out.c);
                if (++have[key] > utxo.count(key)) {
                    all_present = false;
                    break;
                }
            }
            if (all_present) return false;
        }
        return true;
    };

    cp.tx_extend = [pool_cap](TxPool& tp, const Tx& t, const HashVal& h) {
        if (tp.size() >= pool_cap && tp.find(h) == tp.end()) return;
        tp.emplace(h, t);
    };

    // Strict order: longer chains are heavier; equal lengths compare
    // block hashes from the tip backwards. Total on arbitrary distinct
    // sequences, which the last-block hash alone is not.
    auto hashb = cp.hashb;
    cp.fcr_less = [hashb](const ChainSeq& x, const ChainSeq& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        for (size_t i = x.size(); i-- > 0;) {
            HashVal hx = hashb(x[i]);
            HashVal hy = hashb(y[i]);
            if (hx != hy) return hx < hy;
        }
        return false;
    };
    return cp;
}

LocState init_state(const ConsensusParams& cp, Addr self) {
    LocState st;
    st.self = self;
    st.forest.emplace(cp.hashb(cp.genesis), cp.genesis);
    return st;
}

static std::set<HashVal> inventory(const ConsensusParams& cp, const BlockForest& bf,
                                   const TxPool& tp) {
    std::set<HashVal> inv;
    for (const auto& [h, b] : bf) inv.insert(h);
    for (const auto& [h, t] : tp) inv.insert(h);
    return inv;
}

// RcvBlock state update, shared with mint's self-processing: store the
// block unconditionally (predecessors may still be missing), then keep
// only pool transactions that remain valid against the new ledger.
static void adopt_block(const ConsensusParams& cp, LocState& st, const CBlock& b) {
    st.forest[cp.hashb(b)] = b;
    ChainSeq led = ledger(cp, st.forest);
    for (auto it = st.pool.begin(); it != st.pool.end();) {
        if (!cp.tx_valid(it->second, led))
            it = st.pool.erase(it);
        else
            ++it;
    }
}

std::pair<LocState, std::vector<Packet>> rcv(const ConsensusParams& cp, const LocState& st,
                                             const Packet& p) {
    std::vector<Packet> out;
    if (p.to != st.self) return {st, out};  // addressed elsewhere: dropped
    LocState next = st;

    if (std::holds_alternative<NullMsg>(p.msg)) {
        return {next, out};
    }
    if (std::holds_alternative<ConnectMsg>(p.msg)) {
        next.peers.insert(p.from);
        out.push_back(Packet{st.self, p.from, InvMsg{inventory(cp, st.forest, st.pool)}});
        return {next, out};
    }
    if (const auto* am = std::get_if<AddrMsg>(&p.msg)) {
        next.peers.insert(am->addrs.begin(), am->addrs.end());
        for (Addr a : am->addrs)
            if (!st.peers.count(a)) out.push_back(Packet{st.self, a, ConnectMsg{}});
        for (Addr a : st.peers) out.push_back(Packet{st.self, a, AddrMsg{next.peers}});
        return {next, out};
    }
    if (const auto* tm = std::get_if<TxMsg>(&p.msg)) {
        cp.tx_extend(next.pool, tm->tx, cp.hasht(tm->tx));
        InvMsg inv{inventory(cp, next.forest, next.pool)};
        for (Addr a : next.peers) out.push_back(Packet{st.self, a, inv});
        return {next, out};
    }
    if (const auto* bm = std::get_if<BlockMsg>(&p.msg)) {
        adopt_block(cp, next, bm->block);
        InvMsg inv{inventory(cp, next.forest, next.pool)};
        for (Addr a : next.peers) out.push_back(Packet{st.self, a, inv});
        return {next, out};
    }
    if (const auto* im = std::get_if<InvMsg>(&p.msg)) {
        std::set<HashVal> known = inventory(cp, st.forest, st.pool);
        for (const auto& h : im->hashes)
            if (!known.count(h)) out.push_back(Packet{st.self, p.from, GetDataMsg{h}});
        return {next, out};
    }
    if (const auto* gm = std::get_if<GetDataMsg>(&p.msg)) {
        auto bit = st.forest.find(gm->hash);
        if (bit != st.forest.end()) {
            out.push_back(Packet{st.self, p.from, BlockMsg{bit->second}});
            return {next, out};
        }
        auto tit = st.pool.find(gm->hash);
        if (tit != st.pool.end()) {
            out.push_back(Packet{st.self, p.from, TxMsg{tit->second}});
            return {next, out};
        }
        out.push_back(Packet{st.self, p.from, NullMsg{}});
        return {next, out};
    }
    return {next, out};
}

ChainSeq chain_of(const ConsensusParams& cp, const BlockForest& bf, const CBlock& b) {
    ChainSeq fallback{cp.genesis};
    if (bf.find(cp.hashb(b)) == bf.end()) return fallback;

    ChainSeq seq{b};
    std::set<HashVal> seen{cp.hashb(b)};
    CBlock cur = b;
    while (!is_genesis(cp, cur)) {
        auto it = bf.find(cur.prev);
        if (it == bf.end()) return fallback;           // orphan
        if (!seen.insert(cur.prev).second) return fallback;  // cycle
        cur = it->second;
        seq.push_back(cur);
    }
    std::reverse(seq.begin(), seq.end());

    // Every transaction must validate against the strict prefix before
    // its block.
    ChainSeq prefix;
    for (const auto& blk : seq) {
        for (const auto& t : blk.txs)
            if (!cp.tx_valid(t, prefix)) return fallback;
        prefix.push_back(blk);
    }
    return seq;
}

ChainSeq ledger(const ConsensusParams& cp, const BlockForest& bf) {
    ChainSeq best{cp.genesis};
    for (const auto& [h, b] : bf) {
        ChainSeq cand = chain_of(cp, bf, b);
        if (cp.fcr_less(best, cand)) best = std::move(cand);
    }
    return best;
}

std::pair<LocState, std::vector<Packet>> mint(const ConsensusParams& cp, const LocState& st,
                                              uint64_t now) {
    ChainSeq led = ledger(cp, st.forest);
    ProofObj pf = cp.mk_proof(st.self, led);
    if (!cp.vaf(pf, now, led)) return {st, {}};

    CBlock b;
    b.prev = cp.hashb(led.back());
    for (const auto& [h, t] : st.pool)
        if (cp.tx_valid(t, led)) b.txs.push_back(t);
    b.pf = pf;

    LocState next = st;
    adopt_block(cp, next, b);
    std::vector<Packet> out;
    for (Addr a : next.peers) out.push_back(Packet{st.self, a, BlockMsg{b}});
    return {next, out};
}

}  // namespace mw
