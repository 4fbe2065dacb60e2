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

#include <functional>
#include <set>
#include <variant>

#include "mwk/chain.hpp"

namespace mw {

using Addr = uint32_t;
using HashVal = Bytes;  // 32 bytes

/// Consensus-level transactions are MW aggregate transactions.
using Tx = AggregateTransaction;

/// Proof object validating a consensus block. The default scheme records
/// who minted and at which height; VAF decides eligibility.
struct ProofObj {
    Addr minter = 0;
    uint64_t height = 0;
    bool operator==(const ProofObj&) const = default;
};

/// Consensus block: parent hash, transaction list, proof. Separate
/// abstraction from the MW Block (no commitments aggregated here; txs
/// keep their identity until the MW layer folds them).
struct CBlock {
    HashVal prev;
    std::vector<Tx> txs;
    ProofObj pf;
    bool operator==(const CBlock&) const = default;
};

// Wire vocabulary.
struct NullMsg {
    bool operator==(const NullMsg&) const = default;
};
struct ConnectMsg {
    bool operator==(const ConnectMsg&) const = default;
};
struct AddrMsg {
    std::set<Addr> addrs;
    bool operator==(const AddrMsg&) const = default;
};
struct TxMsg {
    Tx tx;
    bool operator==(const TxMsg&) const = default;
};
struct BlockMsg {
    CBlock block;
    bool operator==(const BlockMsg&) const = default;
};
struct InvMsg {
    std::set<HashVal> hashes;
    bool operator==(const InvMsg&) const = default;
};
struct GetDataMsg {
    HashVal hash;
    bool operator==(const GetDataMsg&) const = default;
};

using Msg = std::variant<NullMsg, ConnectMsg, AddrMsg, TxMsg, BlockMsg, InvMsg, GetDataMsg>;

struct Packet {
    Addr from = 0;
    Addr to = 0;
    Msg msg;
    bool operator==(const Packet&) const = default;
};

using BlockForest = std::map<HashVal, CBlock>;
/// Transaction pool keyed by hasht for set semantics and deterministic
/// iteration.
using TxPool = std::map<HashVal, Tx>;

/// Node-local state: own address, known peers, block forest, tx pool.
/// The forest always contains the genesis block.
struct LocState {
    Addr self = 0;
    std::set<Addr> peers;  // as
    BlockForest forest;    // bf
    TxPool pool;           // tp
    bool operator==(const LocState&) const = default;
};

using ChainSeq = std::vector<CBlock>;

/// Model parameters: hash functions, proof mint/verify, transaction
/// validity and pool policy, fork-choice order. All pluggable; the
/// defaults realize the MW bridge.
struct ConsensusParams {
    GroupParams group;
    ChainPolicy policy;
    CBlock genesis;  // GB: prev = hashb(GB), no transactions

    std::function<HashVal(const CBlock&)> hashb;
    std::function<HashVal(const Tx&)> hasht;
    std::function<ProofObj(Addr, const ChainSeq&)> mk_proof;
    std::function<bool(const ProofObj&, uint64_t, const ChainSeq&)> vaf;
    std::function<bool(const Tx&, const ChainSeq&)> tx_valid;
    std::function<void(TxPool&, const Tx&, const HashVal&)> tx_extend;
    /// Strict "lighter-than" order on chains.
    std::function<bool(const ChainSeq&, const ChainSeq&)> fcr_less;
};

/// Default instantiation. round_robin_nodes > 0 restricts minting at
/// height h to the node with address h mod round_robin_nodes; 0 lets any
/// node mint.
ConsensusParams default_consensus_params(GroupParams group, ChainPolicy policy = {},
                                         uint32_t round_robin_nodes = 0,
                                         size_t pool_cap = 1024);

/// Fresh node state with the genesis block seeded into the forest.
LocState init_state(const ConsensusParams& cp, Addr self);

/// Receive transition: dispatches on the message tag. Packets addressed
/// to someone else are dropped with no output. Pure: same inputs, same
/// (state, output) pair.
std::pair<LocState, std::vector<Packet>> rcv(const ConsensusParams& cp, const LocState& st,
                                             const Packet& p);

/// Walks prev-links from b back to genesis and re-checks every block's
/// transactions against the strict prefix before it. Degenerates to
/// <GB> for unknown, orphaned, cyclic, or tx-invalid linkages.
ChainSeq chain_of(const ConsensusParams& cp, const BlockForest& bf, const CBlock& b);

/// The FCR-maximum of every per-block chain in the forest.
ChainSeq ledger(const ConsensusParams& cp, const BlockForest& bf);

/// Internal transition: build a block extending the ledger from the
/// txValid part of the pool; adopt it (as if self-received) and broadcast
/// it when VAF accepts the proof, no-op otherwise.
std::pair<LocState, std::vector<Packet>> mint(const ConsensusParams& cp, const LocState& st,
                                              uint64_t now);

/// UTXO fold over a consensus chain's transactions (the MW bridge).
UtxoSet utxo_of_chain(const GroupParams& g, const ChainSeq& c);

HashVal zero_hash();
bool is_genesis(const ConsensusParams& cp, const CBlock& b);

}  // namespace mw
