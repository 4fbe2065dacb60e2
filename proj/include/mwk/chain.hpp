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

#include <map>

#include "mwk/block.hpp"

namespace mw {

enum class ErrorCode {
    not_balanced,
    bad_range_proof,
    bad_signature,
    double_spend,
    unknown_input,
    incubation_violation,
    bad_genesis,
};
const char* error_name(ErrorCode ec);

/// Response ::= ok | error(ec). Error responses never mutate state.
struct Response {
    std::optional<ErrorCode> ec;
    bool ok() const { return !ec.has_value(); }
    static Response okay() { return Response{}; }
    static Response error(ErrorCode e) { return Response{e}; }
    bool operator==(const Response&) const = default;
};

struct UtxoMeta {
    uint64_t created_height = 0;
    uint32_t incubation = 0;
    bool operator==(const UtxoMeta&) const = default;
};

/// Unspent outputs of a chain, keyed by encoded commitment. Duplicate
/// commitments are legal (the tiny group collides constantly), so each
/// key holds a FIFO of copies; spends consume the oldest copy first.
/// Historically consumed keys are remembered so a re-spend reports
/// double-spend rather than unknown-input.
class UtxoSet {
public:
    void add(const Bytes& key, UtxoMeta meta) { live_[key].push_back(meta); }
    bool spend(const Bytes& key);  // oldest copy; false if none live
    size_t count(const Bytes& key) const;
    bool ever_created(const Bytes& key) const;
    size_t size() const;

    const std::map<Bytes, std::vector<UtxoMeta>>& live() const { return live_; }
    const std::map<Bytes, uint64_t>& spent() const { return spent_; }

    bool operator==(const UtxoSet&) const = default;

private:
    std::map<Bytes, std::vector<UtxoMeta>> live_;
    std::map<Bytes, uint64_t> spent_;
};

struct Chain {
    std::vector<Block> blocks;  // blocks[0] is genesis
    static Chain genesis() { return Chain{{genesis_block()}}; }
    uint64_t height() const { return blocks.size() - 1; }
};

using Mempool = std::vector<AggregateTransaction>;

struct ChainPolicy {
    TxPolicy tx;
    bool allow_grants = false;
    BigInt grant_amount = 0;  // config constant; grant blocks must mint exactly this
};

Bytes commitment_key(const GroupParams& params, const Commitment& c);

/// validate(c, b): is it correct to append b to c. Checks block validity,
/// UTXO membership of every input, in-block double spends, and (when
/// enabled) incubation distances. First failing check decides the code.
Response validate_append(const GroupParams& params, const Chain& c, const Block& b,
                         const ChainPolicy& policy = {});

bool valid_chain(const GroupParams& params, const Chain& c, const ChainPolicy& policy = {});

/// Fold over the chain: outputs in, inputs out.
UtxoSet rebuild_utxo(const GroupParams& params, const Chain& c);

/// Node-local state: chain, mempool, and incrementally maintained UTXO
/// set (always equal to rebuild_utxo(chain); tested, not trusted).
struct NodeState {
    Chain chain = Chain::genesis();
    Mempool mempool;
    UtxoSet utxo;
};

/// The local transaction vocabulary of the execution semantics.
struct StepAction {
    enum class Kind { submit_tx, append_block, grant };
    Kind kind = Kind::submit_tx;
    AggregateTransaction tx;          // submit_tx
    Block block;                      // append_block
    std::vector<Opening> grant_outs;  // grant
    Scalar grant_ko{0};
};

/// One-step execution with error management. Valid states stay valid; on
/// error the state is untouched (bit-identical under serialize_state).
Response step(const GroupParams& params, NodeState& s, const StepAction& action,
              const ChainPolicy& policy, Rng& rng);

Response submit_tx(const GroupParams& params, NodeState& s, const AggregateTransaction& tx,
                   const ChainPolicy& policy = {});
Response append_block(const GroupParams& params, NodeState& s, const Block& b,
                      const ChainPolicy& policy = {});

/// Builds and appends a grant block minting policy.grant_amount into the
/// given outputs. Rejected (not-balanced) when grants are disabled or the
/// values do not sum to the configured amount.
Response grant(const GroupParams& params, NodeState& s, const std::vector<Opening>& outs,
               const Scalar& ko, const ChainPolicy& policy, Rng& rng);

/// Grant-block construction alone (no append); exposed for scenarios that
/// relay blocks between nodes.
Block make_grant_block(const GroupParams& params, const std::vector<Opening>& outs,
                       const Scalar& ko, const ChainPolicy& policy, Rng& rng);

bool valid_state(const GroupParams& params, const NodeState& s, const ChainPolicy& policy = {});

/// Canonical byte serialization of the whole state; the frame-condition
/// oracle (serialize-and-compare) and the per-node state digest both use
/// this.
Bytes serialize_state(const GroupParams& params, const NodeState& s);

Bytes canonical_bytes(const GroupParams& params, const Transaction& t);
Bytes canonical_bytes(const GroupParams& params, const AggregateTransaction& tx);
Bytes canonical_bytes(const GroupParams& params, const Block& b);

}  // namespace mw
