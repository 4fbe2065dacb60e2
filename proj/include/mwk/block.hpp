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

#include "mwk/tx.hpp"

namespace mw {

/// Multi-party transaction: concatenated inputs/outputs, one kernel per
/// merged party, a single summed offset. A single Transaction embeds as
/// the one-kernel case.
struct AggregateTransaction {
    std::vector<Commitment> inputs;
    std::vector<Output> outputs;
    std::vector<TxKernel> kernels;
    Scalar tko{0};
    bool operator==(const AggregateTransaction&) const = default;
};

/// Block: aggregated inputs/outputs/kernels under one block kernel offset.
/// No per-transaction offsets survive aggregation, which is what makes
/// transactions unlinkable inside a block. `supply` is the value minted by
/// this block (grant feature); 0 for ordinary blocks, in which case the
/// balance equation is exactly Sum(o) - Sum(i) = ko.G + Sum(ke).
struct Block {
    std::vector<Commitment> inputs;
    std::vector<Output> outputs;
    std::vector<TxKernel> kernels;
    Scalar ko{0};
    bool genesis = false;
    Scalar supply{0};
    bool operator==(const Block&) const = default;
};

/// Block validity clauses: (i) balance, (ii) per-kernel range proofs and
/// signatures. The finer codes distinguish which part of clause (ii)
/// failed.
enum class BlockCheck { ok, balance, range_proofs, signature };
const char* clause_name(BlockCheck c);  // "i" for balance, "ii" otherwise

AggregateTransaction to_aggregate(const Transaction& t);

/// Non-interactive merge: list concatenation, offset sum. Operands must
/// be valid (throws TxError::invalid_operand otherwise); the result is
/// valid by the aggregation invariant.
AggregateTransaction coinjoin(const GroupParams& params, const Transaction& t0,
                              const AggregateTransaction& tx, const TxPolicy& policy = {});

bool is_balanced_aggregate(const GroupParams& params, const AggregateTransaction& tx);
TxCheck validate_aggregate(const GroupParams& params, const AggregateTransaction& tx,
                           const TxPolicy& policy = {});

/// The distinguished genesis block: empty, ko = 0, axiomatically valid.
Block genesis_block();

/// Empty non-genesis block, the seed for block aggregation.
Block empty_block();

/// Wraps an aggregate transaction as a block (ko = tko).
Block block_from_aggregate(const AggregateTransaction& tx);

/// Aggregates t0 into b. Throws TxError::invalid_operand when either
/// operand is invalid, when b is the genesis block, or when b already
/// contains one of t0's outputs.
Block block_aggregate(const GroupParams& params, const Transaction& t0, const Block& b,
                      const TxPolicy& policy = {});

bool is_balanced_block(const GroupParams& params, const Block& b);
BlockCheck validate_block(const GroupParams& params, const Block& b, const TxPolicy& policy = {});

/// Removes commitments appearing as both input and output (pairwise, one
/// cancellation per matching pair). Kernels and ko untouched.
Block cut_through(const Block& b);

}  // namespace mw
