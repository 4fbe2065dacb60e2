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

#include "mwk/block.hpp"

namespace mw {

const char* clause_name(BlockCheck c) {
    switch (c) {
        case BlockCheck::ok: return "ok";
        case BlockCheck::balance: return "i";
        case BlockCheck::range_proofs:
        case BlockCheck::signature: return "ii";
    }
    return "?";
}

AggregateTransaction to_aggregate(const Transaction& t) {
    return AggregateTransaction{t.inputs, t.outputs, {t.kernel}, t.tko};
}

// Per-kernel checks shared by aggregate and block validation: every range
// proof verifies against the target embedded in its payload (position
// pairing does not survive aggregation or cut-through), every kernel
// signature verifies for its excess.
static bool kernels_range_proofs_ok(const GroupParams& params,
                                    const std::vector<TxKernel>& kernels) {
    for (const auto& k : kernels)
        for (const auto& rp : k.rp)
            if (!verify_range_proof_embedded(params, rp)) return false;
    return true;
}

static bool kernels_signatures_ok(const GroupParams& params,
                                  const std::vector<TxKernel>& kernels, const TxPolicy& policy) {
    for (const auto& k : kernels)
        if (!verify_kernel(params, k.ke, kernel_message(policy, k), k.sigma)) return false;
    return true;
}

static GroupElement sum_excesses(const GroupParams& params, const std::vector<TxKernel>& kernels) {
    GroupElement acc = identity(params);
    for (const auto& k : kernels) acc = add(params, acc, k.ke);
    return acc;
}

AggregateTransaction coinjoin(const GroupParams& params, const Transaction& t0,
                              const AggregateTransaction& tx, const TxPolicy& policy) {
    if (validate_transaction(params, t0, policy) != TxCheck::ok)
        throw TxError(TxError::Code::invalid_operand, "coinjoin: invalid transaction operand");
    if (validate_aggregate(params, tx, policy) != TxCheck::ok)
        throw TxError(TxError::Code::invalid_operand, "coinjoin: invalid aggregate operand");

    AggregateTransaction out;
    out.inputs = t0.inputs;
    out.inputs.insert(out.inputs.end(), tx.inputs.begin(), tx.inputs.end());
    out.outputs = t0.outputs;
    out.outputs.insert(out.outputs.end(), tx.outputs.begin(), tx.outputs.end());
    out.kernels.push_back(t0.kernel);
    out.kernels.insert(out.kernels.end(), tx.kernels.begin(), tx.kernels.end());
    out.tko = s_add(params, t0.tko, tx.tko);
    return out;
}

bool is_balanced_aggregate(const GroupParams& params, const AggregateTransaction& tx) {
    GroupElement lhs =
        sub(params, sum_outputs(params, tx.outputs), sum_commitments(params, tx.inputs));
    GroupElement rhs = add(params, scalar_mul(params, tx.tko, params.G),
                           sum_excesses(params, tx.kernels));
    return lhs == rhs;
}

TxCheck validate_aggregate(const GroupParams& params, const AggregateTransaction& tx,
                           const TxPolicy& policy) {
    if (!kernels_range_proofs_ok(params, tx.kernels)) return TxCheck::range_proofs;
    if (!is_balanced_aggregate(params, tx)) return TxCheck::balance;
    if (!kernels_signatures_ok(params, tx.kernels, policy)) return TxCheck::signature;
    return TxCheck::ok;
}

Block genesis_block() {
    Block b;
    b.genesis = true;
    return b;
}

Block empty_block() { return Block{}; }

Block block_from_aggregate(const AggregateTransaction& tx) {
    return Block{tx.inputs, tx.outputs, tx.kernels, tx.tko, false, Scalar{0}};
}

Block block_aggregate(const GroupParams& params, const Transaction& t0, const Block& b,
                      const TxPolicy& policy) {
    if (b.genesis)
        throw TxError(TxError::Code::invalid_operand, "block_aggregate: genesis is immutable");
    if (validate_transaction(params, t0, policy) != TxCheck::ok)
        throw TxError(TxError::Code::invalid_operand, "block_aggregate: invalid transaction");
    if (validate_block(params, b, policy) != BlockCheck::ok)
        throw TxError(TxError::Code::invalid_operand, "block_aggregate: invalid block");
    for (const auto& o : t0.outputs)
        for (const auto& bo : b.outputs)
            if (o.c == bo.c)
                throw TxError(TxError::Code::invalid_operand,
                              "block_aggregate: duplicate output commitment");

    Block out;
    out.inputs = t0.inputs;
    out.inputs.insert(out.inputs.end(), b.inputs.begin(), b.inputs.end());
    out.outputs = t0.outputs;
    out.outputs.insert(out.outputs.end(), b.outputs.begin(), b.outputs.end());
    out.kernels.push_back(t0.kernel);
    out.kernels.insert(out.kernels.end(), b.kernels.begin(), b.kernels.end());
    out.ko = s_add(params, t0.tko, b.ko);
    out.supply = b.supply;
    return out;
}

bool is_balanced_block(const GroupParams& params, const Block& b) {
    GroupElement lhs =
        sub(params, sum_outputs(params, b.outputs), sum_commitments(params, b.inputs));
    GroupElement rhs =
        add(params, scalar_mul(params, b.ko, params.G), sum_excesses(params, b.kernels));
    rhs = add(params, rhs, scalar_mul(params, b.supply, params.H));
    return lhs == rhs;
}

BlockCheck validate_block(const GroupParams& params, const Block& b, const TxPolicy& policy) {
    if (b.genesis) return b == genesis_block() ? BlockCheck::ok : BlockCheck::balance;
    if (!is_balanced_block(params, b)) return BlockCheck::balance;
    if (!kernels_range_proofs_ok(params, b.kernels)) return BlockCheck::range_proofs;
    if (!kernels_signatures_ok(params, b.kernels, policy)) return BlockCheck::signature;
    return BlockCheck::ok;
}

Block cut_through(const Block& b) {
    // Pairwise cancellation: each input knocks out the first uncancelled
    // matching output. Duplicate commitments cancel one-for-one so the
    // sums stay consistent.
    std::vector<bool> out_cancelled(b.outputs.size(), false);
    std::vector<bool> in_cancelled(b.inputs.size(), false);
    for (size_t i = 0; i < b.inputs.size(); ++i) {
        for (size_t j = 0; j < b.outputs.size(); ++j) {
            if (!out_cancelled[j] && b.outputs[j].c == b.inputs[i]) {
                out_cancelled[j] = true;
                in_cancelled[i] = true;
                break;
            }
        }
    }
    Block out;
    for (size_t i = 0; i < b.inputs.size(); ++i)
        if (!in_cancelled[i]) out.inputs.push_back(b.inputs[i]);
    for (size_t j = 0; j < b.outputs.size(); ++j)
        if (!out_cancelled[j]) out.outputs.push_back(b.outputs[j]);
    out.kernels = b.kernels;
    out.ko = b.ko;
    out.genesis = b.genesis;
    out.supply = b.supply;
    return out;
}

}  // namespace mw
