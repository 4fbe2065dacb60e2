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

#include <vector>

#include "mwk/rangeproof.hpp"
#include "mwk/schnorr.hpp"

namespace mw {

/// Transaction output: the commitment plus an optional incubation period
/// (minimum block distance before it may be spent; 0 = immediately
/// spendable). Incubation rides outside the commitment.
struct Output {
    Commitment c;
    uint32_t incubation = 0;
    bool operator==(const Output&) const = default;
};

/// tk = {rp, ke, sigma}: the range proofs of the transaction's outputs,
/// the excess (sum of output blindings minus input blindings minus the
/// offset, times G) which doubles as the signature public key, and the
/// kernel signature itself.
struct TxKernel {
    std::vector<RangeProof> rp;
    GroupElement ke;
    SchnorrSig sigma;
    bool operator==(const TxKernel&) const = default;
};

struct Transaction {
    std::vector<Commitment> inputs;
    std::vector<Output> outputs;
    TxKernel kernel;
    Scalar tko{0};
    bool operator==(const Transaction&) const = default;
};

/// Knobs shared by builders and validators. incubation_enabled switches
/// the kernel-signature message from the empty string to a digest of the
/// kernel's own range-proof payloads (which carry the incubation tags),
/// so the binding survives aggregation.
struct TxPolicy {
    uint32_t range_bits = 16;
    RangeProofKind proof_kind = RangeProofKind::bits;
    bool incubation_enabled = false;
};

/// Validity clauses, checked in order: (i) range proofs, (ii) balance,
/// (iii) kernel signature.
enum class TxCheck { ok, range_proofs, balance, signature };
const char* clause_name(TxCheck c);  // "i" / "ii" / "iii"

struct TxError : std::runtime_error {
    enum class Code { value_imbalance, value_out_of_range, invalid_operand };
    TxError(Code c, const std::string& what) : std::runtime_error(what), code(c) {}
    Code code;
};

/// Message the kernel signature covers under the given policy.
Bytes kernel_message(const TxPolicy& policy, const TxKernel& k);

/// Two-party construction flow: the sender contributes inputs, the
/// recipient contributes outputs and their blindings, someone picks the
/// offset. The built transaction is balanced by construction.
class TxBuilder {
public:
    TxBuilder& add_input(const Opening& o);
    TxBuilder& add_output(const Opening& o, uint32_t incubation = 0);
    TxBuilder& set_offset(const Scalar& tko);

    /// Throws TxError on value imbalance or out-of-range output values.
    Transaction build(const GroupParams& params, const TxPolicy& policy, Rng& rng) const;

private:
    std::vector<Opening> inputs_;
    std::vector<std::pair<Opening, uint32_t>> outputs_;
    Scalar tko_{0};
};

Transaction build_transaction(const GroupParams& params, const std::vector<Opening>& in_openings,
                              const std::vector<Opening>& out_openings, const Scalar& tko,
                              const TxPolicy& policy, Rng& rng);

/// Sum(outputs) - Sum(inputs) == ke + tko.G, public data only.
bool is_balanced(const GroupParams& params, const Transaction& t);

TxCheck validate_transaction(const GroupParams& params, const Transaction& t,
                             const TxPolicy& policy = {});

// Commitment-list sums shared with the block module.
GroupElement sum_commitments(const GroupParams& params, const std::vector<Commitment>& cs);
GroupElement sum_outputs(const GroupParams& params, const std::vector<Output>& os);

}  // namespace mw
