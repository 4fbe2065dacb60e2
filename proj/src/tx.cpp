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

#include "mwk/tx.hpp"

namespace mw {

const char* clause_name(TxCheck c) {
    switch (c) {
        case TxCheck::ok: return "ok";
        case TxCheck::range_proofs: return "i";
        case TxCheck::balance: return "ii";
        case TxCheck::signature: return "iii";
    }
    return "?";
}

Bytes kernel_message(const TxPolicy& policy, const TxKernel& k) {
    if (!policy.incubation_enabled) return Bytes{};
    ByteWriter w;
    w.str("mwkit/v1/kernel-msg");
    for (const auto& rp : k.rp) w.blob(sha256(rp.payload));
    return w.take();
}

TxBuilder& TxBuilder::add_input(const Opening& o) {
    inputs_.push_back(o);
    return *this;
}

TxBuilder& TxBuilder::add_output(const Opening& o, uint32_t incubation) {
    outputs_.emplace_back(o, incubation);
    return *this;
}

TxBuilder& TxBuilder::set_offset(const Scalar& tko) {
    tko_ = tko;
    return *this;
}

Transaction TxBuilder::build(const GroupParams& params, const TxPolicy& policy, Rng& rng) const {
    Scalar v_in{0}, v_out{0}, r_in{0}, r_out{0};
    for (const auto& o : inputs_) {
        v_in = s_add(params, v_in, o.v);
        r_in = s_add(params, r_in, o.r);
    }
    for (const auto& [o, inc] : outputs_) {
        v_out = s_add(params, v_out, o.v);
        r_out = s_add(params, r_out, o.r);
        if (o.v.v >> policy.range_bits != 0)
            throw TxError(TxError::Code::value_out_of_range, "output value out of range");
    }
    if (!(v_in == v_out))
        throw TxError(TxError::Code::value_imbalance, "output values do not match input values");

    Transaction t;
    t.tko = tko_;
    for (const auto& o : inputs_) t.inputs.push_back(commit(params, o));
    for (const auto& [o, inc] : outputs_) {
        t.outputs.push_back(Output{commit(params, o), policy.incubation_enabled ? inc : 0});
        t.kernel.rp.push_back(make_range_proof(params, o, policy.range_bits, policy.proof_kind,
                                               rng, CommitMode::plain,
                                               policy.incubation_enabled ? inc : 0));
    }

    Scalar excess = s_sub(params, s_sub(params, r_out, r_in), tko_);
    t.kernel.ke = scalar_mul(params, excess, params.G);
    t.kernel.sigma = sign_kernel(params, excess, kernel_message(policy, t.kernel));
    return t;
}

Transaction build_transaction(const GroupParams& params, const std::vector<Opening>& in_openings,
                              const std::vector<Opening>& out_openings, const Scalar& tko,
                              const TxPolicy& policy, Rng& rng) {
    TxBuilder b;
    for (const auto& o : in_openings) b.add_input(o);
    for (const auto& o : out_openings) b.add_output(o);
    b.set_offset(tko);
    return b.build(params, policy, rng);
}

GroupElement sum_commitments(const GroupParams& params, const std::vector<Commitment>& cs) {
    GroupElement acc = identity(params);
    for (const auto& c : cs) acc = add(params, acc, c.point);
    return acc;
}

GroupElement sum_outputs(const GroupParams& params, const std::vector<Output>& os) {
    GroupElement acc = identity(params);
    for (const auto& o : os) acc = add(params, acc, o.c.point);
    return acc;
}

bool is_balanced(const GroupParams& params, const Transaction& t) {
    GroupElement lhs = sub(params, sum_outputs(params, t.outputs), sum_commitments(params, t.inputs));
    GroupElement rhs = add(params, t.kernel.ke, scalar_mul(params, t.tko, params.G));
    return lhs == rhs;
}

TxCheck validate_transaction(const GroupParams& params, const Transaction& t,
                             const TxPolicy& policy) {
    // (i) one valid range proof per output, in position, carrying the
    // output's incubation tag.
    if (t.kernel.rp.size() != t.outputs.size()) return TxCheck::range_proofs;
    for (size_t j = 0; j < t.outputs.size(); ++j) {
        const RangeProof& rp = t.kernel.rp[j];
        if (!verify_range_proof(params, t.outputs[j].c, rp)) return TxCheck::range_proofs;
        if (range_proof_incubation(params, rp) != t.outputs[j].incubation)
            return TxCheck::range_proofs;
    }
    // (ii) balance.
    if (!is_balanced(params, t)) return TxCheck::balance;
    // (iii) kernel signature for the excess.
    if (!verify_kernel(params, t.kernel.ke, kernel_message(policy, t.kernel), t.kernel.sigma))
        return TxCheck::signature;
    return TxCheck::ok;
}

}  // namespace mw
