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

#include "mwk/commit.hpp"

namespace mw {

/// Proof that a commitment hides a value in [0, 2^bits), without the
/// opening. Two constructions behind one interface:
///
///   bits  — per-bit Pedersen commitments, each with a two-branch OR
///           Schnorr proof that the bit is 0 or 1; the 2^j-weighted sum
///           of the bit commitments re-derives the target. The payload
///           is self-describing: it embeds the target commitment (and
///           its incubation tag), so it stays checkable inside a kernel
///           after aggregation and cut-through.
///   stub  — opaque token backed by an in-process oracle registry; cheap
///           placeholder for tests that don't exercise proof math.
enum class RangeProofKind { stub, bits };

struct RangeProof {
    RangeProofKind kind = RangeProofKind::bits;
    Bytes payload;
    bool operator==(const RangeProof&) const = default;
};

struct RangeProofError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Builds a proof for commit-mode `mode` over opening `o`.
/// Throws RangeProofError when v is outside [0, 2^bits) or bits is 0.
RangeProof make_range_proof(const GroupParams& params, const Opening& o, uint32_t bits,
                            RangeProofKind kind, Rng& rng, CommitMode mode = CommitMode::plain,
                            uint32_t incubation = 0);

/// Checks the proof against a caller-supplied commitment.
bool verify_range_proof(const GroupParams& params, const Commitment& c, const RangeProof& rp);

/// Checks the proof against the target embedded in its own payload.
bool verify_range_proof_embedded(const GroupParams& params, const RangeProof& rp);

/// Target commitment recorded in the payload (or the stub registry);
/// nullopt for unknown stub tokens or malformed payloads.
std::optional<Commitment> range_proof_target(const GroupParams& params, const RangeProof& rp);

/// Incubation tag bound into the proof; 0 when absent/unknown.
uint32_t range_proof_incubation(const GroupParams& params, const RangeProof& rp);

/// Clears the stub-kind oracle registry (test isolation).
void stub_oracle_reset();

}  // namespace mw
