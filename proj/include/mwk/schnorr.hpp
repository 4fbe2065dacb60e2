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

#include "mwk/group.hpp"

namespace mw {

/// Schnorr signature over the group: verifies iff
/// s.G == R + hash(encode(R) || encode(P) || msg).P.
struct SchnorrSig {
    GroupElement R;
    Scalar s;
    bool operator==(const SchnorrSig&) const = default;
};

/// Deterministic nonce (hash of key || msg); the default everywhere so
/// fixtures reproduce bit-exactly.
SchnorrSig sign_kernel(const GroupParams& params, const Scalar& secret, BytesView msg);

/// Random-nonce variant.
SchnorrSig sign_kernel(const GroupParams& params, const Scalar& secret, BytesView msg, Rng& rng);

bool verify_kernel(const GroupParams& params, const GroupElement& pubkey, BytesView msg,
                   const SchnorrSig& sig);

}  // namespace mw
