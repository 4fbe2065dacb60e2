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

#include "mwk/schnorr.hpp"

namespace mw {

static Scalar challenge(const GroupParams& g, const GroupElement& R, const GroupElement& P,
                        BytesView msg) {
    ByteWriter w;
    w.str("mwkit/v1/schnorr");
    w.blob(encode(g, R));
    w.blob(encode(g, P));
    w.blob(msg);
    return hash_to_scalar(g, w.bytes());
}

static SchnorrSig sign_with_nonce(const GroupParams& g, const Scalar& secret, BytesView msg,
                                  const Scalar& k) {
    GroupElement R = scalar_mul(g, k, g.G);
    GroupElement P = scalar_mul(g, secret, g.G);
    Scalar e = challenge(g, R, P, msg);
    return SchnorrSig{R, s_add(g, k, s_mul(g, e, secret))};
}

SchnorrSig sign_kernel(const GroupParams& params, const Scalar& secret, BytesView msg) {
    ByteWriter w;
    w.str("mwkit/v1/nonce");
    w.blob(encode(params, secret));
    w.blob(msg);
    return sign_with_nonce(params, secret, msg, hash_to_scalar(params, w.bytes()));
}

SchnorrSig sign_kernel(const GroupParams& params, const Scalar& secret, BytesView msg, Rng& rng) {
    return sign_with_nonce(params, secret, msg, random_scalar(params, rng));
}

bool verify_kernel(const GroupParams& params, const GroupElement& pubkey, BytesView msg,
                   const SchnorrSig& sig) {
    if (!on_group(params, pubkey) || !on_group(params, sig.R)) return false;
    Scalar e = challenge(params, sig.R, pubkey, msg);
    GroupElement lhs = scalar_mul(params, sig.s, params.G);
    GroupElement rhs = add(params, sig.R, scalar_mul(params, e, pubkey));
    return lhs == rhs;
}

}  // namespace mw
