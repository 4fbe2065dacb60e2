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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "mwk/bytes.hpp"
#include "mwk/rng.hpp"

namespace mw {

using BigInt = boost::multiprecision::cpp_int;

enum class Backend { tiny, curve };

/// Element of the scalar field F_n. Always kept reduced mod the group
/// order of the params it was created with.
struct Scalar {
    BigInt v;
    bool operator==(const Scalar&) const = default;
    bool operator<(const Scalar& o) const { return v < o.v; }
};

/// Group element. Tiny backend: a residue of the additive group Z_n,
/// stored in x (identity is 0). Curve backend: an affine secp256k1 point,
/// identity is the point at infinity.
struct GroupElement {
    bool inf = false;
    BigInt x;
    BigInt y;
    bool operator==(const GroupElement&) const = default;
};

/// Tiny-backend constants, loadable from config (keys group.n, group.G,
/// group.H, group.J). Defaults match the smallest prime the tiny group
/// accepts.
struct TinyConstants {
    uint64_t n = 23;
    uint64_t G = 5;
    uint64_t H = 7;
    uint64_t J = 11;
};

struct GroupParams {
    Backend backend = Backend::tiny;
    BigInt n;  // group order, prime
    GroupElement G;
    GroupElement H;
    GroupElement J;
    // Curve backend only: field prime and Weierstrass constant of
    // y^2 = x^3 + b.
    BigInt p;
    BigInt b;
};

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Public-parameter generation. Deterministic for a given (backend, seed);
/// the curve backend is a fixed standard curve, so the seed is accepted
/// but has nothing to vary.
GroupParams setup(Backend backend, uint64_t seed, const TinyConstants& tiny = {});

GroupElement identity(const GroupParams& params);
bool is_identity(const GroupParams& params, const GroupElement& P);
bool on_group(const GroupParams& params, const GroupElement& P);

GroupElement add(const GroupParams& params, const GroupElement& A, const GroupElement& B);
GroupElement negate(const GroupParams& params, const GroupElement& A);
GroupElement sub(const GroupParams& params, const GroupElement& A, const GroupElement& B);
GroupElement scalar_mul(const GroupParams& params, const Scalar& k, const GroupElement& P);

// Scalar field arithmetic, mod n.
Scalar make_scalar(const GroupParams& params, const BigInt& v);
Scalar scalar_from_u64(const GroupParams& params, uint64_t v);
Scalar s_add(const GroupParams& params, const Scalar& a, const Scalar& b);
Scalar s_sub(const GroupParams& params, const Scalar& a, const Scalar& b);
Scalar s_mul(const GroupParams& params, const Scalar& a, const Scalar& b);
Scalar s_neg(const GroupParams& params, const Scalar& a);
Scalar s_inv(const GroupParams& params, const Scalar& a);  // throws on zero

/// Canonical encodings; decode(encode(x)) == x bit-exactly.
/// Tiny: 8-byte big-endian residue / scalar. Curve: 33-byte compressed
/// point (single 0x00 byte for the identity) / 32-byte big-endian scalar.
Bytes encode(const GroupParams& params, const GroupElement& P);
GroupElement decode_element(const GroupParams& params, BytesView data);
Bytes encode(const GroupParams& params, const Scalar& s);
Scalar decode_scalar(const GroupParams& params, BytesView data);

/// SHA-256 of the input, read big-endian, reduced mod n.
Scalar hash_to_scalar(const GroupParams& params, BytesView data);

Scalar random_scalar(const GroupParams& params, Rng& rng);

/// Exhaustive discrete log, tiny backend only (throws GroupError on the
/// curve backend). Returns nullopt when base is the identity and Q is not.
std::optional<Scalar> brute_force_dlog(const GroupParams& params, const GroupElement& Q,
                                       const GroupElement& base);

}  // namespace mw
