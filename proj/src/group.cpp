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

#include "mwk/group.hpp"

#include <boost/multiprecision/integer.hpp>

namespace mw {

namespace {

// secp256k1: y^2 = x^3 + 7 over F_p, prime group order n.
const char* kSecpP = "0xfffffffffffffffffffffffffffffffffffffffffffffffffffffffefffffc2f";
const char* kSecpN = "0xfffffffffffffffffffffffffffffffebaaedce6af48a03bbfd25e8cd0364141";
const char* kSecpGx = "0x79be667ef9dcbbac55a06295ce870b07029bfcdb2dce28d959f2815b16f81798";
const char* kSecpGy = "0x483ada7726a3c4655da4fbfc0e1108a8fd17b448a68554199c47d08ffb10d4b8";

BigInt mod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

BigInt mod_inv(const BigInt& a, const BigInt& m) {
    // m prime throughout this file.
    return boost::multiprecision::powm(mod(a, m), m - 2, m);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---- curve arithmetic (affine + Jacobian for the multiply ladder) ----

struct Jac {
    BigInt x, y, z;  // z == 0 encodes infinity
};

Jac to_jac(const GroupElement& P) {
    if (P.inf) return {0, 1, 0};
    return {P.x, P.y, 1};
}

GroupElement from_jac(const GroupParams& g, const Jac& P) {
    if (P.z == 0) return GroupElement{true, 0, 0};
    BigInt zi = mod_inv(P.z, g.p);
    BigInt zi2 = mod(zi * zi, g.p);
    return GroupElement{false, mod(P.x * zi2, g.p), mod(P.y * zi2 * zi, g.p)};
}

Jac jac_double(const GroupParams& g, const Jac& P) {
    if (P.z == 0 || P.y == 0) return {0, 1, 0};
    const BigInt& p = g.p;
    BigInt ysq = mod(P.y * P.y, p);
    BigInt s = mod(4 * P.x * ysq, p);
    BigInt m = mod(3 * P.x * P.x, p);  // a == 0
    BigInt nx = mod(m * m - 2 * s, p);
    BigInt ny = mod(m * (s - nx) - 8 * ysq * ysq, p);
    BigInt nz = mod(2 * P.y * P.z, p);
    return {nx, ny, nz};
}

Jac jac_add(const GroupParams& g, const Jac& P, const Jac& Q) {
    if (P.z == 0) return Q;
    if (Q.z == 0) return P;
    const BigInt& p = g.p;
    BigInt z1z1 = mod(P.z * P.z, p);
    BigInt z2z2 = mod(Q.z * Q.z, p);
    BigInt u1 = mod(P.x * z2z2, p);
    BigInt u2 = mod(Q.x * z1z1, p);
    BigInt s1 = mod(P.y * z2z2 * Q.z, p);
    BigInt s2 = mod(Q.y * z1z1 * P.z, p);
    if (u1 == u2) {
        if (s1 != s2) return {0, 1, 0};
        return jac_double(g, P);
    }
    BigInt h = mod(u2 - u1, p);
    BigInt hh = mod(h * h, p);
    BigInt hhh = mod(h * hh, p);
    BigInt r = mod(s2 - s1, p);
    BigInt v = mod(u1 * hh, p);
    BigInt nx = mod(r * r - hhh - 2 * v, p);
    BigInt ny = mod(r * (v - nx) - s1 * hhh, p);
    BigInt nz = mod(h * P.z * Q.z, p);
    return {nx, ny, nz};
}

bool curve_contains(const GroupParams& g, const GroupElement& P) {
    if (P.inf) return true;
    if (P.x < 0 || P.x >= g.p || P.y < 0 || P.y >= g.p) return false;
    return mod(P.y * P.y - (P.x * P.x * P.x + g.b), g.p) == 0;
}

BigInt bytes_to_bigint(BytesView data) {
    BigInt v = 0;
    for (uint8_t b : data) v = (v << 8) | b;
    return v;
}

Bytes bigint_to_bytes(const BigInt& v, size_t width) {
    Bytes out(width, 0);
    BigInt t = v;
    for (size_t i = 0; i < width; ++i) {
        out[width - 1 - i] = static_cast<uint8_t>(t & 0xff);
        t >>= 8;
    }
    if (t != 0) throw GroupError("value does not fit encoding width");
    return out;
}

// Hash-to-curve by try-and-increment over a domain tag; p = 3 mod 4 so the
// square root is a single exponent. Even-y branch keeps it canonical.
GroupElement derive_curve_point(const GroupParams& g, const std::string& tag) {
    for (uint32_t ctr = 0;; ++ctr) {
        ByteWriter w;
        w.str(tag);
        w.u32(ctr);
        BigInt x = mod(bytes_to_bigint(sha256(w.bytes())), g.p);
        BigInt rhs = mod(x * x * x + g.b, g.p);
        BigInt y = boost::multiprecision::powm(rhs, (g.p + 1) / 4, g.p);
        if (mod(y * y, g.p) != rhs) continue;  // not a quadratic residue
        if (y % 2 != 0) y = g.p - y;
        GroupElement P{false, x, y};
        if (curve_contains(g, P) && !P.inf) return P;
    }
}

size_t scalar_width(const GroupParams& g) { return g.backend == Backend::tiny ? 8 : 32; }

}  // namespace

GroupParams setup(Backend backend, uint64_t /*seed*/, const TinyConstants& tiny) {
    GroupParams g;
    g.backend = backend;
    switch (backend) {
        case Backend::tiny: {
            if (tiny.n < 23 || !is_prime_u64(tiny.n))
                throw GroupError("tiny group order must be a prime >= 23");
            if (tiny.n >> 62 != 0) throw GroupError("tiny group order too large");
            g.n = tiny.n;
            g.G = GroupElement{false, tiny.G % tiny.n, 0};
            g.H = GroupElement{false, tiny.H % tiny.n, 0};
            g.J = GroupElement{false, tiny.J % tiny.n, 0};
            break;
        }
        case Backend::curve: {
            g.p = BigInt(kSecpP);
            g.n = BigInt(kSecpN);
            g.b = 7;
            g.G = GroupElement{false, BigInt(kSecpGx), BigInt(kSecpGy)};
            g.H = derive_curve_point(g, "mwkit/v1/generator/H");
            g.J = derive_curve_point(g, "mwkit/v1/generator/J");
            break;
        }
        default:
            throw GroupError("unsupported backend id");
    }
    if (is_identity(g, g.G) || is_identity(g, g.H) || is_identity(g, g.J))
        throw GroupError("generator is the identity");
    if (g.G == g.H || g.G == g.J || g.H == g.J)
        throw GroupError("generators must be pairwise distinct");
    return g;
}

GroupElement identity(const GroupParams& params) {
    if (params.backend == Backend::tiny) return GroupElement{false, 0, 0};
    return GroupElement{true, 0, 0};
}

bool is_identity(const GroupParams& params, const GroupElement& P) {
    return P == identity(params);
}

bool on_group(const GroupParams& params, const GroupElement& P) {
    if (params.backend == Backend::tiny) return !P.inf && P.x >= 0 && P.x < params.n && P.y == 0;
    return curve_contains(params, P);
}

GroupElement add(const GroupParams& params, const GroupElement& A, const GroupElement& B) {
    if (params.backend == Backend::tiny) return GroupElement{false, mod(A.x + B.x, params.n), 0};
    return from_jac(params, jac_add(params, to_jac(A), to_jac(B)));
}

GroupElement negate(const GroupParams& params, const GroupElement& A) {
    if (params.backend == Backend::tiny) return GroupElement{false, mod(-A.x, params.n), 0};
    if (A.inf) return A;
    return GroupElement{false, A.x, mod(-A.y, params.p)};
}

GroupElement sub(const GroupParams& params, const GroupElement& A, const GroupElement& B) {
    return add(params, A, negate(params, B));
}

GroupElement scalar_mul(const GroupParams& params, const Scalar& k, const GroupElement& P) {
    BigInt e = mod(k.v, params.n);
    if (params.backend == Backend::tiny) return GroupElement{false, mod(e * P.x, params.n), 0};
    Jac acc{0, 1, 0};
    Jac base = to_jac(P);
    for (int i = static_cast<int>(boost::multiprecision::msb(e == 0 ? BigInt(1) : e)); i >= 0; --i) {
        acc = jac_double(params, acc);
        if (e != 0 && boost::multiprecision::bit_test(e, static_cast<unsigned>(i)))
            acc = jac_add(params, acc, base);
    }
    return from_jac(params, acc);
}

Scalar make_scalar(const GroupParams& params, const BigInt& v) { return Scalar{mod(v, params.n)}; }

Scalar scalar_from_u64(const GroupParams& params, uint64_t v) {
    return make_scalar(params, BigInt(v));
}

Scalar s_add(const GroupParams& params, const Scalar& a, const Scalar& b) {
    return make_scalar(params, a.v + b.v);
}

Scalar s_sub(const GroupParams& params, const Scalar& a, const Scalar& b) {
    return make_scalar(params, a.v - b.v);
}

Scalar s_mul(const GroupParams& params, const Scalar& a, const Scalar& b) {
    return make_scalar(params, a.v * b.v);
}

Scalar s_neg(const GroupParams& params, const Scalar& a) { return make_scalar(params, -a.v); }

Scalar s_inv(const GroupParams& params, const Scalar& a) {
    if (mod(a.v, params.n) == 0) throw GroupError("inverse of zero scalar");
    return Scalar{mod_inv(a.v, params.n)};
}

Bytes encode(const GroupParams& params, const GroupElement& P) {
    if (params.backend == Backend::tiny) return bigint_to_bytes(P.x, 8);
    if (P.inf) return Bytes{0x00};
    Bytes out;
    out.reserve(33);
    out.push_back(P.y % 2 == 0 ? 0x02 : 0x03);
    Bytes xb = bigint_to_bytes(P.x, 32);
    out.insert(out.end(), xb.begin(), xb.end());
    return out;
}

GroupElement decode_element(const GroupParams& params, BytesView data) {
    if (params.backend == Backend::tiny) {
        if (data.size() != 8) throw GroupError("tiny element encoding must be 8 bytes");
        BigInt x = bytes_to_bigint(data);
        if (x >= params.n) throw GroupError("tiny element out of range");
        return GroupElement{false, x, 0};
    }
    if (data.size() == 1 && data[0] == 0x00) return GroupElement{true, 0, 0};
    if (data.size() != 33 || (data[0] != 0x02 && data[0] != 0x03))
        throw GroupError("bad curve point encoding");
    BigInt x = bytes_to_bigint(data.subspan(1));
    if (x >= params.p) throw GroupError("curve x out of range");
    BigInt rhs = mod(x * x * x + params.b, params.p);
    BigInt y = boost::multiprecision::powm(rhs, (params.p + 1) / 4, params.p);
    if (mod(y * y, params.p) != rhs) throw GroupError("x not on curve");
    if ((y % 2 == 0) != (data[0] == 0x02)) y = params.p - y;
    return GroupElement{false, x, y};
}

Bytes encode(const GroupParams& params, const Scalar& s) {
    return bigint_to_bytes(mod(s.v, params.n), scalar_width(params));
}

Scalar decode_scalar(const GroupParams& params, BytesView data) {
    if (data.size() != scalar_width(params)) throw GroupError("bad scalar encoding length");
    BigInt v = bytes_to_bigint(data);
    if (v >= params.n) throw GroupError("scalar out of range");
    return Scalar{v};
}

Scalar hash_to_scalar(const GroupParams& params, BytesView data) {
    return make_scalar(params, bytes_to_bigint(sha256(data)));
}

Scalar random_scalar(const GroupParams& params, Rng& rng) {
    size_t bits = boost::multiprecision::msb(params.n) + 1;
    size_t chunks = (bits + 63) / 64;
    for (;;) {
        BigInt v = 0;
        for (size_t i = 0; i < chunks; ++i) v = (v << 64) | rng.next_u64();
        v >>= (chunks * 64 - bits);
        if (v < params.n) return Scalar{v};
    }
}

std::optional<Scalar> brute_force_dlog(const GroupParams& params, const GroupElement& Q,
                                       const GroupElement& base) {
    if (params.backend != Backend::tiny)
        throw GroupError("brute_force_dlog is a tiny-backend test oracle");
    if (is_identity(params, base)) {
        if (is_identity(params, Q)) return Scalar{0};
        return std::nullopt;
    }
    // Exhaustive walk; O(n) on purpose, this is the independent oracle.
    GroupElement acc = identity(params);
    for (BigInt k = 0; k < params.n; ++k) {
        if (acc == Q) return Scalar{k};
        acc = add(params, acc, base);
    }
    return std::nullopt;
}

}  // namespace mw
