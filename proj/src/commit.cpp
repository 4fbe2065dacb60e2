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

#include "mwk/commit.hpp"

namespace mw {

Commitment commit(const GroupParams& params, const Opening& o) {
    GroupElement pt =
        add(params, scalar_mul(params, o.r, params.G), scalar_mul(params, o.v, params.H));
    return Commitment{pt, CommitMode::plain};
}

static Scalar switch_tweak(const GroupParams& params, const Opening& o,
                           const HashToScalarFn& hash) {
    GroupElement inner =
        add(params, scalar_mul(params, o.v, params.H), scalar_mul(params, o.r, params.G));
    GroupElement rj = scalar_mul(params, o.r, params.J);
    Bytes buf = encode(params, inner);
    Bytes rjb = encode(params, rj);
    buf.insert(buf.end(), rjb.begin(), rjb.end());
    return hash(params, buf);
}

Commitment switch_commit(const GroupParams& params, const Opening& o) {
    return switch_commit(params, o,
                         [](const GroupParams& g, BytesView d) { return hash_to_scalar(g, d); });
}

Commitment switch_commit(const GroupParams& params, const Opening& o, const HashToScalarFn& hash) {
    Scalar r_prime = s_add(params, o.r, switch_tweak(params, o, hash));
    GroupElement pt =
        add(params, scalar_mul(params, r_prime, params.G), scalar_mul(params, o.v, params.H));
    return Commitment{pt, CommitMode::switch_};
}

bool verify_opening(const GroupParams& params, const Commitment& c, const Opening& o) {
    switch (c.mode) {
        case CommitMode::plain:
            return commit(params, o).point == c.point;
        case CommitMode::switch_:
            return switch_commit(params, o).point == c.point;
    }
    return false;
}

bool commitment_less(const Commitment& a, const Commitment& b) {
    if (a.mode != b.mode) return a.mode < b.mode;
    if (a.point.inf != b.point.inf) return a.point.inf < b.point.inf;
    if (a.point.x != b.point.x) return a.point.x < b.point.x;
    return a.point.y < b.point.y;
}

}  // namespace mw
