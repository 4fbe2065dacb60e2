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

#include <functional>

#include "mwk/group.hpp"

namespace mw {

/// (value, blinding factor) pair that opens a commitment.
struct Opening {
    Scalar v;
    Scalar r;
    bool operator==(const Opening&) const = default;
};

enum class CommitMode { plain, switch_ };

/// Pedersen commitment point, tagged with the validation scheme it was
/// produced under so verifiers know which equation to check.
struct Commitment {
    GroupElement point;
    CommitMode mode = CommitMode::plain;
    bool operator==(const Commitment&) const = default;
};

/// Com(v, r) = r.G + v.H.
Commitment commit(const GroupParams& params, const Opening& o);

using HashToScalarFn = std::function<Scalar(const GroupParams&, BytesView)>;

/// Switch-hardened commitment: r'.G + v.H with
/// r' = r + hash(encode(v.H + r.G) || encode(r.J)).
/// The hash is injectable so the degenerate hash == 0 case is testable.
Commitment switch_commit(const GroupParams& params, const Opening& o);
Commitment switch_commit(const GroupParams& params, const Opening& o, const HashToScalarFn& hash);

/// True iff re-committing o under c's mode reproduces c's point.
bool verify_opening(const GroupParams& params, const Commitment& c, const Opening& o);

bool commitment_less(const Commitment& a, const Commitment& b);

}  // namespace mw
