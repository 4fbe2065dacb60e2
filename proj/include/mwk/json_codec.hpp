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

#include <json.hpp>

#include "mwk/secgames.hpp"
#include "mwk/simnet.hpp"

namespace mw {

using Json = nlohmann::json;

struct JsonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scalars and group elements travel as hex strings.
Json to_json(const GroupParams& g, const Scalar& s);
Scalar scalar_from_json(const GroupParams& g, const Json& j);

Json to_json(const GroupParams& g, const Commitment& c);
Commitment commitment_from_json(const GroupParams& g, const Json& j);

Json to_json(const GroupParams& g, const Output& o);
Output output_from_json(const GroupParams& g, const Json& j);

Json to_json(const GroupParams& g, const RangeProof& rp);
RangeProof range_proof_from_json(const Json& j);

Json to_json(const GroupParams& g, const TxKernel& k);
TxKernel kernel_from_json(const GroupParams& g, const Json& j);

Json to_json(const GroupParams& g, const Transaction& t);
Transaction transaction_from_json(const GroupParams& g, const Json& j);

Json to_json(const GroupParams& g, const AggregateTransaction& t);
AggregateTransaction aggregate_from_json(const GroupParams& g, const Json& j);

Json to_json(const GroupParams& g, const Block& b);
Block block_from_json(const GroupParams& g, const Json& j);

/// Chain files are JSON lines, one block per line, genesis first.
std::string chain_to_lines(const GroupParams& g, const Chain& c);
Chain chain_from_lines(const GroupParams& g, const std::string& text);

Json to_json(const GroupParams& g, const CBlock& b);
CBlock cblock_from_json(const GroupParams& g, const Json& j);

Json to_json(const GroupParams& g, const Msg& m);
Msg msg_from_json(const GroupParams& g, const Json& j);  // rejects unknown tags

Json to_json(const GroupParams& g, const Packet& p);
Packet packet_from_json(const GroupParams& g, const Json& j);

Json to_json(const GroupParams& g, const LocState& st);
LocState locstate_from_json(const GroupParams& g, const Json& j);

Json to_json(const SimReport& r);

Json to_json(const GameResult& r);

/// Top-level CLI/simulator configuration. Unknown keys are rejected.
struct CliConfig {
    Backend backend = Backend::tiny;
    TinyConstants tiny;
    ChainPolicy policy;
    uint64_t seed = 0;
};

CliConfig cli_config_from_json(const Json& j);

SimConfig sim_config_from_json(const Json& j);  // unknown keys rejected
Scenario scenario_from_json(const GroupParams& g, const Json& j);

}  // namespace mw
