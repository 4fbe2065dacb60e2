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

#include "mwk/consensus.hpp"

namespace mw {

using Tick = uint64_t;

enum class Topology { clique, ring, random_p };

struct DandelionConfig {
    bool enabled = false;
    double coin_p = 0.5;    // probability the stem continues one more hop
    uint32_t max_stem = 16; // forced fluff after this many relays
};

struct BeamDummyConfig {
    bool enabled = false;
    uint32_t incubation_min = 1;
    uint32_t incubation_max = 5;
};

struct LatencyModel {
    enum class Kind { fixed, uniform };
    Kind kind = Kind::fixed;
    Tick fixed = 1;
    Tick lo = 1;
    Tick hi = 1;
};

struct SimConfig {
    uint32_t n_nodes = 2;
    Topology topology = Topology::clique;
    double random_p = 0.5;  // edge probability for Topology::random_p
    LatencyModel latency;
    double loss_probability = 0.0;
    uint64_t seed = 0;
    DandelionConfig dandelion;
    BeamDummyConfig beam_dummy;
    uint64_t max_events = 2'000'000;  // guard against non-terminating configs

    Backend backend = Backend::tiny;
    TinyConstants tiny;
    ChainPolicy policy;
    bool round_robin_mint = true;
    bool log_events = false;
};

/// Timed scenario entry. submit_tx with no explicit transaction makes a
/// fresh zero-value transaction at the node (spendable nowhere, mineable
/// everywhere, so scenarios need no pre-seeded coins).
struct Injection {
    Tick at = 0;
    enum class Action { connect, submit_tx, mint } action = Action::submit_tx;
    static constexpr Addr kAllNodes = UINT32_MAX;
    Addr node = 0;
    Addr peer = 0;                  // connect target
    std::optional<Tx> tx;           // submit_tx payload
};

using Scenario = std::vector<Injection>;

/// Per-transaction broadcast trace for the untraceability probe and the
/// dummy-output audit.
struct TxTrace {
    Addr origin = 0;
    Addr first_fluff = 0;
    uint32_t stem_hops = 0;
    bool dummy_added = false;
    bool dummy_is_zero = false;     // the added output committed to value 0
    uint32_t outputs_before = 0;    // as submitted
    uint32_t outputs_after = 0;     // as broadcast
    bool aggregate_valid = false;   // checked right before broadcast
};

struct SimReport {
    std::vector<std::string> ledger_hashes;  // per node, hex
    bool ledgers_agree = false;
    bool mempools_agree = false;
    Tick quiescence_tick = 0;
    Tick last_ledger_change = 0;
    uint64_t events_processed = 0;
    uint64_t packets_sent = 0;
    uint64_t packets_delivered = 0;
    uint64_t packets_dropped = 0;
    uint64_t tx_msgs_sent = 0;
    std::vector<uint32_t> peer_counts;  // per node at quiescence
    std::map<uint32_t, uint64_t> stem_histogram;  // stem hops -> tx count
    std::vector<TxTrace> tx_traces;
    double untraceable_fraction = 0.0;  // first fluff != origin
    std::vector<std::string> event_log;
};

/// Discrete-event run: pops the earliest packet, applies rcv at the
/// destination, schedules outputs under the latency/loss model, and
/// interleaves scenario injections by timestamp. Returns at quiescence
/// (empty soup, injections exhausted).
SimReport run(const SimConfig& cfg, const Scenario& scenario);

/// Measured untraceability metric of a finished run.
double untraceability_probe(const SimReport& report);

}  // namespace mw
