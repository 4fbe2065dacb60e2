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

#include "mwk/simnet.hpp"

#include <queue>
#include <sstream>

namespace mw {

namespace {

struct Event {
    Tick at = 0;
    uint64_t seq = 0;  // FIFO among equal timestamps
    enum class Kind { deliver, inject, stem } kind = Kind::deliver;
    Packet packet;          // deliver
    size_t injection = 0;   // inject: index into scenario
    // stem: the relayed transaction, where it is, and how far it walked
    Tx stem_tx;
    Addr stem_node = 0;
    uint32_t stem_hops = 0;
    size_t trace = 0;  // index into traces
};

struct EventAfter {
    bool operator()(const Event& a, const Event& b) const {
        if (a.at != b.at) return a.at > b.at;
        return a.seq > b.seq;
    }
};

class Simulator {
public:
    Simulator(const SimConfig& cfg, const Scenario& scenario)
        : cfg_(cfg),
          scenario_(scenario),
          rng_(cfg.seed),
          group_(setup(cfg.backend, cfg.seed, cfg.tiny)),
          cp_(default_consensus_params(group_, cfg.policy,
                                       cfg.round_robin_mint ? cfg.n_nodes : 0)) {}

    SimReport go();

private:
    void seed_topology();
    void schedule(Event ev, Tick delay);
    void send(const Packet& p, Tick now);
    void deliver(const Packet& p, Tick now);
    void inject(const Injection& inj, Tick now);
    void apply_node_result(Addr node, std::pair<LocState, std::vector<Packet>> res, Tick now);
    void start_broadcast(Addr node, Tx tx, Tick now);
    void stem_step(size_t trace, const Tx& tx, Addr node, uint32_t hops, Tick now);
    void fluff(size_t trace, const Tx& tx, Addr node, uint32_t hops, Tick now);
    Tx make_zero_value_tx();
    Tick latency();
    void log(Tick now, const std::string& line);
    std::string ledger_hash(const LocState& st) const;
    void finish(Tick now);

    const SimConfig& cfg_;
    const Scenario& scenario_;
    Rng rng_;
    GroupParams group_;
    ConsensusParams cp_;
    std::vector<LocState> nodes_;
    std::priority_queue<Event, std::vector<Event>, EventAfter> soup_;
    uint64_t seq_ = 0;
    SimReport report_;
    std::vector<std::string> last_hashes_;
    bool forest_dirty_ = false;
};

void Simulator::seed_topology() {
    nodes_.clear();
    for (Addr a = 0; a < cfg_.n_nodes; ++a) nodes_.push_back(init_state(cp_, a));
    auto link = [&](Addr a, Addr b) {
        nodes_[a].peers.insert(b);
        nodes_[b].peers.insert(a);
    };
    switch (cfg_.topology) {
        case Topology::clique:
            for (Addr a = 0; a < cfg_.n_nodes; ++a)
                for (Addr b = a + 1; b < cfg_.n_nodes; ++b) link(a, b);
            break;
        case Topology::ring:
            if (cfg_.n_nodes > 1)
                for (Addr a = 0; a < cfg_.n_nodes; ++a) link(a, (a + 1) % cfg_.n_nodes);
            break;
        case Topology::random_p:
            for (Addr a = 0; a < cfg_.n_nodes; ++a)
                for (Addr b = a + 1; b < cfg_.n_nodes; ++b)
                    if (rng_.coin(cfg_.random_p)) link(a, b);
            break;
    }
}

Tick Simulator::latency() {
    if (cfg_.latency.kind == LatencyModel::Kind::fixed) return cfg_.latency.fixed;
    return rng_.range(cfg_.latency.lo, cfg_.latency.hi);
}

void Simulator::schedule(Event ev, Tick delay) {
    ev.at += delay;
    ev.seq = seq_++;
    soup_.push(std::move(ev));
}

void Simulator::send(const Packet& p, Tick now) {
    report_.packets_sent++;
    if (std::holds_alternative<TxMsg>(p.msg)) report_.tx_msgs_sent++;
    if (cfg_.loss_probability > 0.0 && rng_.coin(cfg_.loss_probability)) {
        report_.packets_dropped++;
        return;
    }
    Event ev;
    ev.at = now;
    ev.kind = Event::Kind::deliver;
    ev.packet = p;
    schedule(std::move(ev), latency());
}

void Simulator::apply_node_result(Addr node, std::pair<LocState, std::vector<Packet>> res,
                                  Tick now) {
    nodes_[node] = std::move(res.first);
    for (const auto& p : res.second) {
        if (p.to >= cfg_.n_nodes) continue;  // unreachable address: dropped
        send(p, now);
    }
}

void Simulator::deliver(const Packet& p, Tick now) {
    report_.packets_delivered++;
    if (p.to >= cfg_.n_nodes) return;
    if (std::holds_alternative<BlockMsg>(p.msg)) forest_dirty_ = true;
    apply_node_result(p.to, rcv(cp_, nodes_[p.to], p), now);
}

Tx Simulator::make_zero_value_tx() {
    TxBuilder b;
    b.add_output(Opening{Scalar{0}, random_scalar(group_, rng_)});
    b.set_offset(Scalar{0});
    return to_aggregate(b.build(group_, cfg_.policy.tx, rng_));
}

void Simulator::start_broadcast(Addr node, Tx tx, Tick now) {
    size_t trace = report_.tx_traces.size();
    TxTrace tr;
    tr.origin = tr.first_fluff = node;
    tr.outputs_before = static_cast<uint32_t>(tx.outputs.size());
    report_.tx_traces.push_back(tr);

    if (cfg_.beam_dummy.enabled) {
        // Zero-value output with a random incubation period, CoinJoined
        // into the transaction before it leaves the origin.
        uint32_t inc = static_cast<uint32_t>(
            rng_.range(cfg_.beam_dummy.incubation_min, cfg_.beam_dummy.incubation_max));
        Opening zero{Scalar{0}, random_scalar(group_, rng_)};
        TxBuilder zb;
        zb.add_output(zero, inc);
        zb.set_offset(Scalar{0});
        Transaction zero_out = zb.build(group_, cfg_.policy.tx, rng_);
        tx = coinjoin(group_, zero_out, tx, cfg_.policy.tx);
        report_.tx_traces[trace].dummy_added = true;
        report_.tx_traces[trace].dummy_is_zero = zero.v.v == 0;
    }
    report_.tx_traces[trace].outputs_after = static_cast<uint32_t>(tx.outputs.size());
    report_.tx_traces[trace].aggregate_valid =
        validate_aggregate(group_, tx, cfg_.policy.tx) == TxCheck::ok;

    if (!cfg_.dandelion.enabled) {
        fluff(trace, tx, node, 0, now);
        return;
    }
    stem_step(trace, tx, node, 0, now);
}

void Simulator::stem_step(size_t trace, const Tx& tx, Addr node, uint32_t hops, Tick now) {
    const auto& peers = nodes_[node].peers;
    bool forced_end = hops >= cfg_.dandelion.max_stem || peers.empty();
    if (forced_end || !rng_.coin(cfg_.dandelion.coin_p)) {
        fluff(trace, tx, node, hops, now);
        return;
    }
    // Relay to one uniformly chosen peer; the hop counter lives in the
    // simulator only, the protocol never sees it.
    auto it = peers.begin();
    std::advance(it, static_cast<long>(rng_.uniform(peers.size())));
    Event ev;
    ev.at = now;
    ev.kind = Event::Kind::stem;
    ev.stem_tx = tx;
    ev.stem_node = *it;
    ev.stem_hops = hops + 1;
    ev.trace = trace;
    schedule(std::move(ev), latency());
}

void Simulator::fluff(size_t trace, const Tx& tx, Addr node, uint32_t hops, Tick now) {
    report_.tx_traces[trace].first_fluff = node;
    report_.tx_traces[trace].stem_hops = hops;
    report_.stem_histogram[hops]++;
    log(now, "fluff node=" + std::to_string(node) + " hops=" + std::to_string(hops));

    // The fluffing node keeps the transaction and broadcasts it.
    cp_.tx_extend(nodes_[node].pool, tx, cp_.hasht(tx));
    for (Addr a : nodes_[node].peers) send(Packet{node, a, TxMsg{tx}}, now);
}

void Simulator::inject(const Injection& inj, Tick now) {
    switch (inj.action) {
        case Injection::Action::connect: {
            if (inj.node >= cfg_.n_nodes || inj.peer >= cfg_.n_nodes) return;
            // The initiator learns the peer and introduces itself.
            nodes_[inj.node].peers.insert(inj.peer);
            send(Packet{inj.node, inj.peer, ConnectMsg{}}, now);
            log(now, "connect " + std::to_string(inj.node) + "->" + std::to_string(inj.peer));
            return;
        }
        case Injection::Action::submit_tx: {
            if (inj.node >= cfg_.n_nodes) return;
            Tx tx = inj.tx ? *inj.tx : make_zero_value_tx();
            log(now, "submit_tx node=" + std::to_string(inj.node));
            start_broadcast(inj.node, std::move(tx), now);
            return;
        }
        case Injection::Action::mint: {
            forest_dirty_ = true;
            if (inj.node == Injection::kAllNodes) {
                for (Addr a = 0; a < cfg_.n_nodes; ++a)
                    apply_node_result(a, mint(cp_, nodes_[a], now), now);
            } else if (inj.node < cfg_.n_nodes) {
                apply_node_result(inj.node, mint(cp_, nodes_[inj.node], now), now);
            }
            log(now, "mint node=" +
                         (inj.node == Injection::kAllNodes ? std::string("all")
                                                           : std::to_string(inj.node)));
            return;
        }
    }
}

void Simulator::log(Tick now, const std::string& line) {
    if (!cfg_.log_events) return;
    report_.event_log.push_back("t=" + std::to_string(now) + " " + line);
}

std::string Simulator::ledger_hash(const LocState& st) const {
    ChainSeq led = ledger(cp_, st.forest);
    ByteWriter w;
    for (const auto& b : led) w.blob(cp_.hashb(b));
    return hex_encode(sha256(w.bytes()));
}

void Simulator::finish(Tick now) {
    report_.quiescence_tick = now;
    for (const auto& st : nodes_)
        report_.peer_counts.push_back(static_cast<uint32_t>(st.peers.size()));
    for (const auto& st : nodes_) report_.ledger_hashes.push_back(ledger_hash(st));
    report_.ledgers_agree = !report_.ledger_hashes.empty();
    for (const auto& h : report_.ledger_hashes)
        if (h != report_.ledger_hashes[0]) report_.ledgers_agree = false;

    report_.mempools_agree = true;
    for (const auto& st : nodes_) {
        std::set<HashVal> keys;
        for (const auto& [h, t] : st.pool) keys.insert(h);
        std::set<HashVal> first;
        for (const auto& [h, t] : nodes_[0].pool) first.insert(h);
        if (keys != first) report_.mempools_agree = false;
    }

    uint64_t moved = 0;
    for (const auto& tr : report_.tx_traces)
        if (tr.first_fluff != tr.origin) moved++;
    report_.untraceable_fraction =
        report_.tx_traces.empty() ? 0.0
                                  : static_cast<double>(moved) / report_.tx_traces.size();
}

SimReport Simulator::go() {
    seed_topology();

    // Injections enter the same timeline as packets; FIFO seq keeps
    // same-tick ordering stable.
    for (size_t i = 0; i < scenario_.size(); ++i) {
        Event ev;
        ev.at = scenario_[i].at;
        ev.kind = Event::Kind::inject;
        ev.injection = i;
        schedule(std::move(ev), 0);
    }

    Tick now = 0;
    while (!soup_.empty()) {
        if (report_.events_processed >= cfg_.max_events)
            throw std::runtime_error("simulation exceeded max_events guard");
        Event ev = soup_.top();
        soup_.pop();
        now = ev.at;
        report_.events_processed++;
        switch (ev.kind) {
            case Event::Kind::deliver: deliver(ev.packet, now); break;
            case Event::Kind::inject: inject(scenario_[ev.injection], now); break;
            case Event::Kind::stem:
                stem_step(ev.trace, ev.stem_tx, ev.stem_node, ev.stem_hops, now);
                break;
        }
        // Track when the set of per-node ledgers last changed. Only
        // block arrivals and mints can move a ledger.
        if (forest_dirty_) {
            forest_dirty_ = false;
            std::vector<std::string> hashes;
            for (const auto& st : nodes_) hashes.push_back(ledger_hash(st));
            if (hashes != last_hashes_) {
                last_hashes_ = std::move(hashes);
                report_.last_ledger_change = now;
            }
        }
    }
    finish(now);
    return report_;
}

}  // namespace

SimReport run(const SimConfig& cfg, const Scenario& scenario) {
    Simulator sim(cfg, scenario);
    return sim.go();
}

double untraceability_probe(const SimReport& report) { return report.untraceable_fraction; }

}  // namespace mw
