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

#include "mwk/json_codec.hpp"

#include <sstream>

namespace mw {

namespace {

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed,
                         const char* where) {
    if (!j.is_object()) throw JsonError(std::string(where) + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (key == k) ok = true;
        if (!ok) throw JsonError(std::string(where) + ": unknown key '" + key + "'");
    }
}

const Json& field(const Json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end()) throw JsonError(std::string(where) + ": missing key '" + key + "'");
    return *it;
}

}  // namespace

Json to_json(const GroupParams& g, const Scalar& s) { return hex_encode(encode(g, s)); }

Scalar scalar_from_json(const GroupParams& g, const Json& j) {
    if (!j.is_string()) throw JsonError("scalar: expected hex string");
    return decode_scalar(g, hex_decode(j.get<std::string>()));
}

static Json point_to_json(const GroupParams& g, const GroupElement& p) {
    return hex_encode(encode(g, p));
}

static GroupElement point_from_json(const GroupParams& g, const Json& j) {
    if (!j.is_string()) throw JsonError("point: expected hex string");
    return decode_element(g, hex_decode(j.get<std::string>()));
}

Json to_json(const GroupParams& g, const Commitment& c) {
    return Json{{"mode", c.mode == CommitMode::plain ? "plain" : "switch"},
                {"point", point_to_json(g, c.point)}};
}

Commitment commitment_from_json(const GroupParams& g, const Json& j) {
    std::string mode = field(j, "mode", "commitment").get<std::string>();
    Commitment c;
    if (mode == "plain")
        c.mode = CommitMode::plain;
    else if (mode == "switch")
        c.mode = CommitMode::switch_;
    else
        throw JsonError("commitment: unknown mode '" + mode + "'");
    c.point = point_from_json(g, field(j, "point", "commitment"));
    return c;
}

Json to_json(const GroupParams& g, const Output& o) {
    Json j = to_json(g, o.c);
    if (o.incubation != 0) j["incubation"] = o.incubation;
    return j;
}

Output output_from_json(const GroupParams& g, const Json& j) {
    Output o;
    o.c = commitment_from_json(g, j);
    if (j.contains("incubation")) o.incubation = j["incubation"].get<uint32_t>();
    return o;
}

Json to_json(const GroupParams&, const RangeProof& rp) {
    return Json{{"kind", rp.kind == RangeProofKind::stub ? "stub" : "bits"},
                {"payload", hex_encode(rp.payload)}};
}

RangeProof range_proof_from_json(const Json& j) {
    std::string kind = field(j, "kind", "range proof").get<std::string>();
    RangeProof rp;
    if (kind == "stub")
        rp.kind = RangeProofKind::stub;
    else if (kind == "bits")
        rp.kind = RangeProofKind::bits;
    else
        throw JsonError("range proof: unknown kind '" + kind + "'");
    rp.payload = hex_decode(field(j, "payload", "range proof").get<std::string>());
    return rp;
}

Json to_json(const GroupParams& g, const TxKernel& k) {
    Json rp = Json::array();
    for (const auto& p : k.rp) rp.push_back(to_json(g, p));
    return Json{{"rp", rp},
                {"ke", point_to_json(g, k.ke)},
                {"sigma", Json{{"R", point_to_json(g, k.sigma.R)}, {"s", to_json(g, k.sigma.s)}}}};
}

TxKernel kernel_from_json(const GroupParams& g, const Json& j) {
    TxKernel k;
    for (const auto& p : field(j, "rp", "kernel")) k.rp.push_back(range_proof_from_json(p));
    k.ke = point_from_json(g, field(j, "ke", "kernel"));
    const Json& sig = field(j, "sigma", "kernel");
    k.sigma.R = point_from_json(g, field(sig, "R", "sigma"));
    k.sigma.s = scalar_from_json(g, field(sig, "s", "sigma"));
    return k;
}

static Json io_to_json(const GroupParams& g, const std::vector<Commitment>& ins,
                       const std::vector<Output>& outs) {
    Json ji = Json::array();
    for (const auto& c : ins) ji.push_back(to_json(g, c));
    Json jo = Json::array();
    for (const auto& o : outs) jo.push_back(to_json(g, o));
    return Json{{"inputs", ji}, {"outputs", jo}};
}

Json to_json(const GroupParams& g, const Transaction& t) {
    Json j = io_to_json(g, t.inputs, t.outputs);
    j["kernel"] = to_json(g, t.kernel);
    j["tko"] = to_json(g, t.tko);
    return j;
}

Transaction transaction_from_json(const GroupParams& g, const Json& j) {
    Transaction t;
    for (const auto& c : field(j, "inputs", "transaction"))
        t.inputs.push_back(commitment_from_json(g, c));
    for (const auto& o : field(j, "outputs", "transaction"))
        t.outputs.push_back(output_from_json(g, o));
    t.kernel = kernel_from_json(g, field(j, "kernel", "transaction"));
    t.tko = scalar_from_json(g, field(j, "tko", "transaction"));
    return t;
}

Json to_json(const GroupParams& g, const AggregateTransaction& t) {
    Json j = io_to_json(g, t.inputs, t.outputs);
    Json ks = Json::array();
    for (const auto& k : t.kernels) ks.push_back(to_json(g, k));
    j["kernels"] = ks;
    j["tko"] = to_json(g, t.tko);
    return j;
}

AggregateTransaction aggregate_from_json(const GroupParams& g, const Json& j) {
    // A single-kernel transaction file is accepted as the one-kernel case.
    if (j.contains("kernel") && !j.contains("kernels"))
        return to_aggregate(transaction_from_json(g, j));
    AggregateTransaction t;
    for (const auto& c : field(j, "inputs", "aggregate"))
        t.inputs.push_back(commitment_from_json(g, c));
    for (const auto& o : field(j, "outputs", "aggregate"))
        t.outputs.push_back(output_from_json(g, o));
    for (const auto& k : field(j, "kernels", "aggregate"))
        t.kernels.push_back(kernel_from_json(g, k));
    t.tko = scalar_from_json(g, field(j, "tko", "aggregate"));
    return t;
}

Json to_json(const GroupParams& g, const Block& b) {
    Json j = io_to_json(g, b.inputs, b.outputs);
    Json ks = Json::array();
    for (const auto& k : b.kernels) ks.push_back(to_json(g, k));
    j["kernels"] = ks;
    j["ko"] = to_json(g, b.ko);
    j["genesis"] = b.genesis;
    if (b.supply.v != 0) j["supply"] = to_json(g, b.supply);
    return j;
}

Block block_from_json(const GroupParams& g, const Json& j) {
    Block b;
    for (const auto& c : field(j, "inputs", "block")) b.inputs.push_back(commitment_from_json(g, c));
    for (const auto& o : field(j, "outputs", "block")) b.outputs.push_back(output_from_json(g, o));
    for (const auto& k : field(j, "kernels", "block")) b.kernels.push_back(kernel_from_json(g, k));
    b.ko = scalar_from_json(g, field(j, "ko", "block"));
    b.genesis = field(j, "genesis", "block").get<bool>();
    if (j.contains("supply")) b.supply = scalar_from_json(g, j["supply"]);
    return b;
}

std::string chain_to_lines(const GroupParams& g, const Chain& c) {
    std::ostringstream out;
    for (const auto& b : c.blocks) out << to_json(g, b).dump() << "\n";
    return out.str();
}

Chain chain_from_lines(const GroupParams& g, const std::string& text) {
    Chain c;
    c.blocks.clear();
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        c.blocks.push_back(block_from_json(g, Json::parse(line)));
    }
    if (c.blocks.empty()) throw JsonError("chain file: no blocks");
    return c;
}

Json to_json(const GroupParams& g, const CBlock& b) {
    Json txs = Json::array();
    for (const auto& t : b.txs) txs.push_back(to_json(g, t));
    return Json{{"prev", hex_encode(b.prev)},
                {"txs", txs},
                {"pf", Json{{"minter", b.pf.minter}, {"height", b.pf.height}}}};
}

CBlock cblock_from_json(const GroupParams& g, const Json& j) {
    CBlock b;
    b.prev = hex_decode(field(j, "prev", "cblock").get<std::string>());
    for (const auto& t : field(j, "txs", "cblock")) b.txs.push_back(aggregate_from_json(g, t));
    const Json& pf = field(j, "pf", "cblock");
    b.pf.minter = field(pf, "minter", "pf").get<Addr>();
    b.pf.height = field(pf, "height", "pf").get<uint64_t>();
    return b;
}

Json to_json(const GroupParams& g, const Msg& m) {
    if (std::holds_alternative<NullMsg>(m)) return Json{{"type", "null"}};
    if (std::holds_alternative<ConnectMsg>(m)) return Json{{"type", "connect"}};
    if (const auto* am = std::get_if<AddrMsg>(&m))
        return Json{{"type", "addr"}, {"addrs", am->addrs}};
    if (const auto* tm = std::get_if<TxMsg>(&m))
        return Json{{"type", "tx"}, {"tx", to_json(g, tm->tx)}};
    if (const auto* bm = std::get_if<BlockMsg>(&m))
        return Json{{"type", "block"}, {"block", to_json(g, bm->block)}};
    if (const auto* im = std::get_if<InvMsg>(&m)) {
        Json hs = Json::array();
        for (const auto& h : im->hashes) hs.push_back(hex_encode(h));
        return Json{{"type", "inv"}, {"hashes", hs}};
    }
    const auto& gm = std::get<GetDataMsg>(m);
    return Json{{"type", "getdata"}, {"hash", hex_encode(gm.hash)}};
}

Msg msg_from_json(const GroupParams& g, const Json& j) {
    std::string type = field(j, "type", "msg").get<std::string>();
    if (type == "null") return NullMsg{};
    if (type == "connect") return ConnectMsg{};
    if (type == "addr") {
        AddrMsg m;
        for (const auto& a : field(j, "addrs", "addr msg")) m.addrs.insert(a.get<Addr>());
        return m;
    }
    if (type == "tx") return TxMsg{aggregate_from_json(g, field(j, "tx", "tx msg"))};
    if (type == "block") return BlockMsg{cblock_from_json(g, field(j, "block", "block msg"))};
    if (type == "inv") {
        InvMsg m;
        for (const auto& h : field(j, "hashes", "inv msg"))
            m.hashes.insert(hex_decode(h.get<std::string>()));
        return m;
    }
    if (type == "getdata")
        return GetDataMsg{hex_decode(field(j, "hash", "getdata msg").get<std::string>())};
    throw JsonError("msg: unknown tag '" + type + "'");
}

Json to_json(const GroupParams& g, const Packet& p) {
    return Json{{"from", p.from}, {"to", p.to}, {"msg", to_json(g, p.msg)}};
}

Packet packet_from_json(const GroupParams& g, const Json& j) {
    Packet p;
    p.from = field(j, "from", "packet").get<Addr>();
    p.to = field(j, "to", "packet").get<Addr>();
    p.msg = msg_from_json(g, field(j, "msg", "packet"));
    return p;
}

Json to_json(const GroupParams& g, const LocState& st) {
    Json bf = Json::object();
    for (const auto& [h, b] : st.forest) bf[hex_encode(h)] = to_json(g, b);
    Json tp = Json::array();
    for (const auto& [h, t] : st.pool) tp.push_back(to_json(g, t));
    return Json{{"this", st.self}, {"as", st.peers}, {"bf", bf}, {"tp", tp}};
}

LocState locstate_from_json(const GroupParams& g, const Json& j) {
    LocState st;
    st.self = field(j, "this", "locstate").get<Addr>();
    for (const auto& a : field(j, "as", "locstate")) st.peers.insert(a.get<Addr>());
    for (const auto& [h, b] : field(j, "bf", "locstate").items())
        st.forest[hex_decode(h)] = cblock_from_json(g, b);
    for (const auto& t : field(j, "tp", "locstate")) {
        AggregateTransaction tx = aggregate_from_json(g, t);
        st.pool[sha256(canonical_bytes(g, tx))] = tx;
    }
    return st;
}

Json to_json(const SimReport& r) {
    Json hist = Json::object();
    for (const auto& [hops, count] : r.stem_histogram) hist[std::to_string(hops)] = count;
    Json traces = Json::array();
    for (const auto& t : r.tx_traces)
        traces.push_back(Json{{"origin", t.origin},
                              {"first_fluff", t.first_fluff},
                              {"stem_hops", t.stem_hops},
                              {"dummy_added", t.dummy_added},
                              {"dummy_is_zero", t.dummy_is_zero},
                              {"outputs_before", t.outputs_before},
                              {"outputs_after", t.outputs_after},
                              {"aggregate_valid", t.aggregate_valid}});
    return Json{{"ledger_hashes", r.ledger_hashes},
                {"ledgers_agree", r.ledgers_agree},
                {"mempools_agree", r.mempools_agree},
                {"quiescence_tick", r.quiescence_tick},
                {"last_ledger_change", r.last_ledger_change},
                {"events_processed", r.events_processed},
                {"packets_sent", r.packets_sent},
                {"packets_delivered", r.packets_delivered},
                {"packets_dropped", r.packets_dropped},
                {"tx_msgs_sent", r.tx_msgs_sent},
                {"peer_counts", r.peer_counts},
                {"stem_histogram", hist},
                {"tx_traces", traces},
                {"untraceable_fraction", r.untraceable_fraction},
                {"event_log", r.event_log}};
}

Json to_json(const GameResult& r) {
    return Json{{"trials", r.trials}, {"successes", r.successes}, {"success_rate", r.success_rate}};
}

static TinyConstants tiny_from_json(const Json& j) {
    reject_unknown_keys(j, {"n", "G", "H", "J"}, "group");
    TinyConstants t;
    if (j.contains("n")) t.n = j["n"].get<uint64_t>();
    if (j.contains("G")) t.G = j["G"].get<uint64_t>();
    if (j.contains("H")) t.H = j["H"].get<uint64_t>();
    if (j.contains("J")) t.J = j["J"].get<uint64_t>();
    return t;
}

static Backend backend_from_json(const Json& j) {
    std::string b = j.get<std::string>();
    if (b == "tiny") return Backend::tiny;
    if (b == "curve") return Backend::curve;
    throw JsonError("unsupported backend '" + b + "'");
}

static void policy_from_json(const Json& j, ChainPolicy& policy) {
    reject_unknown_keys(j,
                        {"incubation", "range_bits", "proof_kind", "allow_grants", "grant_amount"},
                        "features");
    if (j.contains("incubation")) policy.tx.incubation_enabled = j["incubation"].get<bool>();
    if (j.contains("range_bits")) policy.tx.range_bits = j["range_bits"].get<uint32_t>();
    if (j.contains("proof_kind")) {
        std::string k = j["proof_kind"].get<std::string>();
        if (k == "bits")
            policy.tx.proof_kind = RangeProofKind::bits;
        else if (k == "stub")
            policy.tx.proof_kind = RangeProofKind::stub;
        else
            throw JsonError("unknown proof kind '" + k + "'");
    }
    if (j.contains("allow_grants")) policy.allow_grants = j["allow_grants"].get<bool>();
    if (j.contains("grant_amount")) policy.grant_amount = j["grant_amount"].get<uint64_t>();
}

CliConfig cli_config_from_json(const Json& j) {
    reject_unknown_keys(j, {"backend", "group", "features", "seed"}, "config");
    CliConfig cfg;
    if (j.contains("backend")) cfg.backend = backend_from_json(j["backend"]);
    if (j.contains("group")) cfg.tiny = tiny_from_json(j["group"]);
    if (j.contains("features")) policy_from_json(j["features"], cfg.policy);
    if (j.contains("seed")) cfg.seed = j["seed"].get<uint64_t>();
    return cfg;
}

SimConfig sim_config_from_json(const Json& j) {
    reject_unknown_keys(j,
                        {"n_nodes", "topology", "random_p", "latency", "loss", "seed", "dandelion",
                         "beam_dummy", "max_events", "backend", "group", "features",
                         "round_robin_mint", "log_events"},
                        "sim config");
    SimConfig cfg;
    if (j.contains("n_nodes")) cfg.n_nodes = j["n_nodes"].get<uint32_t>();
    if (j.contains("topology")) {
        std::string t = j["topology"].get<std::string>();
        if (t == "clique")
            cfg.topology = Topology::clique;
        else if (t == "ring")
            cfg.topology = Topology::ring;
        else if (t == "random")
            cfg.topology = Topology::random_p;
        else
            throw JsonError("unknown topology '" + t + "'");
    }
    if (j.contains("random_p")) cfg.random_p = j["random_p"].get<double>();
    if (j.contains("latency")) {
        const Json& l = j["latency"];
        reject_unknown_keys(l, {"kind", "fixed", "lo", "hi"}, "latency");
        std::string kind = field(l, "kind", "latency").get<std::string>();
        if (kind == "fixed") {
            cfg.latency.kind = LatencyModel::Kind::fixed;
            if (l.contains("fixed")) cfg.latency.fixed = l["fixed"].get<Tick>();
        } else if (kind == "uniform") {
            cfg.latency.kind = LatencyModel::Kind::uniform;
            cfg.latency.lo = field(l, "lo", "latency").get<Tick>();
            cfg.latency.hi = field(l, "hi", "latency").get<Tick>();
            if (cfg.latency.hi < cfg.latency.lo) throw JsonError("latency: hi < lo");
        } else {
            throw JsonError("unknown latency kind '" + kind + "'");
        }
    }
    if (j.contains("loss")) cfg.loss_probability = j["loss"].get<double>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<uint64_t>();
    if (j.contains("dandelion")) {
        const Json& d = j["dandelion"];
        reject_unknown_keys(d, {"enabled", "coin_p", "max_stem"}, "dandelion");
        if (d.contains("enabled")) cfg.dandelion.enabled = d["enabled"].get<bool>();
        if (d.contains("coin_p")) cfg.dandelion.coin_p = d["coin_p"].get<double>();
        if (d.contains("max_stem")) cfg.dandelion.max_stem = d["max_stem"].get<uint32_t>();
    }
    if (j.contains("beam_dummy")) {
        const Json& b = j["beam_dummy"];
        reject_unknown_keys(b, {"enabled", "incubation_min", "incubation_max"}, "beam_dummy");
        if (b.contains("enabled")) cfg.beam_dummy.enabled = b["enabled"].get<bool>();
        if (b.contains("incubation_min"))
            cfg.beam_dummy.incubation_min = b["incubation_min"].get<uint32_t>();
        if (b.contains("incubation_max"))
            cfg.beam_dummy.incubation_max = b["incubation_max"].get<uint32_t>();
        if (cfg.beam_dummy.incubation_max < cfg.beam_dummy.incubation_min)
            throw JsonError("beam_dummy: incubation_max < incubation_min");
    }
    if (j.contains("max_events")) cfg.max_events = j["max_events"].get<uint64_t>();
    if (j.contains("backend")) cfg.backend = backend_from_json(j["backend"]);
    if (j.contains("group")) cfg.tiny = tiny_from_json(j["group"]);
    if (j.contains("features")) policy_from_json(j["features"], cfg.policy);
    if (j.contains("round_robin_mint")) cfg.round_robin_mint = j["round_robin_mint"].get<bool>();
    if (j.contains("log_events")) cfg.log_events = j["log_events"].get<bool>();
    return cfg;
}

Scenario scenario_from_json(const GroupParams& g, const Json& j) {
    if (!j.is_array()) throw JsonError("scenario: expected an array");
    Scenario sc;
    for (const auto& e : j) {
        reject_unknown_keys(e, {"at", "action", "node", "peer", "tx"}, "scenario entry");
        Injection inj;
        inj.at = field(e, "at", "scenario entry").get<Tick>();
        std::string action = field(e, "action", "scenario entry").get<std::string>();
        if (action == "connect")
            inj.action = Injection::Action::connect;
        else if (action == "submit_tx")
            inj.action = Injection::Action::submit_tx;
        else if (action == "mint")
            inj.action = Injection::Action::mint;
        else
            throw JsonError("scenario: unknown action '" + action + "'");
        if (e.contains("node")) {
            if (e["node"].is_string() && e["node"] == "all")
                inj.node = Injection::kAllNodes;
            else
                inj.node = e["node"].get<Addr>();
        }
        if (e.contains("peer")) inj.peer = e["peer"].get<Addr>();
        if (e.contains("tx")) inj.tx = aggregate_from_json(g, e["tx"]);
        sc.push_back(std::move(inj));
    }
    return sc;
}

}  // namespace mw
