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

#include "mwk/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "mwk/json_codec.hpp"

namespace mw {

namespace {

constexpr uint64_t kSuiteSeed = 20260809;

GroupParams tiny23() { return setup(Backend::tiny, 1, TinyConstants{23, 5, 7, 11}); }
GroupParams tiny1009() { return setup(Backend::tiny, 1, TinyConstants{1009, 5, 7, 11}); }

TxPolicy bits16() { return TxPolicy{16, RangeProofKind::bits, false}; }

struct Failure {
    std::ostringstream msg;
    bool failed = false;
    void fail(const std::string& s) {
        if (!failed) msg << s;
        failed = true;
    }
};

// Balanced random transaction over small values, openings kept.
struct DrawnTx {
    Transaction tx;
    std::vector<Opening> ins, outs;
    Scalar tko;
};

DrawnTx draw_tx(const GroupParams& g, Rng& rng, const TxPolicy& policy, size_t max_io = 3) {
    DrawnTx d;
    size_t n_in = rng.range(0, max_io);
    size_t n_out = rng.range(n_in == 0 ? 0 : 1, max_io);
    uint64_t total = 0;
    for (size_t i = 0; i < n_in; ++i) {
        uint64_t v = rng.range(0, 50 / (n_in ? n_in : 1));
        total += v;
        d.ins.push_back(Opening{scalar_from_u64(g, v), random_scalar(g, rng)});
    }
    for (size_t i = 0; i < n_out; ++i) {
        uint64_t v = i + 1 == n_out ? total : rng.range(0, total);
        total -= v;
        d.outs.push_back(Opening{scalar_from_u64(g, v), random_scalar(g, rng)});
    }
    d.tko = random_scalar(g, rng);
    d.tx = build_transaction(g, d.ins, d.outs, d.tko, policy, rng);
    return d;
}

uint64_t residue(const GroupElement& p) { return p.x.convert_to<uint64_t>(); }

// Independent uint64 arithmetic for re-verifying tiny group equations.
uint64_t madd(uint64_t a, uint64_t b, uint64_t n) { return (a + b) % n; }
uint64_t msub(uint64_t a, uint64_t b, uint64_t n) { return (a + n - b % n) % n; }
uint64_t mmul(uint64_t a, uint64_t b, uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

// ---- criteria ----

CriterionResult c1_homomorphism() {
    Failure f;
    uint64_t checked = 0;
    for (auto backend : {Backend::tiny, Backend::curve}) {
        GroupParams g = backend == Backend::tiny ? tiny23() : setup(backend, 0);
        Rng rng(kSuiteSeed + 1);
        for (int i = 0; i < 1000; ++i) {
            Opening a{random_scalar(g, rng), random_scalar(g, rng)};
            Opening b{random_scalar(g, rng), random_scalar(g, rng)};
            GroupElement lhs = add(g, commit(g, a).point, commit(g, b).point);
            GroupElement rhs =
                commit(g, Opening{s_add(g, a.v, b.v), s_add(g, a.r, b.r)}).point;
            if (!(lhs == rhs)) f.fail("mismatch at pair " + std::to_string(i));
            checked++;
        }
    }
    return {1, "homomorphism (1000 pairs per backend, exact)", !f.failed,
            f.failed ? f.msg.str() : std::to_string(checked) + " pairs"};
}

CriterionResult c2_no_coin_inflation() {
    Failure f;
    GroupParams g = tiny23();
    Rng rng(kSuiteSeed + 2);
    TxPolicy policy = bits16();
    for (int i = 0; i < 500; ++i) {
        DrawnTx d = draw_tx(g, rng, policy);
        GroupElement excess =
            sub(g, sum_outputs(g, d.tx.outputs), sum_commitments(g, d.tx.inputs));
        excess = sub(g, excess, scalar_mul(g, d.tx.tko, g.G));

        Scalar expect{0};
        for (const auto& o : d.outs) expect = s_add(g, expect, o.r);
        for (const auto& o : d.ins) expect = s_sub(g, expect, o.r);
        expect = s_sub(g, expect, d.tko);

        auto dlog = brute_force_dlog(g, excess, g.G);
        if (!dlog || !(*dlog == expect))
            f.fail("blinding decomposition mismatch at tx " + std::to_string(i));
        else if (!is_identity(g, sub(g, excess, scalar_mul(g, *dlog, g.G))))
            f.fail("nonzero residual component at tx " + std::to_string(i));
        else if (!(excess == d.tx.kernel.ke))
            f.fail("excess differs from kernel at tx " + std::to_string(i));
    }
    return {2, "no coin inflation (500 txs, zero H-component)", !f.failed,
            f.failed ? f.msg.str() : "500 decompositions"};
}

CriterionResult c3_aggregation_invariance() {
    Failure f;
    GroupParams g = tiny1009();
    TxPolicy policy = bits16();

    {  // 500 coinjoin sequences
        Rng rng(kSuiteSeed + 3);
        for (int seq = 0; seq < 500 && !f.failed; ++seq) {
            AggregateTransaction agg = to_aggregate(draw_tx(g, rng, policy).tx);
            size_t steps = rng.range(1, 3);
            for (size_t s = 0; s < steps; ++s) {
                agg = coinjoin(g, draw_tx(g, rng, policy).tx, agg, policy);
                if (validate_aggregate(g, agg, policy) != TxCheck::ok)
                    f.fail("coinjoin invalidated sequence " + std::to_string(seq));
            }
        }
    }
    {  // 500 block aggregation sequences
        Rng rng(kSuiteSeed + 4);
        for (int seq = 0; seq < 500 && !f.failed; ++seq) {
            Block blk = empty_block();
            size_t steps = rng.range(1, 3);
            for (size_t s = 0; s < steps; ++s) {
                for (int attempt = 0;; ++attempt) {
                    try {
                        blk = block_aggregate(g, draw_tx(g, rng, policy).tx, blk, policy);
                        break;
                    } catch (const TxError&) {
                        // duplicate output commitment in this small group
                        if (attempt > 20) {
                            f.fail("could not extend block " + std::to_string(seq));
                            break;
                        }
                    }
                }
                if (validate_block(g, blk, policy) != BlockCheck::ok)
                    f.fail("aggregation invalidated block " + std::to_string(seq));
            }
        }
    }
    return {3, "coinjoin and block aggregation invariance (500 + 500 sequences)", !f.failed,
            f.failed ? f.msg.str() : "all steps valid"};
}

CriterionResult c4_cut_through() {
    Failure f;
    GroupParams g = tiny1009();
    TxPolicy policy = bits16();
    Rng rng(kSuiteSeed + 5);
    uint64_t n = 1009;

    for (int i = 0; i < 300 && !f.failed; ++i) {
        // A chain of spends inside one block guarantees input/output
        // overlap: mid is created and consumed in the same block.
        uint64_t value = rng.range(1, 40);
        Opening src{scalar_from_u64(g, value), random_scalar(g, rng)};
        Opening mid{scalar_from_u64(g, value), random_scalar(g, rng)};
        Opening dst{scalar_from_u64(g, value), random_scalar(g, rng)};
        Transaction t1 =
            build_transaction(g, {src}, {mid}, random_scalar(g, rng), policy, rng);
        Transaction t2 =
            build_transaction(g, {mid}, {dst}, random_scalar(g, rng), policy, rng);
        Block blk;
        try {
            blk = block_aggregate(g, t2, block_aggregate(g, t1, empty_block(), policy), policy);
        } catch (const TxError&) {
            --i;
            continue;  // collided commitments; redraw
        }
        if (validate_block(g, blk, policy) != BlockCheck::ok) {
            f.fail("pre-cut block invalid at " + std::to_string(i));
            break;
        }

        Block cut = cut_through(blk);
        if (cut.inputs.size() != 1 || cut.outputs.size() != 1)
            f.fail("overlap not removed at " + std::to_string(i));
        if (validate_block(g, cut, policy) != BlockCheck::ok)
            f.fail("cut-through block invalid at " + std::to_string(i));

        // Balance re-verified by independent modular arithmetic.
        uint64_t sum_o = 0, sum_i = 0, kes = 0;
        for (const auto& o : cut.outputs) sum_o = madd(sum_o, residue(o.c.point), n);
        for (const auto& c : cut.inputs) sum_i = madd(sum_i, residue(c.point), n);
        for (const auto& k : cut.kernels) kes = madd(kes, residue(k.ke), n);
        uint64_t lhs = msub(sum_o, sum_i, n);
        uint64_t rhs = madd(mmul(cut.ko.v.convert_to<uint64_t>(), 5, n), kes, n);
        if (lhs != rhs) f.fail("independent balance check failed at " + std::to_string(i));
    }
    return {4, "cut-through invariance (300 blocks with overlap)", !f.failed,
            f.failed ? f.msg.str() : "valid and balanced after cut-through"};
}

CriterionResult c5_validity_invariant() {
    Failure f;
    GroupParams g = tiny1009();
    ChainPolicy policy;
    policy.tx = bits16();
    policy.allow_grants = true;
    policy.grant_amount = 20;
    Rng rng(kSuiteSeed + 6);

    NodeState state;
    std::vector<Opening> live;
    int errors_seen = 0, oks_seen = 0;

    for (int step_i = 0; step_i < 100;) {
        Bytes before = serialize_state(g, state);
        Response r;
        switch (rng.range(0, 4)) {
            case 0: {  // grant (valid)
                std::vector<Opening> outs;
                uint64_t left = 20;
                while (left > 0) {
                    uint64_t v = rng.range(1, left);
                    outs.push_back(Opening{scalar_from_u64(g, v), random_scalar(g, rng)});
                    left -= v;
                }
                r = grant(g, state, outs, random_scalar(g, rng), policy, rng);
                if (r.ok()) live.insert(live.end(), outs.begin(), outs.end());
                break;
            }
            case 1: {  // valid spend as a block
                if (live.empty()) continue;
                size_t pick = rng.uniform(live.size());
                Opening out{live[pick].v, random_scalar(g, rng)};
                Transaction t;
                try {
                    t = build_transaction(g, {live[pick]}, {out}, random_scalar(g, rng),
                                          policy.tx, rng);
                } catch (const TxError&) {
                    continue;
                }
                r = append_block(g, state, block_from_aggregate(to_aggregate(t)), policy);
                if (r.ok()) {
                    live.erase(live.begin() + pick);
                    live.push_back(out);
                }
                break;
            }
            case 2: {  // invalid: spend of a commitment that never existed
                Transaction t = build_transaction(
                    g, {Opening{scalar_from_u64(g, 7), random_scalar(g, rng)}},
                    {Opening{scalar_from_u64(g, 7), random_scalar(g, rng)}},
                    random_scalar(g, rng), policy.tx, rng);
                r = submit_tx(g, state, to_aggregate(t), policy);
                break;
            }
            default: {  // invalid: unbalanced block by direct construction
                Transaction t = build_transaction(
                    g, {}, {Opening{Scalar{0}, random_scalar(g, rng)}}, Scalar{0},
                    policy.tx, rng);
                Block b = block_from_aggregate(to_aggregate(t));
                b.ko = s_add(g, b.ko, Scalar{1});
                r = append_block(g, state, b, policy);
                break;
            }
        }
        if (r.ok())
            oks_seen++;
        else {
            errors_seen++;
            if (!(serialize_state(g, state) == before))
                f.fail("error response mutated state at step " + std::to_string(step_i));
        }
        if (!valid_state(g, state, policy))
            f.fail("state invalid after step " + std::to_string(step_i));
        if (f.failed) break;
        ++step_i;
    }
    if (errors_seen == 0 || oks_seen == 0) f.fail("fuzz did not mix ok and error steps");
    if (!f.failed && oks_seen + errors_seen != 100) f.fail("fuzz step count drifted");
    return {5, "validity-invariant execution (100-step fuzz)", !f.failed,
            f.failed ? f.msg.str()
                     : std::to_string(oks_seen) + " ok / " + std::to_string(errors_seen) +
                           " error steps, state valid throughout"};
}

CriterionResult c6_binding_reduction() {
    Failure f;
    GroupParams g = tiny23();
    BindingAdversary adv = breaking_binding_adversary();

    // 100/100 inversions recover the discrete log of H.
    int recovered = 0;
    for (uint64_t t = 0; t < 100; ++t) {
        Rng rng(kSuiteSeed + 7 + t);
        auto x = inversor_dlog(g, adv, rng);
        if (x && scalar_mul(g, *x, g.G) == g.H) recovered++;
    }
    if (recovered != 100)
        f.fail("inversor recovered H in " + std::to_string(recovered) + "/100 trials");

    // Exact success-rate equality over 200 seeded trials.
    GameResult a = game_binding(g, adv, 200, kSuiteSeed);
    GameResult d = game_dlog(g, adv, 200, kSuiteSeed);
    if (a.successes != d.successes || a.success_rate != d.success_rate)
        f.fail("success rates differ: " + std::to_string(a.successes) + " vs " +
               std::to_string(d.successes));
    return {6, "binding reduction (100/100 inversions, rate equality over 200)", !f.failed,
            f.failed ? f.msg.str() : "dlog of H recovered every time"};
}

CriterionResult c7_perfect_hiding() {
    Failure f;
    GroupParams g = tiny23();
    GameResult r = game_hiding(g, exhaustive_hiding_adversary(), 10000, kSuiteSeed + 8);
    if (r.success_rate < 0.48 || r.success_rate > 0.52)
        f.fail("unbounded adversary rate " + std::to_string(r.success_rate));

    // Exact multiset equality of commitment images for two values.
    auto image = [&](uint64_t v) {
        std::vector<uint64_t> pts;
        for (uint64_t rr = 0; rr < 23; ++rr)
            pts.push_back(
                residue(commit(g, Opening{scalar_from_u64(g, v), scalar_from_u64(g, rr)}).point));
        std::sort(pts.begin(), pts.end());
        return pts;
    };
    if (image(4) != image(19)) f.fail("commitment images differ between values");
    std::vector<uint64_t> whole;
    for (uint64_t x = 0; x < 23; ++x) whole.push_back(x);
    if (image(4) != whole) f.fail("image is not the whole group");
    return {7, "perfect hiding (rate 0.5 +/- 0.02 over 10000, exact image equality)", !f.failed,
            f.failed ? f.msg.str() : "rate " + std::to_string(r.success_rate)};
}

CriterionResult c8_fcr_axioms() {
    Failure f;
    ChainPolicy policy;
    ConsensusParams cp = default_consensus_params(tiny1009(), policy);
    LocState st = init_state(cp, 0);
    auto [s1, o1] = mint(cp, st, 0);
    auto [s2, o2] = mint(cp, s1, 1);
    std::vector<CBlock> alphabet;
    for (const auto& [h, b] : s2.forest) alphabet.push_back(b);
    if (alphabet.size() != 3) f.fail("alphabet construction failed");

    std::vector<ChainSeq> chains;
    chains.push_back({});
    size_t start = 0;
    for (int len = 1; len <= 4; ++len) {
        size_t end = chains.size();
        for (size_t i = start; i < end; ++i)
            for (const auto& b : alphabet) {
                ChainSeq c = chains[i];
                c.push_back(b);
                chains.push_back(std::move(c));
            }
        start = end;
    }

    auto less = cp.fcr_less;
    uint64_t violations = 0;
    for (const auto& x : chains)
        for (const auto& y : chains) {
            bool xy = less(x, y), yx = less(y, x);
            if (x == y && (xy || yx)) violations++;            // irreflexive
            if (!(x == y) && !(xy ^ yx)) violations++;         // total, antisymmetric
            ChainSeq ext = x;
            ext.insert(ext.end(), y.begin(), y.end());
            ext.push_back(alphabet[0]);
            if (!less(x, ext)) violations++;                   // extensions heavier
            if (x.size() <= y.size() && std::equal(x.begin(), x.end(), y.begin()) &&
                !(x == y) && !xy)
                violations++;                                  // prefixes lighter
        }
    for (const auto& x : chains)
        for (const auto& y : chains) {
            if (!less(x, y)) continue;
            for (const auto& z : chains)
                if (less(y, z) && !less(x, z)) violations++;   // transitive
        }
    if (violations != 0) f.fail(std::to_string(violations) + " axiom violations");
    return {8, "FCR axioms (all 121 chains of length <= 4 over 3 blocks)", !f.failed,
            f.failed ? f.msg.str() : "zero violations"};
}

CriterionResult c9_trace_replay() {
    Failure f;
    ChainPolicy policy;
    ConsensusParams cp = default_consensus_params(tiny1009(), policy);
    const Addr self = 9, a1 = 1, a2 = 2, a3 = 3;
    LocState st = init_state(cp, self);

    auto [s1, out1] = rcv(cp, st, Packet{a1, self, AddrMsg{{a1, a2}}});
    if (!(s1.peers == std::set<Addr>{a1, a2})) f.fail("first step: wrong peer set");
    std::multiset<std::pair<Addr, size_t>> got1, want1{{a1, 1}, {a2, 1}};
    for (const auto& p : out1) got1.insert({p.to, p.msg.index()});
    if (got1 != want1) f.fail("first step: wrong output set");

    auto [s2, out2] = rcv(cp, s1, Packet{a1, self, AddrMsg{{a1, a3}}});
    if (!(s2.peers == std::set<Addr>{a1, a2, a3})) f.fail("second step: wrong peer set");
    // Exactly: ConnectMsg to a3, AddrMsg({a1,a2,a3}) to a1 and to a2.
    size_t connects = 0, addrs = 0;
    for (const auto& p : out2) {
        if (std::holds_alternative<ConnectMsg>(p.msg)) {
            connects++;
            if (p.to != a3) f.fail("connect sent to the wrong peer");
        } else if (const auto* am = std::get_if<AddrMsg>(&p.msg)) {
            addrs++;
            if (!(am->addrs == std::set<Addr>{a1, a2, a3})) f.fail("wrong address book");
            if (p.to != a1 && p.to != a2) f.fail("address book sent to the wrong peer");
        } else {
            f.fail("unexpected message kind in output");
        }
    }
    if (connects != 1 || addrs != 2 || out2.size() != 3) f.fail("second step: wrong output set");
    return {9, "trace replay (two rcvAddr steps, exact sets)", !f.failed,
            f.failed ? f.msg.str() : "bindings reproduced"};
}

CriterionResult c10_convergence() {
    Failure f;
    SimConfig cfg;
    cfg.n_nodes = 5;
    cfg.topology = Topology::clique;
    cfg.seed = kSuiteSeed + 9;
    cfg.tiny = TinyConstants{1009, 5, 7, 11};
    cfg.policy.tx = bits16();
    cfg.round_robin_mint = true;

    Scenario sc;
    for (int i = 0; i < 3; ++i) {
        Injection inj;
        inj.at = 1 + i;
        inj.action = Injection::Action::submit_tx;
        inj.node = static_cast<Addr>(i);
        sc.push_back(inj);
    }
    for (Tick t = 20; t <= 60; t += 20) {
        Injection inj;
        inj.at = t;
        inj.action = Injection::Action::mint;
        inj.node = Injection::kAllNodes;
        sc.push_back(inj);
    }

    SimReport a = run(cfg, sc);
    if (!a.ledgers_agree) f.fail("ledgers diverged");
    if (a.ledger_hashes.size() != 5) f.fail("missing nodes");
    for (const auto& h : a.ledger_hashes)
        if (h != a.ledger_hashes[0]) f.fail("hash mismatch");

    SimReport b = run(cfg, sc);
    if (to_json(a).dump() != to_json(b).dump()) f.fail("repeat run differed");
    return {10, "consensus convergence (5-node clique, 3 txs, repeatable)", !f.failed,
            f.failed ? f.msg.str() : "five identical ledger hashes, byte-identical repeat"};
}

CriterionResult c11_dandelion() {
    Failure f;

    // 2000 transactions across 20 seeded runs; merged stem histogram.
    std::map<uint32_t, uint64_t> hist;
    for (uint64_t batch = 0; batch < 20; ++batch) {
        SimConfig cfg;
        cfg.n_nodes = 5;
        cfg.topology = Topology::clique;
        cfg.seed = kSuiteSeed + 100 + batch;
        cfg.tiny = TinyConstants{1009, 5, 7, 11};
        cfg.policy.tx = bits16();
        cfg.dandelion.enabled = true;
        cfg.dandelion.coin_p = 0.5;
        cfg.dandelion.max_stem = 16;
        Scenario sc;
        for (int i = 0; i < 100; ++i) {
            Injection inj;
            inj.at = 1 + i;
            inj.action = Injection::Action::submit_tx;
            inj.node = static_cast<Addr>(i % cfg.n_nodes);
            sc.push_back(inj);
        }
        SimReport r = run(cfg, sc);
        for (const auto& [hops, count] : r.stem_histogram) hist[hops] += count;
    }

    // Chi-square against Geometric(1/2): buckets 0..7 plus a merged tail,
    // expected counts 2000 * 0.5^(j+1) and 2000 * 0.5^8 for the tail.
    const double n_txs = 2000.0;
    double chi2 = 0.0;
    uint64_t seen = 0;
    for (uint32_t j = 0; j < 8; ++j) {
        double expected = n_txs * std::pow(0.5, j + 1);
        double observed = hist.count(j) ? static_cast<double>(hist.at(j)) : 0.0;
        seen += static_cast<uint64_t>(observed);
        chi2 += (observed - expected) * (observed - expected) / expected;
    }
    double tail_expected = n_txs * std::pow(0.5, 8);
    double tail_observed = 0;
    for (const auto& [hops, count] : hist)
        if (hops >= 8) tail_observed += static_cast<double>(count);
    seen += static_cast<uint64_t>(tail_observed);
    chi2 += (tail_observed - tail_expected) * (tail_observed - tail_expected) / tail_expected;

    // chi-square critical value, significance 0.01, df = 8.
    const double kCrit = 20.090;
    if (seen != 2000) f.fail("histogram lost transactions");
    if (chi2 >= kCrit) f.fail("chi2 = " + std::to_string(chi2) + " >= 20.090");

    // Beam dummy batch: every transaction gains exactly one zero-value
    // output and the joined aggregate still validates.
    SimConfig bcfg;
    bcfg.n_nodes = 4;
    bcfg.topology = Topology::clique;
    bcfg.seed = kSuiteSeed + 200;
    bcfg.tiny = TinyConstants{1009, 5, 7, 11};
    bcfg.policy.tx = bits16();
    bcfg.policy.tx.incubation_enabled = true;
    bcfg.dandelion.enabled = true;
    bcfg.dandelion.coin_p = 0.5;
    bcfg.beam_dummy.enabled = true;
    bcfg.beam_dummy.incubation_min = 1;
    bcfg.beam_dummy.incubation_max = 5;
    Scenario bsc;
    for (int i = 0; i < 200; ++i) {
        Injection inj;
        inj.at = 1 + i;
        inj.action = Injection::Action::submit_tx;
        inj.node = static_cast<Addr>(i % bcfg.n_nodes);
        bsc.push_back(inj);
    }
    SimReport br = run(bcfg, bsc);
    if (br.tx_traces.size() != 200) f.fail("beam batch lost transactions");
    for (const auto& t : br.tx_traces) {
        if (!t.dummy_added || !t.dummy_is_zero) f.fail("dummy output missing or nonzero");
        if (t.outputs_after != t.outputs_before + 1) f.fail("dummy output count wrong");
        if (!t.aggregate_valid) f.fail("joined aggregate failed validation");
    }
    return {11, "dandelion statistics (chi-square at 0.01) and beam dummy outputs", !f.failed,
            f.failed ? f.msg.str() : "chi2 = " + std::to_string(chi2) + ", 200 dummies valid"};
}

CriterionResult c12_double_spend_incubation() {
    Failure f;
    GroupParams g = tiny1009();
    ChainPolicy policy;
    policy.tx = bits16();
    policy.tx.incubation_enabled = true;
    policy.allow_grants = true;
    policy.grant_amount = 10;
    Rng rng(kSuiteSeed + 10);

    NodeState state;
    Opening coin{scalar_from_u64(g, 10), random_scalar(g, rng)};
    if (!grant(g, state, {coin}, Scalar{0}, policy, rng).ok()) f.fail("seed grant failed");

    // Incubated output created at height 2.
    Opening incubated{scalar_from_u64(g, 10), random_scalar(g, rng)};
    TxBuilder tb;
    tb.add_input(coin);
    tb.add_output(incubated, 4);
    tb.set_offset(random_scalar(g, rng));
    Transaction t = tb.build(g, policy.tx, rng);
    if (!append_block(g, state, block_from_aggregate(to_aggregate(t)), policy).ok())
        f.fail("incubated append failed");

    // Early spend: incubation-violation, state untouched.
    Opening out{scalar_from_u64(g, 10), random_scalar(g, rng)};
    Transaction spend =
        build_transaction(g, {incubated}, {out}, random_scalar(g, rng), policy.tx, rng);
    Block spend_block = block_from_aggregate(to_aggregate(spend));
    Bytes before = serialize_state(g, state);
    Response early = append_block(g, state, spend_block, policy);
    if (early.ok() || *early.ec != ErrorCode::incubation_violation)
        f.fail("expected incubation-violation");
    if (!(serialize_state(g, state) == before)) f.fail("incubation error mutated state");

    // Mature spend succeeds; a second spend of the same input is a
    // double-spend and leaves the state untouched.
    while (state.chain.blocks.size() < 2 + 4)
        if (!append_block(g, state, empty_block(), policy).ok()) f.fail("padding failed");
    if (!append_block(g, state, spend_block, policy).ok()) f.fail("mature spend failed");

    Bytes before2 = serialize_state(g, state);
    Opening out2{scalar_from_u64(g, 10), random_scalar(g, rng)};
    Transaction respend =
        build_transaction(g, {incubated}, {out2}, random_scalar(g, rng), policy.tx, rng);
    Response ds = append_block(g, state, block_from_aggregate(to_aggregate(respend)), policy);
    if (ds.ok() || *ds.ec != ErrorCode::double_spend) f.fail("expected double-spend");
    if (!(serialize_state(g, state) == before2)) f.fail("double-spend error mutated state");
    if (!valid_state(g, state, policy)) f.fail("final state invalid");
    return {12, "double-spend and incubation errors with frame condition", !f.failed,
            f.failed ? f.msg.str() : "both error codes observed, state bit-identical"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out) {
    std::vector<CriterionResult> results;
    CriterionResult (*criteria[])() = {
        c1_homomorphism,     c2_no_coin_inflation, c3_aggregation_invariance,
        c4_cut_through,      c5_validity_invariant, c6_binding_reduction,
        c7_perfect_hiding,   c8_fcr_axioms,         c9_trace_replay,
        c10_convergence,     c11_dandelion,         c12_double_spend_incubation,
    };
    for (auto* fn : criteria) {
        CriterionResult r = fn();
        out << "[" << (r.pass ? "PASS" : "FAIL") << "] criterion " << r.id << ": " << r.name;
        if (!r.detail.empty()) out << " -- " << r.detail;
        out << "\n" << std::flush;
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return !rs.empty();
}

}  // namespace mw
