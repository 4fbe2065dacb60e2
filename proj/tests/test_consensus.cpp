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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"

#include "mwk/consensus.hpp"

using namespace mw;

namespace {

ConsensusParams make_cp() {
    ChainPolicy policy;
    policy.tx.range_bits = 16;
    return default_consensus_params(oracle::tiny_big_params(), policy);
}

Tx zero_tx(const GroupParams& g, uint64_t seed) {
    Rng rng(seed);
    TxBuilder b;
    b.add_output(Opening{Scalar{0}, random_scalar(g, rng)});
    return to_aggregate(b.build(g, TxPolicy{16, RangeProofKind::bits, false}, rng));
}

// Multiset comparison for packet sets.
bool same_packets(const ConsensusParams& cp, std::vector<Packet> a, std::vector<Packet> b) {
    auto key = [&](const Packet& p) {
        ByteWriter w;
        w.u32(p.from);
        w.u32(p.to);
        w.u32(static_cast<uint32_t>(p.msg.index()));
        if (const auto* am = std::get_if<AddrMsg>(&p.msg))
            for (Addr x : am->addrs) w.u32(x);
        if (const auto* im = std::get_if<InvMsg>(&p.msg))
            for (const auto& h : im->hashes) w.blob(h);
        if (const auto* gm = std::get_if<GetDataMsg>(&p.msg)) w.blob(gm->hash);
        if (const auto* tm = std::get_if<TxMsg>(&p.msg)) w.blob(cp.hasht(tm->tx));
        if (const auto* bm = std::get_if<BlockMsg>(&p.msg)) w.blob(cp.hashb(bm->block));
        return w.take();
    };
    std::vector<Bytes> ka, kb;
    for (const auto& p : a) ka.push_back(key(p));
    for (const auto& p : b) kb.push_back(key(p));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

}  // namespace

TEST_CASE("the genesis block satisfies its axioms") {
    ConsensusParams cp = make_cp();
    CHECK(cp.genesis.prev == cp.hashb(cp.genesis));  // GB.prev = hashb(GB)
    CHECK(cp.genesis.txs.empty());
    LocState st = init_state(cp, 1);
    CHECK(st.forest.size() == 1);
    CHECK(is_genesis(cp, st.forest.begin()->second));
}

TEST_CASE("trace replay: two rcvAddr steps") {
    ConsensusParams cp = make_cp();
    const Addr self = 9, a1 = 1, a2 = 2, a3 = 3;
    LocState st = init_state(cp, self);
    REQUIRE(st.peers.empty());

    // First AddrMsg({a1, a2}): both become peers, a connect goes to each,
    // and nobody was known before so no AddrMsg goes out.
    auto [s1, out1] = rcv(cp, st, Packet{a1, self, AddrMsg{{a1, a2}}});
    CHECK(s1.peers == std::set<Addr>{a1, a2});
    CHECK(same_packets(cp, out1,
                       {Packet{self, a1, ConnectMsg{}}, Packet{self, a2, ConnectMsg{}}}));

    // Second AddrMsg({a1, a3}): only a3 is new; the already-known peers
    // a1 and a2 get the updated address book.
    auto [s2, out2] = rcv(cp, s1, Packet{a1, self, AddrMsg{{a1, a3}}});
    CHECK(s2.peers == std::set<Addr>{a1, a2, a3});
    AddrMsg book{{a1, a2, a3}};
    CHECK(same_packets(cp, out2,
                       {Packet{self, a3, ConnectMsg{}}, Packet{self, a1, book},
                        Packet{self, a2, book}}));
}

TEST_CASE("rcv NullMsg leaves the state unchanged with no output") {
    ConsensusParams cp = make_cp();
    LocState st = init_state(cp, 5);
    auto [next, out] = rcv(cp, st, Packet{1, 5, NullMsg{}});
    CHECK(next == st);
    CHECK(out.empty());
}

TEST_CASE("packets addressed elsewhere are dropped") {
    ConsensusParams cp = make_cp();
    LocState st = init_state(cp, 5);
    auto [next, out] = rcv(cp, st, Packet{1, 6, ConnectMsg{}});
    CHECK(next == st);
    CHECK(out.empty());
}

TEST_CASE("rcv ConnectMsg adds the sender and answers with an inventory") {
    ConsensusParams cp = make_cp();
    LocState st = init_state(cp, 5);
    Tx t = zero_tx(cp.group, 60);
    cp.tx_extend(st.pool, t, cp.hasht(t));

    auto [next, out] = rcv(cp, st, Packet{7, 5, ConnectMsg{}});
    CHECK(next.peers == std::set<Addr>{7});
    REQUIRE(out.size() == 1);
    CHECK(out[0].to == 7);
    const auto* inv = std::get_if<InvMsg>(&out[0].msg);
    REQUIRE(inv != nullptr);
    // dom bf + hashes of the pool
    CHECK(inv->hashes.size() == 2);
    CHECK(inv->hashes.count(cp.hasht(t)) == 1);
    CHECK(inv->hashes.count(cp.hashb(cp.genesis)) == 1);
}

TEST_CASE("rcv TxMsg extends the pool and informs every peer") {
    ConsensusParams cp = make_cp();
    LocState st = init_state(cp, 5);
    st.peers = {1, 2};
    Tx t = zero_tx(cp.group, 61);

    auto [next, out] = rcv(cp, st, Packet{1, 5, TxMsg{t}});
    CHECK(next.pool.size() == 1);
    REQUIRE(out.size() == 2);
    for (const auto& p : out) {
        const auto* inv = std::get_if<InvMsg>(&p.msg);
        REQUIRE(inv != nullptr);
        CHECK(inv->hashes.count(cp.hasht(t)) == 1);
    }
}

TEST_CASE("rcv InvMsg requests exactly the unknown hashes from the sender") {
    ConsensusParams cp = make_cp();
    LocState st = init_state(cp, 5);
    Tx t = zero_tx(cp.group, 62);
    cp.tx_extend(st.pool, t, cp.hasht(t));

    HashVal unknown1(32, 0xaa);
    HashVal unknown2(32, 0xbb);
    InvMsg inv{{cp.hasht(t), cp.hashb(cp.genesis), unknown1, unknown2}};
    auto [next, out] = rcv(cp, st, Packet{3, 5, inv});
    CHECK(next == st);
    CHECK(same_packets(cp, out,
                       {Packet{5, 3, GetDataMsg{unknown1}}, Packet{5, 3, GetDataMsg{unknown2}}}));
}

TEST_CASE("rcv GetDataMsg serves blocks, then transactions, else NullMsg") {
    ConsensusParams cp = make_cp();
    LocState st = init_state(cp, 5);
    Tx t = zero_tx(cp.group, 63);
    cp.tx_extend(st.pool, t, cp.hasht(t));

    auto [s1, out_block] = rcv(cp, st, Packet{3, 5, GetDataMsg{cp.hashb(cp.genesis)}});
    REQUIRE(out_block.size() == 1);
    CHECK(std::holds_alternative<BlockMsg>(out_block[0].msg));

    auto [s2, out_tx] = rcv(cp, st, Packet{3, 5, GetDataMsg{cp.hasht(t)}});
    REQUIRE(out_tx.size() == 1);
    const auto* tm = std::get_if<TxMsg>(&out_tx[0].msg);
    REQUIRE(tm != nullptr);
    CHECK(cp.hasht(tm->tx) == cp.hasht(t));

    auto [s3, out_null] = rcv(cp, st, Packet{3, 5, GetDataMsg{HashVal(32, 0xee)}});
    REQUIRE(out_null.size() == 1);
    CHECK(std::holds_alternative<NullMsg>(out_null[0].msg));
    CHECK(out_null[0].to == 3);
}

TEST_CASE("rcv BlockMsg stores blocks without validity checks") {
    ConsensusParams cp = make_cp();
    LocState st = init_state(cp, 5);
    CBlock orphan{HashVal(32, 0x77), {}, ProofObj{4, 9}};  // parent unknown
    auto [next, out] = rcv(cp, st, Packet{4, 5, BlockMsg{orphan}});
    CHECK(next.forest.size() == 2);
    CHECK(next.forest.count(cp.hashb(orphan)) == 1);
    // The orphan never shows up in the ledger though.
    CHECK(ledger(cp, next.forest) == ChainSeq{cp.genesis});
}

TEST_CASE("rcv is a pure function: replays agree") {
    ConsensusParams cp = make_cp();
    LocState st = init_state(cp, 5);
    st.peers = {1, 2, 3};
    Packet p{2, 5, AddrMsg{{4, 1}}};
    auto r1 = rcv(cp, st, p);
    auto r2 = rcv(cp, st, p);
    CHECK(r1.first == r2.first);
    CHECK(r1.second == r2.second);
}

TEST_CASE("chain_of walks prev-links and degenerates to <GB>") {
    ConsensusParams cp = make_cp();
    LocState st = init_state(cp, 0);

    CHECK(chain_of(cp, st.forest, cp.genesis) == ChainSeq{cp.genesis});

    // Linear forest GB <- b1 <- b2 by minting twice.
    auto [s1, o1] = mint(cp, st, 0);
    ChainSeq led1 = ledger(cp, s1.forest);
    REQUIRE(led1.size() == 2);
    auto [s2, o2] = mint(cp, s1, 1);
    ChainSeq led2 = ledger(cp, s2.forest);
    REQUIRE(led2.size() == 3);
    CBlock b2 = led2.back();
    ChainSeq walked = chain_of(cp, s2.forest, b2);
    REQUIRE(walked.size() == 3);
    CHECK(is_genesis(cp, walked[0]));
    CHECK(walked[1].prev == cp.hashb(walked[0]));
    CHECK(walked[2].prev == cp.hashb(walked[1]));

    // A block outside the forest.
    CBlock stranger{cp.hashb(cp.genesis), {}, ProofObj{42, 1}};
    CHECK(chain_of(cp, s2.forest, stranger) == ChainSeq{cp.genesis});

    // An orphan inside the forest.
    CBlock orphan{HashVal(32, 0x55), {}, ProofObj{7, 3}};
    BlockForest bf = s2.forest;
    bf[cp.hashb(orphan)] = orphan;
    CHECK(chain_of(cp, bf, orphan) == ChainSeq{cp.genesis});
}

TEST_CASE("ledger picks the longer fork, ties break deterministically") {
    ConsensusParams cp = make_cp();
    LocState a = init_state(cp, 0);

    // Fork: node 0 mints one block; node 1 mints two on its own copy.
    auto [a1, oa] = mint(cp, a, 0);
    LocState b = init_state(cp, 1);
    auto [b1, ob1] = mint(cp, b, 0);
    auto [b2, ob2] = mint(cp, b1, 1);

    BlockForest merged = a1.forest;
    for (const auto& [h, blk] : b2.forest) merged.emplace(h, blk);
    ChainSeq led = ledger(cp, merged);
    CHECK(led.size() == 3);  // the longer branch wins

    // Every ledger block is in the forest, and the ledger is one of the
    // per-block chains by construction.
    for (const auto& blk : led) CHECK(merged.count(cp.hashb(blk)) == 1);

    // Equal-length fork: both nodes mint one block each; the winner is
    // stable across evaluation order.
    BlockForest tie = a1.forest;
    for (const auto& [h, blk] : b1.forest) tie.emplace(h, blk);
    ChainSeq led1 = ledger(cp, tie);
    ChainSeq led2 = ledger(cp, tie);
    CHECK(led1 == led2);
    CHECK(led1.size() == 2);
}

TEST_CASE("FCR satisfies the order axioms on all small chains") {
    ConsensusParams cp = make_cp();
    LocState st = init_state(cp, 0);
    // A 3-block alphabet.
    auto [s1, o1] = mint(cp, st, 0);
    auto [s2, o2] = mint(cp, s1, 1);
    std::vector<CBlock> alphabet;
    for (const auto& [h, b] : s2.forest) alphabet.push_back(b);
    REQUIRE(alphabet.size() == 3);

    // All sequences of length 0..4 over the alphabet (with repetition).
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
    size_t violations = 0;
    for (const auto& x : chains)
        for (const auto& y : chains) {
            bool xy = less(x, y), yx = less(y, x);
            if (x == y) {
                if (xy || yx) violations++;  // irreflexivity (and antisymmetry)
            } else {
                if (!(xy ^ yx)) violations++;  // totality, one direction only
            }
        }
    // Transitivity.
    for (const auto& x : chains)
        for (const auto& y : chains)
            for (const auto& z : chains)
                if (less(x, y) && less(y, z) && !less(x, z)) violations++;
    // Extensions are heavier; prefixes are lighter-or-equal.
    for (const auto& x : chains)
        for (const auto& y : chains) {
            ChainSeq ext = x;
            ext.insert(ext.end(), y.begin(), y.end());
            ext.push_back(alphabet[0]);
            if (!less(x, ext)) violations++;
            if (x.size() <= y.size() && std::equal(x.begin(), x.end(), y.begin())) {
                if (!(x == y) && !less(x, y)) violations++;
            }
        }
    CHECK(violations == 0);
}

TEST_CASE("mint extends the ledger and clears mined transactions") {
    ConsensusParams cp = make_cp();
    LocState st = init_state(cp, 0);
    st.peers = {1};

    // Fresh node: empty block on top of GB.
    auto [s1, out1] = mint(cp, st, 0);
    ChainSeq led = ledger(cp, s1.forest);
    REQUIRE(led.size() == 2);
    CHECK(led[1].txs.empty());
    REQUIRE(out1.size() == 1);
    CHECK(std::holds_alternative<BlockMsg>(out1[0].msg));

    // With a pending transaction: it gets mined and drops out of the pool.
    Tx t = zero_tx(cp.group, 64);
    cp.tx_extend(s1.pool, t, cp.hasht(t));
    auto [s2, out2] = mint(cp, s1, 1);
    ChainSeq led2 = ledger(cp, s2.forest);
    REQUIRE(led2.size() == 3);
    REQUIRE(led2[2].txs.size() == 1);
    CHECK(cp.hasht(led2[2].txs[0]) == cp.hasht(t));
    CHECK(s2.pool.empty());
}

TEST_CASE("mint is a no-op when VAF rejects") {
    ConsensusParams cp = make_cp();
    cp.vaf = [](const ProofObj&, uint64_t, const ChainSeq&) { return false; };
    LocState st = init_state(cp, 0);
    auto [next, out] = mint(cp, st, 0);
    CHECK(next == st);
    CHECK(out.empty());
}

TEST_CASE("VAF re-validation of an in-chain proof fails by height") {
    ConsensusParams cp = make_cp();
    LocState st = init_state(cp, 0);
    auto [s1, o1] = mint(cp, st, 0);
    ChainSeq led = ledger(cp, s1.forest);
    REQUIRE(led.size() == 2);
    // The axiom instance: a block of the chain cannot validate against it.
    for (const auto& b : led) CHECK_FALSE(cp.vaf(b.pf, 5, led));
}

TEST_CASE("round-robin eligibility gates minting by height") {
    ChainPolicy policy;
    ConsensusParams cp = default_consensus_params(oracle::tiny_big_params(), policy, 3);
    LocState st0 = init_state(cp, 0);
    LocState st1 = init_state(cp, 1);
    // Height 1 belongs to node 1 (1 mod 3).
    auto [n0, out0] = mint(cp, st0, 0);
    CHECK(n0 == st0);
    auto [n1, out1] = mint(cp, st1, 0);
    CHECK(ledger(cp, n1.forest).size() == 2);
}

TEST_CASE("pool transactions spending unknown outputs never enter blocks") {
    ConsensusParams cp = make_cp();
    GroupParams g = cp.group;
    Rng rng(65);
    // Spends a commitment that is in no chain.
    Tx phantom = to_aggregate(build_transaction(
        g, {Opening{oracle::sc(g, 4), oracle::sc(g, 99)}},
        {Opening{oracle::sc(g, 4), random_scalar(g, rng)}}, Scalar{0}, cp.policy.tx, rng));
    LocState st = init_state(cp, 0);
    cp.tx_extend(st.pool, phantom, cp.hasht(phantom));
    auto [s1, out] = mint(cp, st, 0);
    ChainSeq led = ledger(cp, s1.forest);
    REQUIRE(led.size() == 2);
    CHECK(led[1].txs.empty());
    CHECK_FALSE(cp.tx_valid(phantom, led));
}
