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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "mwk/acceptance.hpp"
#include "mwk/json_codec.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

mw::Json parse_json_file(const std::string& path) {
    try {
        return mw::Json::parse(read_file(path));
    } catch (const mw::Json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void emit(const mw::Json& j) { std::cout << j.dump() << std::endl; }

struct Cli {
    std::string backend = "tiny";
    std::string config_path;
    uint64_t seed = 0;
    bool seed_given = false;

    mw::CliConfig config;
    mw::GroupParams group;

    void resolve() {
        if (!config_path.empty()) config = mw::cli_config_from_json(parse_json_file(config_path));
        if (backend == "tiny")
            config.backend = mw::Backend::tiny;
        else if (backend == "curve")
            config.backend = mw::Backend::curve;
        else
            throw UsageError("unknown backend '" + backend + "'");
        if (seed_given) config.seed = seed;
        group = mw::setup(config.backend, config.seed, config.tiny);
    }
};

mw::Scalar scalar_from_value(const mw::GroupParams& g, const mw::Json& j, const char* what) {
    if (j.is_number_unsigned()) return mw::scalar_from_u64(g, j.get<uint64_t>());
    if (j.is_string()) return mw::scalar_from_json(g, j);
    throw UsageError(std::string(what) + ": expected unsigned integer or hex string");
}

mw::Opening opening_from_json(const mw::GroupParams& g, const mw::Json& j) {
    mw::Opening o;
    o.v = scalar_from_value(g, j.at("v"), "opening value");
    o.r = scalar_from_value(g, j.at("r"), "opening blinding");
    return o;
}

int cmd_keys(Cli& cli) {
    mw::Rng rng(cli.config.seed);
    mw::Scalar secret = mw::random_scalar(cli.group, rng);
    mw::GroupElement pub = mw::scalar_mul(cli.group, secret, cli.group.G);
    emit(mw::Json{{"secret", mw::hex_encode(mw::encode(cli.group, secret))},
                  {"public", mw::hex_encode(mw::encode(cli.group, pub))}});
    return kExitOk;
}

int cmd_tx_build(Cli& cli, const std::string& spec_path) {
    mw::Json j = parse_json_file(spec_path);
    mw::TxBuilder builder;
    for (const auto& in : j.at("inputs")) builder.add_input(opening_from_json(cli.group, in));
    for (const auto& out : j.at("outputs")) {
        uint32_t inc = out.contains("incubation") ? out["incubation"].get<uint32_t>() : 0;
        builder.add_output(opening_from_json(cli.group, out), inc);
    }
    if (j.contains("tko")) builder.set_offset(scalar_from_value(cli.group, j["tko"], "tko"));
    mw::TxPolicy policy = cli.config.policy.tx;
    if (j.contains("range_bits")) policy.range_bits = j["range_bits"].get<uint32_t>();
    mw::Rng rng(cli.config.seed);
    try {
        mw::Transaction t = builder.build(cli.group, policy, rng);
        emit(mw::to_json(cli.group, t));
        return kExitOk;
    } catch (const mw::TxError& e) {
        emit(mw::Json{{"ok", false}, {"error", e.what()}});
        return kExitValidation;
    }
}

int cmd_tx_verify(Cli& cli, const std::string& tx_path) {
    mw::Json j = parse_json_file(tx_path);
    mw::TxCheck check;
    if (j.contains("kernel") && !j.contains("kernels")) {
        mw::Transaction t = mw::transaction_from_json(cli.group, j);
        check = mw::validate_transaction(cli.group, t, cli.config.policy.tx);
    } else {
        mw::AggregateTransaction t = mw::aggregate_from_json(cli.group, j);
        check = mw::validate_aggregate(cli.group, t, cli.config.policy.tx);
    }
    if (check == mw::TxCheck::ok) {
        emit(mw::Json{{"ok", true}});
        return kExitOk;
    }
    emit(mw::Json{{"ok", false}, {"clause", mw::clause_name(check)}});
    return kExitValidation;
}

int cmd_block_join(Cli& cli, const std::string& tx_path, const std::string& block_path) {
    mw::Transaction t = mw::transaction_from_json(cli.group, parse_json_file(tx_path));
    mw::Block b = mw::block_from_json(cli.group, parse_json_file(block_path));
    try {
        mw::Block joined = mw::block_aggregate(cli.group, t, b, cli.config.policy.tx);
        emit(mw::to_json(cli.group, joined));
        return kExitOk;
    } catch (const mw::TxError& e) {
        emit(mw::Json{{"ok", false}, {"error", e.what()}});
        return kExitValidation;
    }
}

int cmd_block_cutthrough(Cli& cli, const std::string& block_path) {
    mw::Block b = mw::block_from_json(cli.group, parse_json_file(block_path));
    emit(mw::to_json(cli.group, mw::cut_through(b)));
    return kExitOk;
}

int cmd_block_verify(Cli& cli, const std::string& block_path) {
    mw::Block b = mw::block_from_json(cli.group, parse_json_file(block_path));
    mw::BlockCheck check = mw::validate_block(cli.group, b, cli.config.policy.tx);
    if (check == mw::BlockCheck::ok) {
        emit(mw::Json{{"ok", true}});
        return kExitOk;
    }
    emit(mw::Json{{"ok", false}, {"clause", mw::clause_name(check)}});
    return kExitValidation;
}

int cmd_chain_validate(Cli& cli, const std::string& chain_path) {
    mw::Chain c = mw::chain_from_lines(cli.group, read_file(chain_path));
    if (mw::valid_chain(cli.group, c, cli.config.policy)) {
        emit(mw::Json{{"ok", true}, {"height", c.height()}});
        return kExitOk;
    }
    emit(mw::Json{{"ok", false}});
    return kExitValidation;
}

int cmd_chain_append(Cli& cli, const std::string& chain_path, const std::string& tx_path) {
    mw::Chain c = mw::chain_from_lines(cli.group, read_file(chain_path));
    mw::Json tj = parse_json_file(tx_path);
    // Accept either a block file or an aggregate-transaction file; the
    // latter is wrapped as a single-aggregate block.
    mw::Block b;
    if (tj.contains("ko"))
        b = mw::block_from_json(cli.group, tj);
    else
        b = mw::block_from_aggregate(mw::aggregate_from_json(cli.group, tj));
    mw::Response r = mw::validate_append(cli.group, c, b, cli.config.policy);
    if (!r.ok()) {
        emit(mw::Json{{"ok", false}, {"error", mw::error_name(*r.ec)}});
        return kExitValidation;
    }
    c.blocks.push_back(b);
    std::cout << mw::chain_to_lines(cli.group, c);
    return kExitOk;
}

int cmd_sim_run(Cli& cli, const std::string& config_path, const std::string& scenario_path,
                const std::string& report_path) {
    mw::SimConfig cfg;
    if (!config_path.empty()) cfg = mw::sim_config_from_json(parse_json_file(config_path));
    if (cli.seed_given) cfg.seed = cli.seed;
    mw::GroupParams group = mw::setup(cfg.backend, cfg.seed, cfg.tiny);
    mw::Scenario scenario;
    if (!scenario_path.empty())
        scenario = mw::scenario_from_json(group, parse_json_file(scenario_path));
    mw::SimReport report = mw::run(cfg, scenario);
    mw::Json out = mw::to_json(report);
    if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) throw UsageError("cannot write report: " + report_path);
        f << out.dump(2) << "\n";
    }
    emit(out);
    return kExitOk;
}

int cmd_game_run(Cli& cli, const std::string& game, uint64_t trials, std::string adversary) {
    bool tiny = cli.group.backend == mw::Backend::tiny;
    mw::GameResult result;
    if (game == "binding" || game == "dlog") {
        if (adversary.empty()) adversary = tiny ? "breaking" : "random";
        mw::BindingAdversary adv;
        if (adversary == "breaking")
            adv = mw::breaking_binding_adversary();
        else if (adversary == "honest")
            adv = mw::honest_binding_adversary();
        else if (adversary == "random")
            adv = mw::random_binding_adversary();
        else
            throw UsageError("unknown binding adversary '" + adversary + "'");
        result = game == "binding"
                     ? mw::game_binding(cli.group, adv, trials, cli.config.seed)
                     : mw::game_dlog(cli.group, adv, trials, cli.config.seed);
    } else if (game == "hiding") {
        if (adversary.empty()) adversary = tiny ? "exhaustive" : "guess";
        mw::HidingAdversary adv;
        if (adversary == "exhaustive")
            adv = mw::exhaustive_hiding_adversary();
        else if (adversary == "guess")
            adv = mw::random_guess_hiding_adversary();
        else if (adversary == "constant0")
            adv = mw::constant_hiding_adversary(0);
        else
            throw UsageError("unknown hiding adversary '" + adversary + "'");
        result = mw::game_hiding(cli.group, adv, trials, cli.config.seed);
    } else {
        throw UsageError("unknown game '" + game + "'");
    }
    mw::Json out = mw::to_json(result);
    out["game"] = game;
    out["adversary"] = adversary;
    emit(out);
    return kExitOk;
}

int cmd_acceptance() {
    // Lines go to stderr so stdout stays machine-readable.
    auto results = mw::run_acceptance(std::cerr);
    mw::Json out = mw::Json::array();
    for (const auto& r : results)
        out.push_back(mw::Json{
            {"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    emit(mw::Json{{"ok", mw::all_passed(results)}, {"criteria", out}});
    return mw::all_passed(results) ? kExitOk : kExitValidation;
}

int cmd_node_step(Cli& cli, const std::string& state_path, const std::string& packet_path) {
    mw::ConsensusParams cp = mw::default_consensus_params(cli.group, cli.config.policy);
    mw::LocState st = mw::locstate_from_json(cli.group, parse_json_file(state_path));
    if (st.forest.empty()) st = mw::init_state(cp, st.self);
    mw::Packet p = mw::packet_from_json(cli.group, parse_json_file(packet_path));
    auto [next, out] = mw::rcv(cp, st, p);
    mw::Json packets = mw::Json::array();
    for (const auto& q : out) packets.push_back(mw::to_json(cli.group, q));
    emit(mw::Json{{"state", mw::to_json(cli.group, next)}, {"out", packets}});
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MimbleWimble protocol toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags are accepted after subcommands too

    Cli cli;
    app.add_option("--backend", cli.backend, "group backend: tiny or curve")
        ->envname("MWK_BACKEND");
    app.add_option("--config", cli.config_path, "configuration file (JSON)")
        ->envname("MWK_CONFIG");
    auto* seed_opt =
        app.add_option("--seed", cli.seed, "deterministic seed")->envname("MWK_SEED");
    bool json_output = true;
    app.add_flag("--json", json_output, "machine-readable output (always on)");

    std::string arg_a, arg_b, arg_c;

    auto* keys = app.add_subcommand("keys", "generate a keypair from the seed");

    auto* tx = app.add_subcommand("tx", "transaction operations");
    tx->require_subcommand(1);
    auto* tx_build = tx->add_subcommand("build", "build a transaction from openings");
    tx_build->add_option("openings", arg_a, "openings file")->required();
    auto* tx_verify = tx->add_subcommand("verify", "validate a transaction file");
    tx_verify->add_option("tx", arg_a, "transaction file")->required();

    auto* block = app.add_subcommand("block", "block operations");
    block->require_subcommand(1);
    auto* block_join = block->add_subcommand("join", "aggregate a transaction into a block");
    block_join->add_option("tx", arg_a, "transaction file")->required();
    block_join->add_option("block", arg_b, "block file")->required();
    auto* block_cut = block->add_subcommand("cutthrough", "apply cut-through to a block");
    block_cut->add_option("block", arg_a, "block file")->required();
    auto* block_verify = block->add_subcommand("verify", "validate a block file");
    block_verify->add_option("block", arg_a, "block file")->required();

    auto* chain = app.add_subcommand("chain", "chain operations");
    chain->require_subcommand(1);
    auto* chain_validate = chain->add_subcommand("validate", "validate a chain file");
    chain_validate->add_option("chain", arg_a, "chain file (JSON lines)")->required();
    auto* chain_append = chain->add_subcommand("append", "append a transaction/block to a chain");
    chain_append->add_option("chain", arg_a, "chain file (JSON lines)")->required();
    chain_append->add_option("tx", arg_b, "transaction or block file")->required();

    auto* sim = app.add_subcommand("sim", "network simulator");
    sim->require_subcommand(1);
    auto* sim_run = sim->add_subcommand("run", "run a scenario to quiescence");
    std::string sim_config, sim_scenario, sim_report;
    sim_run->add_option("--config", sim_config, "simulator config (JSON)");
    sim_run->add_option("--scenario", sim_scenario, "scenario file (JSON array)");
    sim_run->add_option("--report", sim_report, "write the report here as well");

    auto* game = app.add_subcommand("game", "commitment security games");
    game->require_subcommand(1);
    auto* game_run = game->add_subcommand("run", "run a game");
    std::string game_name, game_adversary;
    uint64_t game_trials = 100;
    game_run->add_option("--game", game_name, "binding | hiding | dlog")->required();
    game_run->add_option("--trials", game_trials, "number of trials");
    game_run->add_option("--adversary", game_adversary, "adversary profile");

    auto* node = app.add_subcommand("node", "consensus node operations");
    node->require_subcommand(1);
    auto* node_step = node->add_subcommand("step", "apply one receive transition");
    std::string node_state, node_packet;
    node_step->add_option("--state", node_state, "local state file")->required();
    node_step->add_option("--packet", node_packet, "packet file")->required();

    auto* acceptance = app.add_subcommand("acceptance", "run the acceptance property suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        cli.seed_given = seed_opt->count() > 0 || std::getenv("MWK_SEED") != nullptr;
        cli.resolve();
        if (keys->parsed()) return cmd_keys(cli);
        if (tx->parsed()) {
            if (tx_build->parsed()) return cmd_tx_build(cli, arg_a);
            if (tx_verify->parsed()) return cmd_tx_verify(cli, arg_a);
        }
        if (block->parsed()) {
            if (block_join->parsed()) return cmd_block_join(cli, arg_a, arg_b);
            if (block_cut->parsed()) return cmd_block_cutthrough(cli, arg_a);
            if (block_verify->parsed()) return cmd_block_verify(cli, arg_a);
        }
        if (chain->parsed()) {
            if (chain_validate->parsed()) return cmd_chain_validate(cli, arg_a);
            if (chain_append->parsed()) return cmd_chain_append(cli, arg_a, arg_b);
        }
        if (sim->parsed() && sim_run->parsed())
            return cmd_sim_run(cli, sim_config, sim_scenario, sim_report);
        if (game->parsed() && game_run->parsed())
            return cmd_game_run(cli, game_name, game_trials, game_adversary);
        if (node->parsed() && node_step->parsed())
            return cmd_node_step(cli, node_state, node_packet);
        if (acceptance->parsed()) return cmd_acceptance();
        throw UsageError("no subcommand");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    } catch (const mw::JsonError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    } catch (const mw::Json::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    }
}
