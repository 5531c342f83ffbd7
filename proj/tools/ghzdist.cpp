// command line front end: code inspection, logical Pauli printing, diagonal
// Clifford solving, distillation sweeps, the memory-channel baseline, the two
// worked replay transcripts, and the dense identity suite.
//
// exit codes: 0 success, 1 runtime failure or failed verification, 2 usage or
// parse errors.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ghzdist/channel.hpp"
#include "ghzdist/decoder.hpp"
#include "ghzdist/denseoracle.hpp"
#include "ghzdist/diagclifford.hpp"
#include "ghzdist/logicals.hpp"
#include "ghzdist/pauli.hpp"
#include "ghzdist/protocol.hpp"
#include "ghzdist/replay.hpp"
#include "ghzdist/stabcode.hpp"

namespace {

using namespace ghzdist;

// a usage-class problem discovered after flag parsing (bad sweep syntax,
// unreadable code file); reported like a parse error, exit 2
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

stab_code load_code(const std::string& name) {
    if (name == "five_qubit") return five_qubit();
    if (name == "bitflip3") return bitflip3();
    if (name == "yy3") return yy3();
    if (name == "steane") return steane();
    try {
        return from_file(name);
    } catch (const std::exception& e) {
        throw usage_error("cannot load code '" + name + "': " + e.what());
    }
}

// --p accepts a comma list ("0.01,0.02") or start:stop:count, log spaced
std::vector<double> parse_sweep(const std::string& s) {
    auto one = [](const std::string& tok) {
        try {
            std::size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw usage_error("bad probability value '" + tok + "'");
        }
    };
    std::vector<double> out;
    if (s.find(':') != std::string::npos) {
        std::istringstream in(s);
        std::string a, b, c;
        if (!std::getline(in, a, ':') || !std::getline(in, b, ':') ||
            !std::getline(in, c) || c.find(':') != std::string::npos)
            throw usage_error("log sweep must be start:stop:count");
        double lo = one(a), hi = one(b);
        long count = 0;
        try {
            count = std::stol(c);
        } catch (const std::exception&) {
            throw usage_error("bad sweep count '" + c + "'");
        }
        if (count < 1) throw usage_error("sweep count must be at least 1");
        if (lo <= 0 || hi <= 0) throw usage_error("log sweep endpoints must be positive");
        if (count == 1) {
            out.push_back(lo);
        } else {
            double step = (std::log(hi) - std::log(lo)) / double(count - 1);
            out.push_back(lo);
            for (long i = 1; i + 1 < count; ++i)
                out.push_back(std::exp(std::log(lo) + step * double(i)));
            out.push_back(hi);
        }
        return out;
    }
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(one(tok));
    if (out.empty()) throw usage_error("empty probability list");
    return out;
}

// shortest round trip decimal, locale independent
std::string fmt(double v) {
    char buf[40];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

void write_out(const std::string& dest, const std::string& content) {
    if (dest.empty() || dest == "-" || dest == "stdout") {
        std::cout << content;
        return;
    }
    std::ofstream f(dest, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + dest + "'");
    f << content;
    if (!f) throw std::runtime_error("write to '" + dest + "' failed");
}

struct sweep_flags {
    std::string code = "five_qubit";
    std::string p_spec;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    std::string out;
};

void add_sweep_flags(CLI::App* cmd, sweep_flags& f) {
    cmd->add_option("--code", f.code, "built-in name or code file path")
        ->capture_default_str();
    cmd->add_option("--p", f.p_spec,
                    "error rates: comma list or start:stop:count (log spaced)")
        ->required();
    cmd->add_option("--trials", f.trials, "Monte Carlo trials per rate")
        ->capture_default_str();
    cmd->add_option("--seed", f.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--out", f.out, "output path, or stdout");
}

const char* csv_header = "protocol,code,placement,topology,p,trials,failures,p_f,stderr,fidelity,seed\n";

std::string csv_row(const std::string& protocol, const std::string& code,
                    const std::string& placement, const std::string& topology, double p,
                    const distillation_report& rep, std::uint64_t seed) {
    std::string row = protocol + "," + code + "," + placement + "," + topology + ",";
    row += fmt(p) + "," + std::to_string(rep.trials) + "," + std::to_string(rep.failures);
    row += "," + fmt(rep.p_f()) + "," + fmt(rep.standard_error()) + "," + fmt(rep.fidelity());
    row += "," + std::to_string(seed) + "\n";
    return row;
}

int cmd_logical_paulis(const std::string& code_name) {
    stab_code c = load_code(code_name);
    attach_logicals(c);
    for (const auto& z : c.logicals->zbar) std::cout << "zbar " << format_pauli(z) << "\n";
    for (const auto& x : c.logicals->xbar) std::cout << "xbar " << format_pauli(x) << "\n";
    return 0;
}

int cmd_code_info(const std::string& code_name, bool json) {
    stab_code c = load_code(code_name);
    attach_logicals(c);
    if (json) {
        std::cout << to_json(c) << "\n";
        return 0;
    }
    std::cout << "n " << c.n << "\nk " << c.k << "\ncss " << (is_css(c) ? "yes" : "no")
              << "\n";
    for (const auto& g : c.gens) std::cout << "generator " << format_pauli(g) << "\n";
    for (const auto& z : c.logicals->zbar) std::cout << "zbar " << format_pauli(z) << "\n";
    for (const auto& x : c.logicals->xbar) std::cout << "xbar " << format_pauli(x) << "\n";
    if (c.k >= 1) {
        try {
            std::cout << "distance " << min_distance(c) << "\n";
        } catch (const std::exception&) {
            std::cout << "distance unknown (enumeration budget exceeded)\n";
        }
    }
    return 0;
}

int cmd_solve_clifford(const std::string& code_name) {
    stab_code c = load_code(code_name);
    attach_logicals(c);
    auto targets = required_targets(c);
    auto r = solve_clifford(targets);
    if (!r) {
        std::cerr << "no symmetric solution for this code's conjugation targets\n";
        return 1;
    }
    for (int i = 0; i < r->rows; ++i) std::cout << "R " << r->row(i).str() << "\n";
    std::cout << gate_reading(*r);
    auto signs = sign_fixups(targets, *r);
    for (std::size_t i = 0; i < signs.size(); ++i)
        std::cout << "sign " << targets.a.row(int(i)).str() << " -> "
                  << (signs[i] > 0 ? "+1" : "-1") << "\n";
    return 0;
}

int cmd_distill(const sweep_flags& f, const std::string& protocol,
                const std::string& placement, const std::string& topology) {
    protocol_config cfg;
    cfg.code = load_code(f.code);
    cfg.protocol = protocol == "bell" ? protocol_kind::bell : protocol_kind::ghz;
    if (placement == "none")
        cfg.placement = clifford_placement::none;
    else if (placement == "alice")
        cfg.placement = clifford_placement::alice;
    else
        cfg.placement = clifford_placement::bob;
    cfg.topology = topology == "split" ? topology_kind::split : topology_kind::chain;
    if (cfg.protocol == protocol_kind::bell && cfg.topology == topology_kind::split)
        throw usage_error("the split topology only applies to GHZ runs");
    cfg.trials = f.trials;
    cfg.seed = f.seed;

    // the Bell branch has no Clifford stage, so the column is pinned to none
    std::string placement_col = cfg.protocol == protocol_kind::bell ? "none" : placement;

    std::string csv = csv_header;
    for (double p : parse_sweep(f.p_spec)) {
        cfg.channel = channel_model::depolarizing(p);
        distill_engine engine(cfg);
        auto rep = engine.estimate();
        csv += csv_row(protocol, f.code, placement_col, topology, p, rep, f.seed);
    }
    write_out(f.out, csv);
    return 0;
}

int cmd_baseline(const sweep_flags& f) {
    stab_code c = load_code(f.code);
    std::string csv = csv_header;
    for (double p : parse_sweep(f.p_spec)) {
        auto rep = qec_baseline(c, channel_model::depolarizing(p), f.trials, f.seed);
        csv += csv_row("baseline", f.code, "none", "chain", p, rep, f.seed);
    }
    write_out(f.out, csv);
    return 0;
}

int cmd_replay(const std::string& which) {
    auto r = which == "table1" ? replay_table1() : replay_table2();
    std::cout << r.transcript;
    return 0;
}

int cmd_verify() {
    auto results = oracle::run_verify_suite();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (deviation "
                  << fmt(r.deviation) << ", tolerance " << fmt(r.tolerance) << ")\n";
    }
    std::cout << (all ? "all checks passed\n" : "some checks FAILED\n");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stabilizer-code entanglement distillation toolkit"};
    app.require_subcommand(1);

    std::string lp_code = "five_qubit";
    auto* lp = app.add_subcommand("logical-paulis", "print a code's logical Pauli pairs");
    lp->add_option("--code", lp_code, "built-in name or code file path")
        ->capture_default_str();

    std::string info_code = "five_qubit";
    bool info_json = false;
    auto* info = app.add_subcommand("code-info", "print a code's parameters and generators");
    info->add_option("--code", info_code, "built-in name or code file path")
        ->capture_default_str();
    info->add_flag("--json", info_json, "emit the code as JSON");

    std::string solve_code = "five_qubit";
    auto* solve = app.add_subcommand("solve-clifford",
                                     "solve the diagonal Clifford for a code");
    solve->add_option("--code", solve_code, "built-in name or code file path")
        ->capture_default_str();

    sweep_flags distill_f;
    std::string protocol = "ghz", placement = "none", topology = "chain";
    auto* distill = app.add_subcommand("distill", "Monte Carlo distillation failure sweep");
    add_sweep_flags(distill, distill_f);
    distill->add_option("--protocol", protocol, "ghz or bell")
        ->check(CLI::IsMember({"ghz", "bell"}))
        ->capture_default_str();
    distill->add_option("--placement", placement, "diagonal Clifford placement")
        ->check(CLI::IsMember({"none", "alice", "bob"}))
        ->capture_default_str();
    distill->add_option("--topology", topology, "chain or split source")
        ->check(CLI::IsMember({"chain", "split"}))
        ->capture_default_str();

    sweep_flags baseline_f;
    auto* baseline = app.add_subcommand("baseline",
                                        "memory-channel error correction comparison sweep");
    add_sweep_flags(baseline, baseline_f);

    std::string which_table;
    auto* replay = app.add_subcommand("replay", "print a worked walkthrough transcript");
    replay->add_option("table", which_table, "table1 or table2")
        ->required()
        ->check(CLI::IsMember({"table1", "table2"}));

    auto* verify = app.add_subcommand("verify", "run the dense identity suite");

    try {
        app.parse(argc, argv);
        if (lp->parsed()) return cmd_logical_paulis(lp_code);
        if (info->parsed()) return cmd_code_info(info_code, info_json);
        if (solve->parsed()) return cmd_solve_clifford(solve_code);
        if (distill->parsed()) return cmd_distill(distill_f, protocol, placement, topology);
        if (baseline->parsed()) return cmd_baseline(baseline_f);
        if (replay->parsed()) return cmd_replay(which_table);
        if (verify->parsed()) return cmd_verify();
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
