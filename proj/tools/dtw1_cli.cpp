// dtw1: command-line front end for the directed treewidth one toolkit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dtw1/decomposition.hpp"
#include "dtw1/dtw1.hpp"
#include "dtw1/games.hpp"
#include "dtw1/hypergraph.hpp"
#include "dtw1/hypertree_width.hpp"
#include "dtw1/io.hpp"
#include "dtw1/suite.hpp"

using namespace dtw1;

namespace {

constexpr int kInputError = 2;

struct RunConfig {
    std::string input;
    std::string second;
    std::size_t cycle_cap = kDefaultCycleCap;
    long long game_cap = kDefaultGamePositionCap;
    std::uint64_t seed = SuiteConfig{}.seed;
    std::string format = "text";
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return in;
}

Digraph read_digraph(const std::string& path) {
    auto in = open(path);
    try {
        return parse_edge_list(in);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

template <class F>
auto read_with(const std::string& path, F&& f) {
    auto in = open(path);
    try {
        return f(in);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void header(const RunConfig& cfg) { std::cout << "# dtw1 seed=" << cfg.seed << "\n"; }

/// Key/value report; `structured` wraps it in a versioned block.
class Report {
public:
    explicit Report(const RunConfig& cfg, std::string kind) : cfg_(cfg), kind_(std::move(kind)) {}
    Report& add(const std::string& key, const std::string& value) {
        rows_.emplace_back(key, value);
        return *this;
    }
    Report& add(const std::string& key, long long value) { return add(key, std::to_string(value)); }
    Report& flag(const std::string& key, bool value) { return add(key, value ? "yes" : "no"); }
    void print() const {
        if (cfg_.format == "structured") {
            std::cout << "dtw1-report v1 " << kind_ << "\n";
            for (const auto& [k, v] : rows_) std::cout << k << " " << v << "\n";
            std::cout << "end\n";
        } else {
            for (const auto& [k, v] : rows_) std::cout << k << ": " << v << "\n";
        }
    }

private:
    const RunConfig& cfg_;
    std::string kind_;
    std::vector<std::pair<std::string, std::string>> rows_;
};

int cmd_recognize(const RunConfig& cfg) {
    Digraph d = read_digraph(cfg.input);
    if (d.order() < 2 || !is_strongly_connected(d)) throw InputError("digraph must be strongly connected with at least two vertices");
    auto cert = recognize_dtw1(d, cfg.cycle_cap);
    header(cfg);
    write_certificate(std::cout, d, cert);
    return cert.verdict == Verdict::Yes ? 0 : 1;
}

int cmd_verify_cert(const RunConfig& cfg) {
    Digraph d = read_digraph(cfg.input);
    auto peek = open(cfg.second);
    auto hash = certificate_hash(peek);
    if (hash && *hash != hash_text(canonical_hash(d))) {
        std::cerr << "error: certificate belongs to a different digraph (hash " << *hash << ")\n";
        return kInputError;
    }
    auto in = open(cfg.second);
    ParsedCertificate pc;
    try {
        pc = parse_certificate(in, d);
    } catch (const ParseError& e) {
        std::cout << "unsound: " << cfg.second << ": " << e.what() << "\n";
        return 1;
    }
    if (pc.hash != hash_text(canonical_hash(d))) {
        std::cerr << "error: certificate belongs to a different digraph (hash " << pc.hash << ")\n";
        return kInputError;
    }
    auto check = verify_certificate(d, pc.cert);
    if (check.ok && pc.cert.witness && !pc.branch_sets.empty()) {
        auto replay = verify_minor_witness(d, *pc.cert.witness);
        if (replay.branch_sets != pc.branch_sets) check = {false, "branch sets do not match the replayed script"};
    }
    if (!check.ok) {
        std::cout << "unsound: " << check.error << "\n";
        return 1;
    }
    std::cout << "sound: " << (pc.cert.verdict == Verdict::Yes ? "YES" : "NO") << "\n";
    return 0;
}

int cmd_cycles(const RunConfig& cfg) {
    Digraph d = read_digraph(cfg.input);
    auto cycles = enumerate_cycles(d, cfg.cycle_cap);
    header(cfg);
    write_cycles(std::cout, d, cycles);
    return 0;
}

int cmd_hypergraph(const RunConfig& cfg, bool from_digraph, bool take_dual) {
    Hypergraph h = from_digraph ? cycle_hypergraph(read_digraph(cfg.input), cfg.cycle_cap).hypergraph
                                : read_with(cfg.input, [](std::istream& in) { return parse_hypergraph(in); });
    if (take_dual) h = dual(h);
    Hypergraph hd = dual(h);
    auto hw = exact_hw(h, 3);
    header(cfg);
    Report r(cfg, "hypergraph");
    r.add("vertices", h.num_vertices()).add("edges", h.num_edges());
    r.flag("hypertree", hypertree_witness(h).has_value());
    r.flag("helly", has_helly(h));
    r.flag("line-graph-chordal", is_chordal(line_graph(h)));
    r.flag("two-section-chordal", is_chordal(two_section(h)));
    r.flag("conformal", is_conformal(h));
    r.flag("alpha-acyclic", is_alpha_acyclic(h));
    r.flag("dual-alpha-acyclic", is_alpha_acyclic(hd));
    r.add("hw", hw ? std::to_string(hw->first) : std::string(">3"));
    r.print();
    if (cfg.format == "structured") write_hypergraph(std::cout, h);
    return 0;
}

int cmd_validate_dtd(const RunConfig& cfg) {
    Digraph d = read_digraph(cfg.input);
    auto dec = read_with(cfg.second, [&](std::istream& in) { return parse_dtd(in, d); });
    auto rep = validate_dtd(d, dec);
    header(cfg);
    Report r(cfg, "validate-dtd");
    r.flag("valid", rep.valid);
    if (rep.valid) r.add("width", rep.width);
    for (const auto& v : rep.violations) r.add("violation", v);
    r.print();
    return rep.valid ? 0 : 1;
}

int cmd_validate_dbd(const RunConfig& cfg, int bound) {
    Digraph d = read_digraph(cfg.input);
    auto dec = read_with(cfg.second, [&](std::istream& in) { return parse_dbd(in, d); });
    auto rep = validate_dbd(d, dec, bound, cfg.cycle_cap);
    header(cfg);
    Report r(cfg, "validate-dbd");
    r.flag("valid", rep.valid);
    if (rep.valid) r.add("width", rep.width);
    for (const auto& v : rep.violations) r.add("violation", v);
    r.print();
    return rep.valid ? 0 : 1;
}

int cmd_convert(const RunConfig& cfg, const std::string& to) {
    Digraph d = read_digraph(cfg.input);
    header(cfg);
    if (to == "dbd") {
        auto dec = read_with(cfg.second, [&](std::istream& in) { return parse_dtd(in, d); });
        if (!validate_dtd(d, dec).valid) throw InputError("input dtd does not validate");
        write_dbd(std::cout, d, dtd_to_dbd(d, dec, cfg.cycle_cap));
    } else if (to == "ghd") {
        auto dec = read_with(cfg.second, [&](std::istream& in) { return parse_dtd(in, d); });
        if (!validate_dtd(d, dec).valid) throw InputError("input dtd does not validate");
        auto ch = cycle_hypergraph(d, cfg.cycle_cap);
        write_hypergraph(std::cout, dual_cycle_hypergraph(ch));
        write_ghd(std::cout, dual_cycle_hypergraph(ch), dtd_to_ghd(d, dec, cfg.cycle_cap));
    } else {
        auto dec = read_with(cfg.second, [&](std::istream& in) { return parse_dbd(in, d); });
        if (!dec.tree.problems(d.vertices()).empty()) throw InputError("input dbd is not a branch decomposition of the digraph");
        auto ch = cycle_hypergraph(d, cfg.cycle_cap);
        write_hypergraph(std::cout, dual_cycle_hypergraph(ch));
        write_hbd(std::cout, dbd_to_hbd(d, dec, cfg.cycle_cap));
    }
    return 0;
}

/// Plays the cops' strategy against the robber that always takes the
/// lexicographically smallest escape and prints the moves.
void transcript(const Digraph& d, const CopStrategy& s) {
    auto robbers = strong_components_within(d, d.vertices() - s.opening);
    if (robbers.empty()) return;
    GamePosition p{s.opening, robbers.front()};
    for (int i = 0;; ++i) {
        std::cout << "move " << i << " cops=" << set_text(d, p.cops) << " robber=" << set_text(d, p.robber) << "\n";
        auto it = s.reply.find(p);
        if (it == s.reply.end()) break;
        auto replies = robber_replies(d, p.cops, p.robber, it->second);
        if (replies.empty()) {
            std::cout << "move " << i + 1 << " cops=" << set_text(d, it->second) << " robber={}\n";
            break;
        }
        std::sort(replies.begin(), replies.end(), [](VertexSet a, VertexSet b) { return lex_less(a, b); });
        p = {it->second, replies.front()};
    }
}

int cmd_game(const RunConfig& cfg, int cops) {
    Digraph d = read_digraph(cfg.input);
    header(cfg);
    Report r(cfg, "game");
    if (cops <= 0) {
        r.add("dcn", dcn_exact(d, d.order(), cfg.game_cap));
        r.print();
        return 0;
    }
    auto res = solve_game(d, cops, cfg.game_cap);
    r.add("cops", cops).add("winner", res.cops_win ? "cops" : "robber");
    r.print();
    if (res.cops_win) transcript(d, *res.strategy);
    return 0;
}

int cmd_suite(const RunConfig& cfg, int only, bool no_times) {
    SuiteConfig sc{cfg.seed, cfg.cycle_cap, cfg.game_cap};
    Suite suite(sc);
    print_suite_header(std::cout, sc);
    bool ok = true;
    for (int id = 1; id <= Suite::kCriteria; ++id) {
        if (only > 0 && id != only) continue;
        auto res = suite.run(id);
        print_criterion(std::cout, res, !no_times);
        std::cout.flush();
        ok = ok && res.pass();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Directed treewidth one: recognition, certificates and decomposition tools"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--cap", cfg.cycle_cap, "cycle enumeration cap")->check(CLI::PositiveNumber);
    app.add_option("--game-cap", cfg.game_cap, "game position cap")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for randomized suites");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "structured"}));

    auto* recognize = app.add_subcommand("recognize", "decide dtw = 1 and print a certificate");
    recognize->add_option("digraph", cfg.input)->required();

    auto* verify = app.add_subcommand("verify-cert", "check a certificate against its digraph");
    verify->add_option("digraph", cfg.input)->required();
    verify->add_option("certificate", cfg.second)->required();

    auto* cycles = app.add_subcommand("cycles", "list all directed cycles");
    cycles->add_option("digraph", cfg.input)->required();

    bool from_digraph = false, take_dual = false;
    auto* hyper = app.add_subcommand("hypergraph", "acyclicity properties of a hypergraph");
    hyper->add_option("input", cfg.input)->required();
    hyper->add_flag("--cycles", from_digraph, "input is a digraph; analyse its cycle hypergraph");
    hyper->add_flag("--dual", take_dual, "analyse the dual");

    auto* vdtd = app.add_subcommand("validate-dtd", "validate a directed tree decomposition");
    vdtd->add_option("digraph", cfg.input)->required();
    vdtd->add_option("decomposition", cfg.second)->required();

    int bound = kMaxVertices;
    auto* vdbd = app.add_subcommand("validate-dbd", "validate a directed branch decomposition");
    vdbd->add_option("digraph", cfg.input)->required();
    vdbd->add_option("decomposition", cfg.second)->required();
    vdbd->add_option("--bound", bound, "width bound");

    std::string to;
    auto* convert = app.add_subcommand("convert", "dtd to dbd or ghd, dbd to hbd");
    convert->add_option("digraph", cfg.input)->required();
    convert->add_option("decomposition", cfg.second)->required();
    convert->add_option("--to", to)->required()->check(CLI::IsMember({"dbd", "hbd", "ghd"}));

    int cops = 0;
    auto* game = app.add_subcommand("game", "solve the cops and robber game");
    game->add_option("digraph", cfg.input)->required();
    game->add_option("--cops", cops, "number of cops (default: compute the cop number)");

    int only = 0;
    bool no_times = false;
    auto* suite = app.add_subcommand("suite", "run the acceptance suite");
    suite->add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, Suite::kCriteria));
    suite->add_flag("--no-times", no_times, "omit timings (byte-identical reruns)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kInputError;
    }

    try {
        if (*recognize) return cmd_recognize(cfg);
        if (*verify) return cmd_verify_cert(cfg);
        if (*cycles) return cmd_cycles(cfg);
        if (*hyper) return cmd_hypergraph(cfg, from_digraph, take_dual);
        if (*vdtd) return cmd_validate_dtd(cfg);
        if (*vdbd) return cmd_validate_dbd(cfg, bound);
        if (*convert) return cmd_convert(cfg, to);
        if (*game) return cmd_game(cfg, cops);
        if (*suite) return cmd_suite(cfg, only, no_times);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InstanceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return 0;
}
