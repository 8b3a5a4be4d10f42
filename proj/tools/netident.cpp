// netident: identifiability of dynamical networks with partial excitation
// and measurement.
//
// Exit codes: 0 identifiable / success, 1 not identifiable (or check
// failed), 2 inconclusive, 3 usage or input error.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "netident/netident.hpp"

namespace {

using namespace netident;

constexpr int exit_ok = 0;
constexpr int exit_not_identifiable = 1;
constexpr int exit_inconclusive = 2;
constexpr int exit_input_error = 3;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("NETIDENT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError(std::string("NETIDENT_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

struct Common {
    std::string path;
    bool json = false;
    bool timing = false;
    std::uint64_t seed = 0;
    int trials = default_trials;
    std::optional<std::size_t> max_degree;
    bool decouple_first = false;
    std::string out;
};

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string edge_text(const NetworkModel& net, std::size_t id) {
    const Edge& e = net.edges[id];
    return std::to_string(e.from + 1) + "->" + std::to_string(e.to + 1);
}

std::string summary_text(const NetworkModel& net) {
    std::ostringstream os;
    os << "network: " << net.n << " nodes, " << net.edges.size() << " edges, " << net.n_excited() << " excited, "
       << net.n_measured() << " measured, " << net.n_unknown() << " unknown";
    return os.str();
}

std::string signed_text(std::int64_t v) { return v > 0 ? "+" + std::to_string(v) : std::to_string(v); }

void print_verdict(std::ostream& os, const NetworkModel& net, const Verdict& v) {
    const Evidence& ev = v.evidence;
    os << to_string(v.notion) << ": " << to_string(v.decision);
    if (ev.rank) os << " (rank " << *ev.rank << "/" << ev.unknowns << ", trials " << ev.trials << ", seed " << ev.seed << ")";
    if (ev.max_degree)
        os << " (max degree " << *ev.max_degree << ", " << (ev.exhaustive.value_or(false) ? "exhaustive" : "truncated")
           << ")";
    os << "\n";
    if (ev.zero_column)
        os << "  zero column: unknown edge " << edge_text(net, *ev.zero_column)
           << " lies on no excitation-to-measurement path\n";
    if (ev.collection) {
        os << "  witness monomial " << ev.collection->monomial.to_string(net) << " with r = "
           << signed_text(ev.collection->repetition) << ", collection sign " << signed_text(ev.collection->sign)
           << ":\n";
        for (const Walk& w : ev.collection->walks) os << "    " << w.to_string(net) << "\n";
    }
}

Json command_echo(const std::string& name, const Common& c, bool with_trials, bool with_degree) {
    Json j{{"name", name}, {"file", c.path}};
    if (with_trials) {
        j["trials"] = c.trials;
        j["seed"] = c.seed;
    }
    if (with_degree) {
        if (c.max_degree) j["max_degree"] = *c.max_degree;
        j["decouple_first"] = c.decouple_first;
    }
    return j;
}

void emit_json(Json report, const Common& c, const Stopwatch& sw) {
    if (c.timing) report["timing_ms"] = sw.ms();
    std::cout << report.dump(2) << "\n";
}

int cmd_check(const Common& c) {
    Stopwatch sw;
    const NetworkModel net = load_network(c.path);
    const Verdict local = local_identifiability(net, c.trials, c.seed);
    const Verdict dec = decoupled_identifiability(net, c.trials, c.seed);
    if (c.json) {
        emit_json(Json{{"command", command_echo("check", c, true, false)},
                       {"network", network_summary(net)},
                       {"verdicts", Json::array({verdict_to_json(net, local), verdict_to_json(net, dec)})}},
                  c, sw);
    } else {
        std::cout << summary_text(net) << "\n";
        print_verdict(std::cout, net, local);
        print_verdict(std::cout, net, dec);
        if (c.timing) std::cout << "time: " << std::fixed << std::setprecision(1) << sw.ms() << " ms\n";
    }
    return local.identifiable() ? exit_ok : exit_not_identifiable;
}

int cmd_separable(const Common& c) {
    Stopwatch sw;
    const NetworkModel net = load_network(c.path);
    const SeparabilityResult res = is_separable(net);
    auto nodes_json = [](const std::vector<NodeId>& v) {
        Json a = Json::array();
        for (NodeId x : v) a.push_back(x + 1);
        return a;
    };
    const SeparableBlocks* blocks = as_blocks(res);
    if (c.json) {
        Json r{{"command", command_echo("separable", c, false, false)}, {"network", network_summary(net)}};
        if (blocks) {
            Json cross = Json::array();
            for (std::size_t id : blocks->cross_edges) cross.push_back(edge_ref_to_json(net, id));
            r["separable"] = true;
            r["excited_part"] = nodes_json(blocks->b_part);
            r["measured_part"] = nodes_json(blocks->c_part);
            r["cross_edges"] = cross;
        } else {
            const auto& ns = std::get<NotSeparable>(res);
            r["separable"] = false;
            Json w{{"reason", ns.reason}};
            if (ns.witness == NotSeparable::Witness::NodeConflict)
                w["node"] = ns.node + 1;
            else
                w["edge"] = edge_ref_to_json(net, ns.edge);
            r["witness"] = w;
        }
        emit_json(std::move(r), c, sw);
    } else {
        std::cout << summary_text(net) << "\n";
        if (blocks) {
            auto list = [](const std::vector<NodeId>& v) {
                std::string s;
                for (NodeId x : v) s += " " + std::to_string(x + 1);
                return s;
            };
            std::cout << "separable: yes\n";
            std::cout << "excited part:" << list(blocks->b_part) << "\n";
            std::cout << "measured part:" << list(blocks->c_part) << "\n";
            std::cout << "cross edges:";
            for (std::size_t id : blocks->cross_edges) std::cout << " " << edge_text(net, id);
            std::cout << "\n";
        } else {
            std::cout << "separable: no\nwitness: " << std::get<NotSeparable>(res).reason << "\n";
        }
    }
    return blocks ? exit_ok : exit_not_identifiable;
}

int cmd_decouple(const Common& c) {
    const NetworkModel net = load_network(c.path);
    const NetworkModel out = decouple(net, c.seed);
    if (c.out.empty()) {
        std::cout << serialize_network(out);
    } else {
        save_network(out, c.out);
        std::cout << "wrote decoupled network (" << out.n << " nodes, " << out.edges.size() << " edges) to " << c.out
                  << "\n";
    }
    return exit_ok;
}

int cmd_combinatorial(const Common& c) {
    Stopwatch sw;
    const NetworkModel net = load_network(c.path);
    const NetworkModel target = c.decouple_first ? decouple(net, c.seed) : net;
    const std::size_t bound = c.max_degree.value_or(2 * target.n);
    const RepetitionTable table = repetition_table(target, bound);
    Verdict v = verdict_from_table(target, table);
    if (c.decouple_first) {
        v.notion = Notion::DecoupledGeneric;
        v.evidence.seed = c.seed;
    }

    if (c.json) {
        Json r{{"command", command_echo("combinatorial", c, false, true)},
               {"network", network_summary(net)},
               {"target", network_summary(target)},
               {"table", table_to_json(target, table)},
               {"verdicts", Json::array({verdict_to_json(target, v)})}};
        if (c.decouple_first) r["target_network"] = network_to_json(target);
        emit_json(std::move(r), c, sw);
    } else {
        std::cout << summary_text(net) << "\n";
        if (c.decouple_first) std::cout << "target: decoupled network, " << summary_text(target).substr(9) << "\n";
        std::cout << "repetition table: " << table.repetition.size() << " monomials from " << table.collections
                  << " bijective collections, max degree " << bound << ", "
                  << (table.exhaustive ? "exhaustive" : "truncated") << "\n";
        for (const auto& [mu, r] : table.repetition)
            std::cout << "  " << std::setw(5) << signed_text(r) << "  " << mu.to_string(target) << "\n";
        print_verdict(std::cout, target, v);
        if (c.timing) std::cout << "time: " << std::fixed << std::setprecision(1) << sw.ms() << " ms\n";
    }
    switch (v.decision) {
    case Decision::Identifiable: return exit_ok;
    case Decision::NotIdentifiable: return exit_not_identifiable;
    case Decision::Inconclusive: return exit_inconclusive;
    }
    return exit_input_error;
}

int cmd_oracle(const Common& c) {
    Stopwatch sw;
    const NetworkModel net = load_network(c.path);
    const std::size_t bound = c.max_degree.value_or(2 * net.n);
    const Poly det = symbolic_detK_truncated(net, bound);
    const RepetitionTable table = repetition_table(net, bound);

    std::set<Monomial> all;
    for (const auto& [mu, r] : table.repetition) all.insert(mu);
    for (const auto& [mu, coef] : det.terms()) all.insert(mu);
    bool agree = true;
    Json rows = Json::array();
    std::ostringstream text;
    for (const Monomial& mu : all) {
        const std::int64_t r = table.r(mu), coef = det.coefficient(mu);
        agree = agree && r == coef;
        Json m = monomial_to_json(net, mu);
        m["repetition"] = r;
        m["oracle"] = coef;
        m["agree"] = r == coef;
        rows.push_back(m);
        text << "  " << std::setw(5) << signed_text(r) << "  " << std::setw(6) << signed_text(coef) << "  "
             << (r == coef ? "ok  " : "DIFF") << "  " << mu.to_string(net) << "\n";
    }
    if (c.json) {
        emit_json(Json{{"command", command_echo("oracle", c, false, true)},
                       {"network", network_summary(net)},
                       {"max_degree", bound},
                       {"agree", agree},
                       {"monomials", rows}},
                  c, sw);
    } else {
        std::cout << summary_text(net) << "\n";
        std::cout << "max degree " << bound << ": repetition r(mu) vs oracle coefficient of det K\n";
        std::cout << "      r  oracle        monomial\n" << text.str();
        std::cout << (agree ? "all coefficients agree\n" : "coefficients DISAGREE\n");
        if (c.timing) std::cout << "time: " << std::fixed << std::setprecision(1) << sw.ms() << " ms\n";
    }
    return agree ? exit_ok : exit_not_identifiable;
}

int cmd_gen(const GenOptions& opt, const std::string& out) {
    const NetworkModel net = generate_network(opt);
    validate(net);
    if (out.empty())
        std::cout << serialize_network(net);
    else
        save_network(net, out);
    return exit_ok;
}

int run(int argc, char** argv) {
    CLI::App app{"Generic identifiability of dynamical networks with partial excitation and measurement.\n"
                 "Node numbers in files and reports are 1-based."};
    app.require_subcommand(1);
    Common c;
    GenOptions gen;

    auto add_file = [&](CLI::App* sub) { sub->add_option("file", c.path, "network JSON file")->required(); };
    auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", c.json, "print the JSON report");
        sub->add_flag("--timing", c.timing, "include wall-clock time (breaks byte-identical output)");
    };
    auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", c.seed, "random seed (default: $NETIDENT_SEED or 0)"); };

    auto* check = app.add_subcommand("check", "local and decoupled identifiability by randomized exact rank of K");
    add_file(check);
    add_json(check);
    add_seed(check);
    check->add_option("--trials", c.trials, "random evaluations")->check(CLI::PositiveNumber);

    auto* sep = app.add_subcommand("separable", "find the excited/measured bipartition, if any");
    add_file(sep);
    add_json(sep);

    auto* dec = app.add_subcommand("decouple", "write the 2n-node decoupled network");
    add_file(dec);
    add_seed(dec);
    dec->add_option("-o,--out", c.out, "output file (default: stdout)");

    auto* comb = app.add_subcommand("combinatorial", "signed path-collection characterization with repetition table");
    add_file(comb);
    add_json(comb);
    add_seed(comb);
    comb->add_option("--max-degree", c.max_degree, "monomial degree bound (default: 2n of the target)");
    comb->add_flag("--decouple-first", c.decouple_first, "analyze the decoupled network (any topology)");

    auto* orc = app.add_subcommand("oracle", "compare repetitions with the symbolic det K expansion");
    add_file(orc);
    add_json(orc);
    orc->add_option("--max-degree", c.max_degree, "degree bound (default: 2n)");

    auto* g = app.add_subcommand("gen", "generate a random network");
    g->add_option("--nodes", gen.nodes, "node count")->check(CLI::PositiveNumber);
    g->add_option("--known-density", gen.known_density, "probability of each admissible known edge");
    g->add_option("--unknowns", gen.unknowns, "number of unknown edges");
    g->add_option("--excited", gen.excited, "number of excited nodes");
    g->add_option("--measured", gen.measured, "number of measured nodes");
    g->add_flag("--separable", gen.separable, "build a separable network");
    g->add_flag("--acyclic", gen.acyclic, "known edges form a DAG");
    g->add_option("--seed", gen.seed, "random seed (default: $NETIDENT_SEED or 0)");
    g->add_option("-o,--out", c.out, "output file (default: stdout)");

    c.seed = default_seed();
    gen.seed = c.seed;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input_error;
    }

    if (check->parsed()) return cmd_check(c);
    if (sep->parsed()) return cmd_separable(c);
    if (dec->parsed()) return cmd_decouple(c);
    if (comb->parsed()) return cmd_combinatorial(c);
    if (orc->parsed()) return cmd_oracle(c);
    if (g->parsed()) return cmd_gen(gen, c.out);
    return exit_input_error;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "netident: error: " << e.what() << "\n";
        return exit_input_error;
    }
}
