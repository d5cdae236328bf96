#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliquebound.hpp"

namespace cliquebound::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kWorkersEnv = "CLIQUEBOUND_WORKERS";

struct RunConfig {
    std::string command;
    std::optional<int> n;
    std::optional<int> r;
    std::optional<int> t;
    std::optional<std::int64_t> m;
    std::optional<int> min_degree;
    int cluster = 0;
    std::string input;        // empty: standard input
    std::string output;       // empty: standard output
    std::string witness_out;  // optional graph6 file of witnesses
    int workers = 1;
    bool pretty = false;
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = {
        "count",          "clusters",     "fold",          "reduce",
        "verify-gls",     "verify-total", "verify-lex-mu", "verify-star-matching",
        "verify-dichotomy", "verify-avgwt", "verify-finite-calc", "verify-pipeline",
        "enumerate"};
    return names;
}

inline std::string describe(const std::string& command) {
    static const std::map<std::string, std::string> text = {
        {"count", "clique counts, triple census and mu of each graph6 input line"},
        {"clusters", "clusters of each input graph with their predicates (--r)"},
        {"fold", "fold one cluster and print the certificate (--r, --cluster)"},
        {"reduce", "fold until no foldable cluster remains, then peel K_{r+1} (--r)"},
        {"verify-gls", "max kappa_t over Delta <= r graphs vs aK_{r+1} u K_b (--n, --r, --t)"},
        {"verify-total", "max total clique count and its maximizers (--n, --r)"},
        {"verify-lex-mu", "max mu at every edge count equals the lex graph's (--n)"},
        {"verify-star-matching", "max mu with min degree 1 equals C(2m-n+1,2) (--n)"},
        {"verify-dichotomy", "every cluster is foldable or dischargeable (--n, --r)"},
        {"verify-avgwt", "weight-sum inequality sweep up to r (--r, default 12)"},
        {"verify-finite-calc", "finite calculation for 3 <= r <= 6 (--r)"},
        {"verify-pipeline", "reduce every Delta <= r graph and audit the result (--n, --r)"},
        {"enumerate", "graph6 lines, one per isomorphism class (--n, --r, --min-degree, --m)"}};
    auto it = text.find(command);
    return it == text.end() ? std::string() : it->second;
}

/// Worker count from the environment, falling back to available parallelism.
inline int workers_from_env() {
    if (const char* v = std::getenv(kWorkersEnv)) {
        try {
            int w = std::stoi(v);
            if (w >= 1) {
                return w;
            }
        } catch (const std::exception&) {
        }
    }
    return default_workers();
}

/// Either a runnable configuration or an exit status (help, usage error).
inline std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                                       std::ostream& err) {
    CLI::App app{"Clique-count extremal verification toolkit", "cliquebound"};
    app.require_subcommand(1, 1);
    RunConfig cfg;
    cfg.workers = workers_from_env();
    std::optional<int> workers_flag;

    for (const std::string& name : commands()) {
        CLI::App* sub = app.add_subcommand(name, describe(name));
        sub->add_option("--n", cfg.n, "vertex count")->check(CLI::NonNegativeNumber);
        sub->add_option("--r", cfg.r, "maximum degree bound")->check(CLI::NonNegativeNumber);
        sub->add_option("--t", cfg.t, "clique size")->check(CLI::PositiveNumber);
        sub->add_option("--m", cfg.m, "edge count")->check(CLI::NonNegativeNumber);
        sub->add_option("--min-degree", cfg.min_degree, "minimum degree (enumerate)")->check(CLI::NonNegativeNumber);
        sub->add_option("--cluster", cfg.cluster, "cluster index (fold)")->check(CLI::NonNegativeNumber);
        sub->add_option("--in", cfg.input, "graph6 input file (default: stdin)");
        sub->add_option("--out", cfg.output, "output file (default: stdout)");
        sub->add_option("--witness-out", cfg.witness_out, "write witness graphs as graph6");
        sub->add_option("--workers", workers_flag, "worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--pretty", cfg.pretty, "human-readable output");
        sub->callback([&cfg, name] { cfg.command = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }
    if (workers_flag) {
        cfg.workers = *workers_flag;
    }
    return cfg;
}

namespace detail {

inline int require(const std::optional<int>& v, const char* flag, const std::string& command) {
    if (!v) {
        throw InputError(command + " requires " + flag);
    }
    return *v;
}

inline std::vector<Graph> read_graphs(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        out.push_back(read_graph6(line));
    }
    return out;
}

inline std::string set_json_string(VertexSet s) { return cliquebound::detail::set_string(s); }

inline nlohmann::ordered_json count_json(const Graph& g, std::optional<int> t) {
    nlohmann::ordered_json j;
    j["graph6"] = write_graph6(g);
    j["n"] = g.order();
    j["edges"] = g.size();
    j["max_degree"] = g.max_degree();
    CliqueCountVector counts = clique_counts(g);
    if (t) {
        j["t"] = *t;
        j["kappa_t"] = counts.of_size(*t);
    }
    std::vector<std::uint64_t> by_size;
    for (int k = 1; k <= counts.clique_number(); ++k) {
        by_size.push_back(counts.of_size(k));
    }
    j["kappa_by_size"] = by_size;
    j["kappa"] = counts.total();
    TripleCensus c = triple_census(g);
    j["census"] = {{"triangles", c.triangles}, {"cherries", c.cherries}, {"one_edge", c.one_edge}, {"empty", c.empty}};
    j["mu"] = 2 * c.triangles + c.cherries;
    return j;
}

inline nlohmann::ordered_json cluster_json(const Cluster& c) {
    return {{"T", set_json_string(c.clique)},
            {"S", set_json_string(c.common)},
            {"t", c.t()},
            {"s", c.s()},
            {"e_R", c.r_edges()},
            {"mu_R", c.r_mu()},
            {"complete_component", c.is_complete_component()},
            {"foldable", is_foldable(c)},
            {"dischargeable", is_dischargeable(c)}};
}

inline nlohmann::ordered_json certificate_json(const FoldCertificate& f) {
    return {{"T", set_json_string(f.clique)},
            {"S", set_json_string(f.common)},
            {"t", f.t},
            {"s", f.s},
            {"e_R", f.r_edges},
            {"mu_R", f.r_mu},
            {"triangles_before", f.triangles_before},
            {"triangles_after", f.triangles_after},
            {"gain", f.gain()},
            {"guaranteed_gain", f.guaranteed_gain()},
            {"degree_ok", f.degree_ok},
            {"component_ok", f.component_ok},
            {"ok", f.ok()}};
}

inline void print_pretty(const VerifyReport& r, std::ostream& out) {
    auto optional_text = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
    out << std::left;
    out << std::setw(18) << "target" << r.target << '\n';
    std::string space;
    for (const auto& [k, v] : r.space) {
        space += (space.empty() ? "" : " ") + k + "=" + std::to_string(v);
    }
    out << std::setw(18) << "space" << space << '\n';
    out << std::setw(18) << "examined" << r.examined << '\n';
    out << std::setw(18) << "extremal value" << optional_text(r.extremal_value) << '\n';
    out << std::setw(18) << "conjectured value" << optional_text(r.conjectured_value) << '\n';
    for (const auto& [k, v] : r.details) {
        out << std::setw(18) << k << v << '\n';
    }
    out << std::setw(18) << "witnesses" << r.witnesses.size() << '\n';
    for (const Witness& w : r.witnesses) {
        out << "  " << w.key << (w.graph6.empty() ? "" : "  " + w.graph6) << '\n';
    }
    out << std::setw(18) << "violations" << r.violations.size() << '\n';
    for (const std::string& v : r.violations) {
        out << "  " << v << '\n';
    }
    out << std::setw(18) << "millis" << r.millis << '\n';
    out << std::setw(18) << "result" << (r.passed() ? "PASS" : "FAIL") << '\n';
}

inline VerifyReport run_verify(const RunConfig& cfg) {
    const std::string& cmd = cfg.command;
    if (cmd == "verify-gls") {
        return extremal_clique_search(require(cfg.n, "--n", cmd), require(cfg.r, "--r", cmd), cfg.t.value_or(3),
                                      cfg.workers);
    }
    if (cmd == "verify-total") {
        return extremal_total_clique_search(require(cfg.n, "--n", cmd), require(cfg.r, "--r", cmd), cfg.workers);
    }
    if (cmd == "verify-lex-mu") {
        return verify_lex_mu(require(cfg.n, "--n", cmd), cfg.workers);
    }
    if (cmd == "verify-star-matching") {
        return verify_star_matching(require(cfg.n, "--n", cmd), cfg.workers);
    }
    if (cmd == "verify-dichotomy") {
        return verify_cluster_dichotomy(require(cfg.n, "--n", cmd), require(cfg.r, "--r", cmd), cfg.workers);
    }
    if (cmd == "verify-avgwt") {
        return verify_avgwt_lemma(cfg.r.value_or(12));
    }
    if (cmd == "verify-finite-calc") {
        return verify_finite_calculation(require(cfg.r, "--r", cmd));
    }
    if (cmd == "verify-pipeline") {
        return verify_main_pipeline(require(cfg.n, "--n", cmd), require(cfg.r, "--r", cmd), cfg.workers);
    }
    throw InputError("unknown command " + cmd);
}

/// Runs a non-verify command, returning JSON lines (or table rows) for output.
inline std::string run_graph_command(const RunConfig& cfg, std::istream& in, std::vector<Graph>& witnesses) {
    const std::string& cmd = cfg.command;
    std::ostringstream text;
    if (cmd == "enumerate") {
        SearchSpace space;
        space.n = require(cfg.n, "--n", cmd);
        space.max_degree = cfg.r;
        space.min_degree = cfg.min_degree;
        space.edge_count = cfg.m;
        for (const GraphClass& c : enumerate_graphs(space, cfg.workers)) {
            text << write_graph6(c.graph) << '\n';
        }
        return text.str();
    }
    std::vector<Graph> graphs = read_graphs(in);
    for (const Graph& g : graphs) {
        nlohmann::ordered_json j;
        if (cmd == "count") {
            j = count_json(g, cfg.t);
            if (cfg.pretty) {
                text << j["graph6"].get<std::string>() << "  n=" << g.order() << " e=" << g.size()
                     << (cfg.t ? " kappa_" + std::to_string(*cfg.t) + "=" + std::to_string(j["kappa_t"].get<std::uint64_t>()) : "")
                     << " kappa=" << j["kappa"].get<std::uint64_t>() << " mu=" << j["mu"].get<std::int64_t>() << '\n';
                continue;
            }
        } else if (cmd == "clusters") {
            int r = require(cfg.r, "--r", cmd);
            j["graph6"] = write_graph6(g);
            j["r"] = r;
            nlohmann::ordered_json list = nlohmann::ordered_json::array();
            for (const Cluster& c : find_clusters(g, r)) {
                list.push_back(cluster_json(c));
            }
            j["clusters"] = list;
        } else if (cmd == "fold") {
            int r = require(cfg.r, "--r", cmd);
            std::vector<Cluster> clusters = find_clusters(g, r);
            if (cfg.cluster >= static_cast<int>(clusters.size())) {
                throw InputError("graph " + write_graph6(g) + " has " + std::to_string(clusters.size()) +
                                 " clusters; --cluster " + std::to_string(cfg.cluster) + " is out of range");
            }
            auto [folded, cert] = certified_fold(g, clusters[static_cast<std::size_t>(cfg.cluster)]);
            j["graph6"] = write_graph6(g);
            j["folded"] = write_graph6(folded);
            j["certificate"] = certificate_json(cert);
            witnesses.push_back(folded);
        } else if (cmd == "reduce") {
            int r = require(cfg.r, "--r", cmd);
            Reduction red = reduce(g, r);
            j["graph6"] = write_graph6(g);
            j["peeled"] = red.peeled;
            j["rest"] = write_graph6(red.rest);
            j["rest_order"] = red.rest.order();
            j["rest_within_bound"] = red.rest_within_bound(r);
            j["triangles_before"] = red.triangles_before;
            j["triangles_after"] = red.triangles_after;
            nlohmann::ordered_json trace = nlohmann::ordered_json::array();
            for (const FoldCertificate& f : red.trace) {
                trace.push_back(certificate_json(f));
            }
            j["folds"] = trace;
            witnesses.push_back(red.rest);
        } else {
            throw InputError("unknown command " + cmd);
        }
        text << (cfg.pretty ? j.dump(2) : j.dump()) << '\n';
    }
    return text.str();
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw InputError("cannot open " + path + " for writing");
    }
    file << text;
}

} // namespace detail

/// Dispatches one command. Exit status: 0 pass, 1 violations, 2 usage or
/// precondition error.
inline int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.workers < 1) {
            throw InputError("worker count must be at least 1");
        }
        if (cfg.command.rfind("verify-", 0) == 0) {
            VerifyReport report = detail::run_verify(cfg);
            std::ostringstream text;
            if (cfg.pretty) {
                detail::print_pretty(report, text);
            } else {
                text << to_json(report).dump() << '\n';
            }
            detail::write_text(cfg.output, text.str(), out);
            if (!cfg.witness_out.empty()) {
                std::string lines;
                for (const Witness& w : report.witnesses) {
                    if (!w.graph6.empty()) {
                        lines += w.graph6 + "\n";
                    }
                }
                detail::write_text(cfg.witness_out, lines, out);
            }
            return report.passed() ? kExitPass : kExitViolations;
        }

        std::vector<Graph> witnesses;
        std::string text;
        if (cfg.input.empty() || cfg.command == "enumerate") {
            text = detail::run_graph_command(cfg, in, witnesses);
        } else {
            std::ifstream file(cfg.input);
            if (!file) {
                throw InputError("cannot open " + cfg.input);
            }
            text = detail::run_graph_command(cfg, file, witnesses);
        }
        detail::write_text(cfg.output, text, out);
        if (!cfg.witness_out.empty()) {
            std::string lines;
            for (const Graph& g : witnesses) {
                lines += write_graph6(g) + "\n";
            }
            detail::write_text(cfg.witness_out, lines, out);
        }
        return kExitPass;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        return kExitViolations;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace cliquebound::cli
