// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is the number of failing criteria (0 when all pass).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <cliquebound/cliquebound.hpp>

#include "oracles.hpp"
#include "properties.hpp"

using namespace cliquebound;

namespace {

// Pinned limits.
constexpr std::int64_t kCellBudgetMillis = 300'000;  // per (n, r) cell
constexpr std::int64_t kFiniteCalcBudgetMillis = 50;
constexpr int kRandomCompressionTriples = 20'000;
constexpr int kRandomCensusGraphs = 5'000;
constexpr std::uint64_t kSeed = 20261018;

using Clock = std::chrono::steady_clock;

std::int64_t millis_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string note;

    void fail(const std::string& why) {
        if (pass) {
            note = why;
        }
        pass = false;
    }
};

// Shared corpora, built once.
struct Corpus {
    std::map<int, std::vector<GraphClass>> delta4;  // Δ <= 4, n <= 9
    std::map<int, std::vector<GraphClass>> all;     // no bound, n <= 7

    Corpus() {
        for (int n = 0; n <= 9; ++n) {
            SearchSpace s;
            s.n = n;
            s.max_degree = 4;
            delta4[n] = enumerate_graphs(s, default_workers());
        }
        for (int n = 0; n <= 7; ++n) {
            SearchSpace s;
            s.n = n;
            all[n] = enumerate_graphs(s, default_workers());
        }
    }
};

std::vector<GraphClass> bounded_subset(const std::vector<GraphClass>& from, int r) {
    std::vector<GraphClass> out;
    for (const GraphClass& c : from) {
        if (c.graph.max_degree() <= r) {
            out.push_back(c);
        }
    }
    return out;
}

std::int64_t fold_certificates_checked = 0;

Outcome c1_gls() {
    Outcome o;
    std::vector<std::pair<int, int>> cells;
    for (int n = 1; n <= 9; ++n) cells.emplace_back(n, 3);
    for (int n = 1; n <= 10; ++n) cells.emplace_back(n, 2);
    for (int n = 1; n <= 8; ++n) cells.emplace_back(n, 4);
    std::int64_t slowest = 0;
    for (auto [n, r] : cells) {
        auto start = Clock::now();
        VerifyReport rep = extremal_clique_search(n, r, 3, default_workers());
        std::int64_t ms = millis_since(start);
        slowest = std::max(slowest, ms);
        if (!rep.passed()) {
            o.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " + rep.violations.front());
        }
        if (ms >= kCellBudgetMillis) {
            o.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + " took " + std::to_string(ms) + " ms");
        }
    }
    std::ostringstream s;
    s << cells.size() << " cells, slowest " << slowest << " ms";
    if (o.pass) o.note = s.str();
    return o;
}

Outcome c2_total() {
    Outcome o;
    struct Case {
        int n;
        std::int64_t value;
        std::vector<Graph> maximizers;
    };
    std::vector<Case> cases = {
        {7, 15, {disjoint_union(copies(2, complete_graph(3)), complete_graph(1)),
                 disjoint_union(complete_graph(3), cycle_graph(4))}},
        {8, 17, {disjoint_union(copies(2, complete_graph(3)), complete_graph(2)),
                 disjoint_union(complete_graph(3), cycle_graph(5))}},
    };
    for (const Case& c : cases) {
        VerifyReport rep = extremal_total_clique_search(c.n, 2);
        if (!rep.passed()) {
            o.fail(rep.violations.front());
        }
        if (rep.extremal_value != c.value) {
            o.fail("n=" + std::to_string(c.n) + " value " + std::to_string(rep.extremal_value.value_or(-1)));
        }
        std::set<std::string> got;
        for (const Witness& w : rep.witnesses) {
            got.insert(w.key);
        }
        std::set<std::string> want;
        for (const Graph& g : c.maximizers) {
            want.insert(key_to_hex(canonical_form(g)));
        }
        if (got != want) {
            o.fail("n=" + std::to_string(c.n) + " maximizer set differs");
        }
    }
    if (o.pass) o.note = "n=7: 15 {2K3+K1, K3+C4}; n=8: 17 {2K3+K2, K3+C5}";
    return o;
}

Outcome c3_lex_mu() {
    Outcome o;
    std::int64_t pairs = 0;
    for (int n = 0; n <= 7; ++n) {
        VerifyReport rep = verify_lex_mu(n, default_workers());
        pairs += rep.detail("edge_counts").value_or(0);
        if (!rep.passed()) o.fail(rep.violations.front());
    }
    if (o.pass) o.note = std::to_string(pairs) + " (n, m) pairs";
    return o;
}

Outcome c4_star_matching() {
    Outcome o;
    std::int64_t pairs = 0;
    for (int n = 0; n <= 7; ++n) {
        VerifyReport rep = verify_star_matching(n, default_workers());
        pairs += rep.detail("edge_counts").value_or(0);
        if (!rep.passed()) o.fail(rep.violations.front());
    }
    if (o.pass) o.note = std::to_string(pairs) + " (n, m) pairs";
    return o;
}

Outcome c5_compression() {
    Outcome o;
    std::int64_t checked = 0;
    auto check = [&](const Graph& g, Vertex x, Vertex y) {
        Graph h = compress(g, x, y);
        ++checked;
        if (h.order() != g.order() || h.size() != g.size() || mu(h) < mu(g)) {
            o.fail("counterexample " + write_graph6(g) + " x=" + std::to_string(x) + " y=" + std::to_string(y));
        }
    };
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < kRandomCompressionTriples; ++i) {
        int n = 2 + static_cast<int>(rng() % 23);
        double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
        Graph g = oracle::random_graph(n, p, rng);
        Vertex x = static_cast<Vertex>(rng() % n);
        Vertex y = static_cast<Vertex>((x + 1 + rng() % (n - 1)) % n);
        check(g, x, y);
    }
    for (int n = 2; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t code = 0; code < (1U << pairs); ++code) {
            Graph g = oracle::labeled_graph(n, code);
            for (Vertex x = 0; x < n; ++x) {
                for (Vertex y = 0; y < n; ++y) {
                    if (x != y) check(g, x, y);
                }
            }
        }
    }
    if (o.pass) o.note = std::to_string(checked) + " (G, x, y) triples";
    return o;
}

Outcome c6_dichotomy(const Corpus& corpus) {
    Outcome o;
    std::int64_t clusters = 0;
    std::int64_t graphs = 0;
    for (int n = 1; n <= 9; ++n) {
        for (int r = 0; r <= 4; ++r) {
            VerifyReport rep = verify_cluster_dichotomy(corpus.delta4.at(n), n, r);
            clusters += rep.detail("clusters").value_or(0);
            graphs += rep.examined;
            if (!rep.passed()) o.fail(rep.violations.front());
        }
    }
    VerifyReport gadgets = verify_star_matching_clusters();
    if (!gadgets.passed()) o.fail(gadgets.violations.front());
    if (o.pass) {
        o.note = std::to_string(clusters) + " clusters in " + std::to_string(graphs) + " (graph, r) pairs";
    }
    return o;
}

Outcome c7_fold_certificates(const Corpus& corpus) {
    Outcome o;
    auto check = [&](const FoldCertificate& f, const std::string& where) {
        ++fold_certificates_checked;
        if (!f.ok()) o.fail(where + ": gain " + std::to_string(f.gain()) + " < " + std::to_string(f.guaranteed_gain()));
    };
    for (int n = 1; n <= 9; ++n) {
        for (int r = 1; r <= 4; ++r) {
            for (const GraphClass& c : bounded_subset(corpus.delta4.at(n), r)) {
                const std::string name = write_graph6(c.graph) + " r=" + std::to_string(r);
                // every cluster folded directly
                for (const Cluster& cl : find_clusters(c.graph, r)) {
                    check(certified_fold(c.graph, cl).second, name);
                }
                // every fold of the reduction
                try {
                    for (const FoldCertificate& f : reduce(c.graph, r).trace) check(f, name);
                } catch (const InvariantViolation& e) {
                    o.fail(name + ": " + e.what());
                }
            }
        }
    }
    for (int n = 1; n <= 9; ++n) {
        for (int r = 2; r <= 4; ++r) {
            VerifyReport rep = verify_main_pipeline(bounded_subset(corpus.delta4.at(n), r), n, r);
            if (!rep.passed()) o.fail(rep.violations.front());
        }
    }
    VerifyReport gadgets = verify_star_matching_clusters();
    fold_certificates_checked += gadgets.detail("folds").value_or(0);
    if (!gadgets.passed()) o.fail(gadgets.violations.front());
    if (o.pass) o.note = std::to_string(fold_certificates_checked) + " folds certified";
    return o;
}

Outcome c8_avgwt() {
    Outcome o;
    VerifyReport rep = verify_avgwt_lemma(12);
    if (!rep.passed()) o.fail(rep.violations.front());
    if (o.pass) {
        o.note = std::to_string(rep.examined) + " (r, a, b) triples, tightest margin " +
                 std::to_string(rep.extremal_value.value_or(0)) + " at " + rep.witnesses.front().key;
    }
    return o;
}

Outcome c9_finite_calc() {
    Outcome o;
    std::ostringstream s;
    auto start = Clock::now();
    std::int64_t settled = 0;
    for (int r = 3; r <= 6; ++r) {
        VerifyReport rep = verify_finite_calculation(r);
        if (!rep.passed()) o.fail(rep.violations.front());
        s << "r=" << r << ":n<=" << finite_calculation_max_n(r) << "(" << rep.examined << " checked) ";
        settled += rep.detail("settled_a_le_1").value_or(0);
    }
    std::int64_t ms = millis_since(start);
    if (ms > kFiniteCalcBudgetMillis) o.fail("took " + std::to_string(ms) + " ms");
    s << "; " << settled << " values with a<=1 left to the a<=1 theorem; " << ms << " ms";
    if (o.pass) o.note = s.str();
    return o;
}

Outcome c10_class_counts() {
    Outcome o;
    const std::size_t expected[] = {0, 0, 0, 0, 11, 34, 156, 1044};
    std::ostringstream s;
    for (int n = 4; n <= 7; ++n) {
        SearchSpace space;
        space.n = n;
        std::size_t enumerated = enumerate_graphs(space, default_workers()).size();
        std::set<CanonicalKey> buckets;
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t code = 0; code < (1U << pairs); ++code) {
            buckets.insert(canonical_form(oracle::labeled_graph(n, code)));
        }
        if (enumerated != expected[n] || buckets.size() != expected[n]) {
            o.fail("n=" + std::to_string(n) + ": enumerated " + std::to_string(enumerated) + ", brute force " +
                   std::to_string(buckets.size()));
        }
        s << buckets.size() << (n < 7 ? ", " : "");
    }
    if (o.pass) o.note = "n=4..7: " + s.str();
    return o;
}

Outcome c11_census(const Corpus& corpus) {
    Outcome o;
    std::int64_t checked = 0;
    auto check = [&](const Graph& g) {
        ++checked;
        auto failures = props::census_identity_failures(g);
        if (!failures.empty()) o.fail(write_graph6(g) + ": " + failures.front());
    };
    for (const auto& [n, list] : corpus.delta4) {
        for (const GraphClass& c : list) check(c.graph);
    }
    for (const auto& [n, list] : corpus.all) {
        for (const GraphClass& c : list) check(c.graph);
    }
    std::mt19937_64 rng(kSeed + 1);
    for (int i = 0; i < kRandomCensusGraphs; ++i) {
        int n = static_cast<int>(rng() % (kMaxVertices + 1));
        double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        check(oracle::random_graph(n, p, rng));
    }
    if (o.pass) o.note = std::to_string(checked) + " graphs";
    return o;
}

Outcome c12_graph6(const Corpus& corpus) {
    Outcome o;
    std::int64_t checked = 0;
    for (const auto& [n, list] : corpus.all) {
        for (const GraphClass& c : list) {
            ++checked;
            std::string text = write_graph6(c.graph);
            Graph back = read_graph6(text);
            if (back != c.graph || write_graph6(back) != text) o.fail("round trip failed for " + text);
        }
    }
    if (o.pass) o.note = std::to_string(checked) + " graphs, n <= 7";
    return o;
}

} // namespace

int main() {
    auto total_start = Clock::now();
    Corpus corpus;
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"C1  gls max kappa_3 (r=3 n<=9, r=2 n<=10, r=4 n<=8)", [] { return c1_gls(); }},
        {"C2  total-clique maximizer sets (r=2, n=7,8)", [] { return c2_total(); }},
        {"C3  lex graphs maximise mu (n<=7)", [] { return c3_lex_mu(); }},
        {"C4  star plus matching maximises mu, delta>=1 (n<=7)", [] { return c4_star_matching(); }},
        {"C5  compression never lowers mu", [] { return c5_compression(); }},
        {"C6  every cluster foldable or dischargeable (n<=9, r<=4)", [&] { return c6_dichotomy(corpus); }},
        {"C7  fold certificates", [&] { return c7_fold_certificates(corpus); }},
        {"C8  weight-sum sweep (r<=12)", [] { return c8_avgwt(); }},
        {"C9  finite calculation (r=3..6)", [] { return c9_finite_calc(); }},
        {"C10 class counts vs labelled brute force", [] { return c10_class_counts(); }},
        {"C11 census identities", [&] { return c11_census(corpus); }},
        {"C12 graph6 round trip", [&] { return c12_graph6(corpus); }},
    };
    int failed = 0;
    for (auto& [name, run] : criteria) {
        auto start = Clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s %-58s [%lld ms] %s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                    static_cast<long long>(millis_since(start)), o.note.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed in %lld ms\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
                static_cast<long long>(millis_since(total_start)));
    return failed;
}
