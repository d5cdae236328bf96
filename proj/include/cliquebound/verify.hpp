#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "cluster.hpp"
#include "counting.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "report.hpp"
#include "threshold.hpp"

namespace cliquebound {

/// n = a(r+1) + b with 0 <= b <= r.
struct ExtremalParams {
    int n = 0;
    int r = 0;
    int a = 0;
    int b = 0;
};

inline ExtremalParams extremal_params(int n, int r) {
    if (n < 0 || r < 0) {
        throw InputError("n and r must be non-negative");
    }
    return {n, r, n / (r + 1), n % (r + 1)};
}

inline Witness witness_of(const Graph& g) {
    return {key_to_hex(canonical_form(g)), write_graph6(g)};
}

namespace detail {

inline Witness witness_of(const GraphClass& c) { return {key_to_hex(c.key), write_graph6(c.graph)}; }

inline std::vector<GraphClass> bounded_graphs(int n, int r, int workers) {
    SearchSpace space;
    space.n = n;
    space.max_degree = r;
    return enumerate_graphs(space, workers);
}

/// Runs `body` and charges its full wall time, enumeration included, to the report.
template <typename Body>
VerifyReport timed(Body body) {
    auto start = std::chrono::steady_clock::now();
    VerifyReport report = body();
    report.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline void require_nonnegative(int n, int r) {
    if (n < 0 || r < 0) {
        throw InputError("n and r must be non-negative");
    }
}

} // namespace detail

// ---- extremal searches ------------------------------------------------------

/// max κ_t over the given Δ <= r classes against κ_t(aK_{r+1} ∪ K_b).
inline VerifyReport extremal_clique_search(std::span<const GraphClass> graphs, int n, int r, int t) {
    if (t < 3) {
        throw InputError("clique size t must be at least 3");
    }
    VerifyReport report;
    ReportTimer timer(report);
    report.target = "gls";
    report.space = {{"n", n}, {"max_degree", r}, {"t", t}};
    const auto conjectured = static_cast<std::int64_t>(count_cliques_of_size(extremal_graph(n, r), t));
    report.conjectured_value = conjectured;
    std::int64_t best = -1;
    std::vector<const GraphClass*> top;
    for (const GraphClass& c : graphs) {
        ++report.examined;
        auto k = static_cast<std::int64_t>(count_cliques_of_size(c.graph, t));
        if (k > best) {
            best = k;
            top.clear();
        }
        if (k == best) {
            top.push_back(&c);
        }
    }
    report.extremal_value = best;
    std::sort(top.begin(), top.end(), [](auto* x, auto* y) { return x->key < y->key; });
    for (const GraphClass* c : top) {
        report.witnesses.push_back(detail::witness_of(*c));
    }
    if (best != conjectured) {
        report.violations.push_back("max kappa_" + std::to_string(t) + " = " + std::to_string(best) +
                                    " but kappa_" + std::to_string(t) + "(aK_{r+1} u K_b) = " +
                                    std::to_string(conjectured));
    }
    return report;
}

inline VerifyReport extremal_clique_search(int n, int r, int t, int workers = 1) {
    detail::require_nonnegative(n, r);
    return detail::timed([&] { return extremal_clique_search(detail::bounded_graphs(n, r, workers), n, r, t); });
}

/// The graphs attaining max κ for Δ <= r: aK_{r+1} ∪ K_b, and for r = 2 also
/// (a-1)K_3 ∪ C_4 when b = 1 and (a-1)K_3 ∪ C_5 when b = 2.
inline std::vector<Graph> expected_total_maximizers(int n, int r) {
    ExtremalParams p = extremal_params(n, r);
    std::vector<Graph> out{extremal_graph(n, r)};
    if (r == 2 && p.a >= 1 && (p.b == 1 || p.b == 2)) {
        out.push_back(disjoint_union(copies(p.a - 1, complete_graph(3)), cycle_graph(p.b + 3)));
    }
    return out;
}

inline VerifyReport extremal_total_clique_search(std::span<const GraphClass> graphs, int n, int r) {
    VerifyReport report;
    ReportTimer timer(report);
    report.target = "total";
    report.space = {{"n", n}, {"max_degree", r}};
    report.conjectured_value = static_cast<std::int64_t>(count_all_cliques(extremal_graph(n, r)));
    std::int64_t best = -1;
    std::vector<const GraphClass*> top;
    for (const GraphClass& c : graphs) {
        ++report.examined;
        auto k = static_cast<std::int64_t>(count_all_cliques(c.graph));
        if (k > best) {
            best = k;
            top.clear();
        }
        if (k == best) {
            top.push_back(&c);
        }
    }
    report.extremal_value = best;
    std::sort(top.begin(), top.end(), [](auto* x, auto* y) { return x->key < y->key; });
    std::set<CanonicalKey> found;
    for (const GraphClass* c : top) {
        report.witnesses.push_back(detail::witness_of(*c));
        found.insert(c->key);
    }
    std::set<CanonicalKey> expected;
    for (const Graph& g : expected_total_maximizers(n, r)) {
        expected.insert(canonical_form(g));
    }
    if (best != *report.conjectured_value) {
        report.violations.push_back("max kappa = " + std::to_string(best) + " but kappa(aK_{r+1} u K_b) = " +
                                    std::to_string(*report.conjectured_value));
    }
    for (const CanonicalKey& k : found) {
        if (!expected.contains(k)) {
            report.violations.push_back("unexpected maximizer " + key_to_hex(k));
        }
    }
    for (const CanonicalKey& k : expected) {
        if (!found.contains(k)) {
            report.violations.push_back("expected maximizer " + key_to_hex(k) + " not attained");
        }
    }
    return report;
}

inline VerifyReport extremal_total_clique_search(int n, int r, int workers = 1) {
    detail::require_nonnegative(n, r);
    return detail::timed([&] { return extremal_total_clique_search(detail::bounded_graphs(n, r, workers), n, r); });
}

// ---- μ extremal problems ----------------------------------------------------

/// For every m, max μ over (n, m)-graphs equals μ(L(n, m)).
inline VerifyReport verify_lex_mu(int n, int workers = 1) {
    if (n < 0 || n > kExhaustiveFreeCap) {
        throw InputError("verify-lex-mu supports 0 <= n <= " + std::to_string(kExhaustiveFreeCap));
    }
    VerifyReport report;
    ReportTimer timer(report);
    report.target = "lex-mu";
    report.space = {{"n", n}};
    SearchSpace space;
    space.n = n;
    std::map<std::int64_t, std::int64_t> best;
    for (const GraphClass& c : enumerate_graphs(space, workers)) {
        ++report.examined;
        std::int64_t& slot = best.try_emplace(c.graph.size(), -1).first->second;
        slot = std::max(slot, mu(c.graph));
    }
    std::int64_t overall = 0;
    for (std::int64_t m = 0; m <= choose(n, 2); ++m) {
        Graph lex = lex_graph(n, m);
        std::int64_t target = mu(lex);
        auto it = best.find(m);
        if (it == best.end() || it->second != target) {
            report.violations.push_back("n=" + std::to_string(n) + " m=" + std::to_string(m) + ": max mu " +
                                        (it == best.end() ? std::string("missing") : std::to_string(it->second)) +
                                        " != mu(L(n,m)) = " + std::to_string(target));
        }
        overall = std::max(overall, target);
        report.witnesses.push_back(witness_of(lex));
    }
    report.extremal_value = best.empty() ? 0 : std::max_element(best.begin(), best.end(), [](auto& x, auto& y) {
                                                    return x.second < y.second;
                                                })->second;
    report.conjectured_value = overall;
    report.details = {{"edge_counts", static_cast<std::int64_t>(best.size())}};
    return report;
}

/// For n/2 <= m < n-1, max μ over δ >= 1 graphs equals C(2m-n+1, 2).
inline VerifyReport verify_star_matching(int n, int workers = 1) {
    if (n < 0 || n > kExhaustiveFreeCap) {
        throw InputError("verify-star-matching supports 0 <= n <= " + std::to_string(kExhaustiveFreeCap));
    }
    VerifyReport report;
    ReportTimer timer(report);
    report.target = "star-matching";
    report.space = {{"n", n}, {"min_degree", 1}};
    SearchSpace space;
    space.n = n;
    space.min_degree = 1;
    std::vector<GraphClass> graphs = enumerate_graphs(space, workers);
    std::int64_t checked = 0;
    std::int64_t overall_best = 0;
    std::int64_t overall_bound = 0;
    for (std::int64_t m = (n + 1) / 2; m < n - 1; ++m) {
        ++checked;
        std::int64_t bound = mu_bound_min_degree_one(n, m);
        std::int64_t best = -1;
        std::vector<const GraphClass*> top;
        for (const GraphClass& c : graphs) {
            if (c.graph.size() != m) {
                continue;
            }
            ++report.examined;
            std::int64_t value = mu(c.graph);
            if (value > best) {
                best = value;
                top.clear();
            }
            if (value == best) {
                top.push_back(&c);
            }
        }
        if (best != bound) {
            report.violations.push_back("n=" + std::to_string(n) + " m=" + std::to_string(m) + ": max mu " +
                                        std::to_string(best) + " != C(2m-n+1,2) = " + std::to_string(bound));
        }
        std::sort(top.begin(), top.end(), [](auto* x, auto* y) { return x->key < y->key; });
        for (const GraphClass* c : top) {
            report.witnesses.push_back(detail::witness_of(*c));
        }
        overall_best = std::max(overall_best, best);
        overall_bound = std::max(overall_bound, bound);
    }
    report.extremal_value = overall_best;
    report.conjectured_value = overall_bound;
    report.details = {{"edge_counts", checked}};
    return report;
}

// ---- clusters ---------------------------------------------------------------

/// A cluster on T = {0..t-1} whose common neighbourhood S = {t..t+s-1}
/// induces the complement of `r_graph`. With `pendants`, every v ∈ S gets
/// d_R(v) private leaves so that it also reaches degree r = t + s - 1.
inline Graph make_cluster_gadget(int t, const Graph& r_graph, bool pendants) {
    if (t < 1) {
        throw InputError("cluster size must be at least 1");
    }
    const int s = r_graph.order();
    const int extra = pendants ? static_cast<int>(2 * r_graph.size()) : 0;
    Graph g(t + s + extra);
    for (Vertex x = 0; x < t; ++x) {
        for (Vertex y = x + 1; y < t + s; ++y) {
            g.add_edge(x, y);
        }
    }
    for (Vertex i = 0; i < s; ++i) {
        for (Vertex j = i + 1; j < s; ++j) {
            if (!r_graph.adjacent(i, j)) {
                g.add_edge(t + i, t + j);
            }
        }
    }
    Vertex next = t + s;
    if (pendants) {
        for (Vertex i = 0; i < s; ++i) {
            for (int k = 0; k < r_graph.degree(i); ++k) {
                g.add_edge(t + i, next++);
            }
        }
    }
    return g;
}

namespace detail {

inline void check_clusters(const Graph& g, int r, VerifyReport& report, std::int64_t& clusters_seen) {
    for (const Cluster& c : find_clusters(g, r)) {
        if (c.is_complete_component()) {
            continue;
        }
        ++clusters_seen;
        if (!is_foldable(c) && !is_dischargeable(c)) {
            report.violations.push_back("cluster " + set_string(c.clique) + " of " + write_graph6(g) +
                                        " is neither foldable nor dischargeable");
        }
    }
}

} // namespace detail

/// Every cluster with s >= 1 is foldable or dischargeable.
inline VerifyReport verify_cluster_dichotomy(std::span<const GraphClass> graphs, int n, int r) {
    VerifyReport report;
    ReportTimer timer(report);
    report.target = "dichotomy";
    report.space = {{"n", n}, {"max_degree", r}};
    std::int64_t clusters_seen = 0;
    std::int64_t graphs_with_clusters = 0;
    for (const GraphClass& c : graphs) {
        if (c.graph.max_degree() > r) {
            continue;
        }
        ++report.examined;
        std::int64_t before = clusters_seen;
        detail::check_clusters(c.graph, r, report, clusters_seen);
        if (clusters_seen > before) {
            ++graphs_with_clusters;
            if (report.witnesses.empty()) {
                report.witnesses.push_back(detail::witness_of(c));
            }
        }
    }
    report.details = {{"clusters", clusters_seen}, {"graphs_with_clusters", graphs_with_clusters}};
    return report;
}

inline VerifyReport verify_cluster_dichotomy(int n, int r, int workers = 1) {
    detail::require_nonnegative(n, r);
    if (n > 9) {
        throw InputError("verify-dichotomy supports n <= 9");
    }
    return detail::timed([&] { return verify_cluster_dichotomy(detail::bounded_graphs(n, r, workers), n, r); });
}

/// Clusters built with R = K_{1,p} ∪ qK_2 (s = p + 2q + 1 <= max_s, 2 <= t <= max_t):
/// dischargeable exactly when t <= p, foldable whenever t > p. Each gadget
/// is also folded and the fold certificate checked.
inline VerifyReport verify_star_matching_clusters(int max_s = 8, int max_t = 8) {
    VerifyReport report;
    ReportTimer timer(report);
    report.target = "star-matching-clusters";
    report.space = {{"max_s", max_s}, {"max_t", max_t}};
    std::int64_t folds = 0;
    for (int p = 1; p + 1 <= max_s; ++p) {
        for (int q = 0; p + 2 * q + 1 <= max_s; ++q) {
            Graph r_graph = disjoint_union(star_graph(p), copies(q, complete_graph(2)));
            for (int t = 2; t <= max_t; ++t) {
                for (bool pendants : {false, true}) {
                    ++report.examined;
                    const int s = p + 2 * q + 1;
                    const int r = t + s - 1;
                    Graph g = make_cluster_gadget(t, r_graph, pendants);
                    std::string tag = "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                      " t=" + std::to_string(t) + (pendants ? " (pendants)" : "");
                    std::vector<Cluster> clusters = find_clusters(g, r);
                    if (clusters.size() != 1 || clusters[0].clique != VertexSet::first(t) ||
                        clusters[0].s() != s) {
                        report.violations.push_back(tag + ": gadget cluster not recovered");
                        continue;
                    }
                    const Cluster& c = clusters[0];
                    if (c.r_mu() != choose(p, 2) || c.r_edges() != p + q) {
                        report.violations.push_back(tag + ": R is not K_{1,p} u qK_2");
                    }
                    if (is_dischargeable(c) != (t <= p)) {
                        report.violations.push_back(tag + ": dischargeable disagrees with t <= p");
                    }
                    if (t > p && !is_foldable(c)) {
                        report.violations.push_back(tag + ": t > p but not foldable");
                    }
                    if (!is_foldable(c) && !is_dischargeable(c)) {
                        report.violations.push_back(tag + ": neither foldable nor dischargeable");
                    }
                    auto [folded, cert] = certified_fold(g, c);
                    ++folds;
                    if (!cert.ok()) {
                        report.violations.push_back(tag + ": fold certificate failed (gain " +
                                                    std::to_string(cert.gain()) + " < " +
                                                    std::to_string(cert.guaranteed_gain()) + ")");
                    }
                }
            }
        }
    }
    report.details = {{"folds", folds}};
    return report;
}

// ---- arithmetic sweeps ------------------------------------------------------

/// Σ_{e} w(e) over aK_{r+1} ∪ K_b.
inline std::int64_t extremal_weight_sum(std::int64_t a, std::int64_t r, std::int64_t b) {
    return a * choose(r + 1, 2) * (r - 1) + choose(b, 2) * (b - 2);
}

/// a >= 2r/(3√3), squared: 27a² >= 4r².
inline bool avgwt_condition_holds(std::int64_t a, std::int64_t r) { return 27 * a * a >= 4 * r * r; }

/// Smallest a >= 0 with 27a² >= 4r².
inline std::int64_t avgwt_min_a(std::int64_t r) {
    std::int64_t a = 0;
    while (!avgwt_condition_holds(a, r)) {
        ++a;
    }
    return a;
}

/// 2·Σw(aK_{r+1} ∪ K_b) > (r-2)·r·(a(r+1)+b) for 1 <= r <= r_max, 0 <= b <= r,
/// and every a from the smallest with 27a² >= 4r² up to 2r.
inline VerifyReport verify_avgwt_lemma(int r_max) {
    if (r_max < 1 || r_max > 12) {
        throw InputError("verify-avgwt supports 1 <= r_max <= 12");
    }
    VerifyReport report;
    ReportTimer timer(report);
    report.target = "avgwt";
    report.space = {{"r_min", 1}, {"r_max", r_max}};
    std::optional<std::int64_t> tightest;
    for (std::int64_t r = 1; r <= r_max; ++r) {
        for (std::int64_t a = avgwt_min_a(r); a <= 2 * r; ++a) {
            for (std::int64_t b = 0; b <= r; ++b) {
                ++report.examined;
                std::int64_t lhs = 2 * extremal_weight_sum(a, r, b);
                std::int64_t rhs = (r - 2) * r * (a * (r + 1) + b);
                std::string tag = "r=" + std::to_string(r) + ",a=" + std::to_string(a) + ",b=" + std::to_string(b);
                if (lhs <= rhs) {
                    report.violations.push_back(tag + ": " + std::to_string(lhs) + " <= " + std::to_string(rhs));
                }
                if (!tightest || lhs - rhs < *tightest) {
                    tightest = lhs - rhs;
                    report.witnesses.assign(1, Witness{tag, ""});
                }
            }
        }
    }
    report.extremal_value = tightest;
    report.details = {{"tightest_margin", tightest.value_or(0)}};
    return report;
}

/// Largest n with 27n² <= 4r²(r+1)², plus the b <= r slack.
inline int finite_calculation_max_n(int r) {
    std::int64_t bound = 4LL * r * r * (r + 1) * (r + 1);
    std::int64_t n = 0;
    while (27 * (n + 1) * (n + 1) <= bound) {
        ++n;
    }
    return static_cast<int>(n) + r;
}

/// (r-2)·r·n <= 6·(a·C(r+1,3) + C(b,3)) for n = a(r+1) + b.
inline bool finite_calculation_holds(int r, int n) {
    ExtremalParams p = extremal_params(n, r);
    std::int64_t lhs = static_cast<std::int64_t>(r - 2) * r * n;
    std::int64_t rhs = 6 * (p.a * choose(r + 1, 3) + choose(p.b, 3));
    return lhs <= rhs;
}

/// Sweeps every n up to finite_calculation_max_n(r). Values of n with a >= 2
/// are checked; a <= 1 lies in the already-settled a <= 1 range and is only
/// tallied.
inline VerifyReport verify_finite_calculation(int r) {
    if (r < 3 || r > 6) {
        throw InputError("verify-finite-calc supports 3 <= r <= 6");
    }
    VerifyReport report;
    ReportTimer timer(report);
    report.target = "finite-calc";
    const int n_max = finite_calculation_max_n(r);
    report.space = {{"r", r}, {"n_min", 1}, {"n_max", n_max}, {"a_min", 2}};
    std::int64_t settled = 0;
    std::int64_t settled_failing = 0;
    std::optional<std::int64_t> tightest;
    for (int n = 1; n <= n_max; ++n) {
        ExtremalParams p = extremal_params(n, r);
        if (p.a <= 1) {
            ++settled;
            settled_failing += finite_calculation_holds(r, n) ? 0 : 1;
            continue;
        }
        ++report.examined;
        std::int64_t lhs = static_cast<std::int64_t>(r - 2) * r * n;
        std::int64_t rhs = 6 * (p.a * choose(r + 1, 3) + choose(p.b, 3));
        std::string tag = "r=" + std::to_string(r) + ",n=" + std::to_string(n) + ",a=" + std::to_string(p.a) +
                          ",b=" + std::to_string(p.b);
        if (lhs > rhs) {
            report.violations.push_back(tag + ": " + std::to_string(lhs) + " > " + std::to_string(rhs));
        }
        if (!tightest || rhs - lhs < *tightest) {
            tightest = rhs - lhs;
            report.witnesses.assign(1, Witness{tag, ""});
        }
    }
    report.extremal_value = tightest;
    report.details = {{"checked", report.examined},
                      {"settled_a_le_1", settled},
                      {"settled_a_le_1_failing", settled_failing}};
    return report;
}

// ---- the reduction pipeline -------------------------------------------------

/// For every Δ <= r graph: reduce, check the triangle count did not drop,
/// check H has no foldable cluster and (all its clusters being
/// dischargeable) average edge weight <= r - 2; finally the largest κ_3 seen
/// must equal κ_3(aK_{r+1} ∪ K_b).
inline VerifyReport verify_main_pipeline(std::span<const GraphClass> graphs, int n, int r) {
    VerifyReport report;
    ReportTimer timer(report);
    report.target = "pipeline";
    report.space = {{"n", n}, {"max_degree", r}};
    report.conjectured_value = static_cast<std::int64_t>(count_cliques_of_size(extremal_graph(n, r), 3));
    std::int64_t folds = 0;
    std::int64_t reduced_graphs = 0;
    std::int64_t rest_over_bound = 0;
    std::int64_t best = -1;
    const GraphClass* best_graph = nullptr;
    for (const GraphClass& c : graphs) {
        if (c.graph.max_degree() > r) {
            continue;
        }
        ++report.examined;
        const std::string name = write_graph6(c.graph);
        auto k3 = static_cast<std::int64_t>(count_cliques_of_size(c.graph, 3));
        if (k3 > best || (k3 == best && c.key < best_graph->key)) {
            best = k3;
            best_graph = &c;
        }
        Reduction red;
        try {
            red = reduce(c.graph, r);
        } catch (const InvariantViolation& e) {
            report.violations.push_back(name + ": " + e.what());
            continue;
        }
        folds += static_cast<std::int64_t>(red.trace.size());
        reduced_graphs += red.trace.empty() ? 0 : 1;
        rest_over_bound += red.rest_within_bound(r) ? 0 : 1;
        for (const FoldCertificate& cert : red.trace) {
            if (!cert.ok()) {
                report.violations.push_back(name + ": fold certificate failed");
            }
        }
        Graph whole = disjoint_union(copies(red.peeled, complete_graph(r + 1)), red.rest);
        if (static_cast<std::int64_t>(count_cliques_of_size(whole, 3)) < k3 ||
            whole.order() != c.graph.order()) {
            report.violations.push_back(name + ": reduction lost triangles or vertices");
        }
        bool stuck = false;
        for (const Cluster& cl : find_clusters(red.rest, r)) {
            if (!cl.is_complete_component() && is_foldable(cl)) {
                stuck = true;
            }
        }
        if (stuck) {
            report.violations.push_back(name + ": reduced graph still has a foldable cluster");
        }
        DischargeAudit audit = discharge_audit(red.rest, r);
        if (!audit.all_dischargeable) {
            report.violations.push_back(name + ": reduced graph has a cluster that is not dischargeable");
        } else if (!audit.has_complete_component &&
                   (audit.total_benefit_halves() < 0 || !audit.average_weight_within_bound())) {
            report.violations.push_back(name + ": reduced graph has average edge weight above r-2");
        }
        for (const ClusterDischarge& d : audit.clusters) {
            if (d.dischargeable && d.net_halves() < 0) {
                report.violations.push_back(name + ": dischargeable cluster ends with negative benefit");
            }
        }
    }
    report.extremal_value = best;
    if (best_graph != nullptr) {
        report.witnesses.push_back(detail::witness_of(*best_graph));
    }
    if (best != *report.conjectured_value) {
        report.violations.push_back("max kappa_3 = " + std::to_string(best) + " but kappa_3(aK_{r+1} u K_b) = " +
                                    std::to_string(*report.conjectured_value));
    }
    report.details = {{"folds", folds},
                      {"graphs_folded", reduced_graphs},
                      {"rest_over_size_bound", rest_over_bound}};
    return report;
}

inline VerifyReport verify_main_pipeline(int n, int r, int workers = 1) {
    detail::require_nonnegative(n, r);
    if (n > 9) {
        throw InputError("verify-pipeline supports n <= 9");
    }
    return detail::timed([&] { return verify_main_pipeline(detail::bounded_graphs(n, r, workers), n, r); });
}

} // namespace cliquebound
