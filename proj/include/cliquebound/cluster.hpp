#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "counting.hpp"
#include "graph.hpp"

namespace cliquebound {

namespace detail {

inline void require_degree_bound(const Graph& g, int r) {
    if (r < 0) {
        throw InputError("degree bound must be non-negative");
    }
    if (g.max_degree() > r) {
        throw DomainError("maximum degree " + std::to_string(g.max_degree()) + " exceeds r=" +
                          std::to_string(r));
    }
}

inline std::string set_string(VertexSet s) {
    std::string out = "{";
    for (Vertex v : s) {
        if (out.size() > 1) {
            out += ",";
        }
        out += std::to_string(v);
    }
    return out + "}";
}

} // namespace detail

/// A maximal tight clique T with its common neighbourhood S.
///
/// R is the complement of G[S]; vertex i of R is the i-th smallest member of S.
struct Cluster {
    VertexSet clique;   // T
    VertexSet common;   // S
    Graph complement_graph;  // R
    int r = 0;

    int t() const { return clique.size(); }
    int s() const { return common.size(); }
    std::int64_t r_edges() const { return complement_graph.size(); }
    std::int64_t r_mu() const { return mu(complement_graph); }

    /// d_R(v) for v ∈ S, addressed by the vertex's label in G.
    int r_degree(Vertex v) const {
        int index = (common & VertexSet::first(v)).size();
        return complement_graph.degree(index);
    }

    /// S = ∅: T ∪ S is a whole K_{r+1} component.
    bool is_complete_component() const { return common.empty(); }
};

/// Edges of weight r - 1.
inline std::vector<Edge> tight_edges(const Graph& g, int r) {
    detail::require_degree_bound(g, r);
    std::vector<Edge> out;
    for (auto [u, v] : g.edges()) {
        if (edge_weight(g, u, v) == r - 1) {
            out.push_back({u, v});
        }
    }
    return out;
}

/// Components of the tight-edge graph that contain at least one edge,
/// ordered by least vertex, each checked against the cluster invariants.
inline std::vector<Cluster> find_clusters(const Graph& g, int r) {
    Graph tight(g.order());
    for (auto [u, v] : tight_edges(g, r)) {
        tight.add_edge(u, v);
    }
    std::vector<Cluster> out;
    for (VertexSet comp : components(tight)) {
        if (comp.size() < 2) {
            continue;
        }
        if (!is_clique(g, comp) || !is_clique(tight, comp)) {
            throw InvariantViolation("tight component " + detail::set_string(comp) +
                                     " is not a tight clique");
        }
        VertexSet common = g.vertices();
        for (Vertex x : comp) {
            common &= g.neighbors(x);
        }
        for (Vertex x : comp) {
            if (g.degree(x) != r || g.closed_neighbors(x) != (comp | common)) {
                throw InvariantViolation("cluster vertex " + std::to_string(x) +
                                         " does not have closed neighbourhood T ∪ S");
            }
        }
        if (comp.size() + common.size() != r + 1) {
            throw InvariantViolation("cluster " + detail::set_string(comp) + " has t + s != r + 1");
        }
        Cluster c{comp, common, complement(induced_subgraph(g, common)), r};
        if (c.s() >= 1 && c.complement_graph.min_degree() < 1) {
            throw InvariantViolation("cluster " + detail::set_string(comp) +
                                     " has an isolated vertex in R");
        }
        out.push_back(std::move(c));
    }
    return out;
}

/// t·e(R) >= μ(R): folding cannot lose triangles.
inline bool is_foldable(const Cluster& c) { return c.t() * c.r_edges() >= c.r_mu(); }

/// 2e(R) >= s + t - 1: the edges around T carry enough benefit to pay for it.
inline bool is_dischargeable(const Cluster& c) { return 2 * c.r_edges() >= c.s() + c.t() - 1; }

/// G_T: complete T ∪ S into a clique and cut every edge from S to the rest.
inline Graph fold(const Graph& g, const Cluster& c) {
    detail::require_degree_bound(g, c.r);
    VertexSet closed = c.clique | c.common;
    if (c.clique.empty() || !closed.is_subset_of(g.vertices()) || !(c.clique & c.common).empty() ||
        closed.size() != c.r + 1) {
        throw DomainError("not a cluster of this graph");
    }
    for (Vertex x : c.clique) {
        if (g.closed_neighbors(x) != closed) {
            throw DomainError("not a cluster of this graph: vertex " + std::to_string(x) +
                              " has the wrong closed neighbourhood");
        }
    }
    Graph out = g;
    for (Vertex v : c.common) {
        for (Vertex w : c.common) {
            if (v < w) {
                out.add_edge(v, w);
            }
        }
        for (Vertex w : g.neighbors(v) - closed) {
            out.remove_edge(v, w);
        }
    }
    return out;
}

/// Recount evidence for a single fold.
struct FoldCertificate {
    VertexSet clique;
    VertexSet common;
    int t = 0;
    int s = 0;
    std::int64_t r_edges = 0;
    std::int64_t r_mu = 0;
    std::int64_t triangles_before = 0;
    std::int64_t triangles_after = 0;
    bool degree_ok = false;      // Δ(G_T) <= r
    bool component_ok = false;   // T ∪ S is a K_{r+1} component of G_T

    std::int64_t gain() const { return triangles_after - triangles_before; }
    /// t·e(R) - μ(R)
    std::int64_t guaranteed_gain() const { return t * r_edges - r_mu; }
    bool gain_ok() const { return gain() >= guaranteed_gain(); }
    bool ok() const { return gain_ok() && degree_ok && component_ok; }
};

/// Folds and recounts; never throws on a failed check, the certificate says so.
inline std::pair<Graph, FoldCertificate> certified_fold(const Graph& g, const Cluster& c) {
    Graph folded = fold(g, c);
    FoldCertificate cert;
    cert.clique = c.clique;
    cert.common = c.common;
    cert.t = c.t();
    cert.s = c.s();
    cert.r_edges = c.r_edges();
    cert.r_mu = c.r_mu();
    cert.triangles_before = static_cast<std::int64_t>(count_cliques_of_size(g, 3));
    cert.triangles_after = static_cast<std::int64_t>(count_cliques_of_size(folded, 3));
    cert.degree_ok = folded.max_degree() <= c.r;
    VertexSet closed = c.clique | c.common;
    cert.component_ok = closed.size() == c.r + 1 && is_clique(folded, closed);
    for (Vertex v : closed) {
        cert.component_ok = cert.component_ok && folded.neighbors(v).is_subset_of(closed);
    }
    return {std::move(folded), cert};
}

// ---- discharging ------------------------------------------------------------

struct ClusterDischarge {
    VertexSet clique;
    int t = 0;
    int s = 0;
    std::int64_t r_edges = 0;
    bool dischargeable = false;
    std::int64_t own_benefit = 0;          // -C(t,2): every cluster edge is tight
    std::int64_t received_halves = 0;      // half of each incident associated edge
    std::int64_t net_halves() const { return 2 * own_benefit + received_halves; }
};

/// Benefits are kept in half-units so the transfer is exact.
struct DischargeAudit {
    int r = 0;
    std::vector<ClusterDischarge> clusters;
    std::int64_t edges = 0;
    std::int64_t weight_sum = 0;              // Σ w(e) = 3κ_3
    std::int64_t cluster_edge_halves = 0;     // after transfer
    std::int64_t associated_edge_halves = 0;  // after transfer
    std::int64_t other_edge_halves = 0;
    bool all_dischargeable = true;
    bool has_complete_component = false;

    std::int64_t total_benefit_halves() const {
        return cluster_edge_halves + associated_edge_halves + other_edge_halves;
    }
    /// average weight <= r - 2, i.e. Σ w(e) <= (r - 2)·e(G)
    bool average_weight_within_bound() const { return weight_sum <= (r - 2) * edges; }
};

inline DischargeAudit discharge_audit(const Graph& g, int r) {
    DischargeAudit audit;
    audit.r = r;
    std::vector<Cluster> clusters = find_clusters(g, r);
    std::vector<int> owner(g.order(), -1);
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        const Cluster& c = clusters[i];
        for (Vertex x : c.clique) {
            owner[x] = static_cast<int>(i);
        }
        ClusterDischarge d;
        d.clique = c.clique;
        d.t = c.t();
        d.s = c.s();
        d.r_edges = c.r_edges();
        d.dischargeable = is_dischargeable(c);
        audit.clusters.push_back(d);
        audit.all_dischargeable = audit.all_dischargeable && d.dischargeable;
        audit.has_complete_component = audit.has_complete_component || c.is_complete_component();
    }
    for (auto [u, v] : g.edges()) {
        int w = edge_weight(g, u, v);
        std::int64_t benefit = r - 2 - w;
        ++audit.edges;
        audit.weight_sum += w;
        if (owner[u] >= 0 && owner[u] == owner[v]) {
            audit.clusters[owner[u]].own_benefit += benefit;
            continue;
        }
        std::int64_t kept = 2 * benefit;
        for (Vertex end : {u, v}) {
            if (owner[end] >= 0) {
                audit.clusters[owner[end]].received_halves += benefit;
                kept -= benefit;
            }
        }
        if (owner[u] >= 0 || owner[v] >= 0) {
            audit.associated_edge_halves += kept;
        } else {
            audit.other_edge_halves += kept;
        }
    }
    for (const ClusterDischarge& d : audit.clusters) {
        audit.cluster_edge_halves += d.net_halves();
    }
    return audit;
}

// ---- reduction --------------------------------------------------------------

/// a'·K_{r+1} ∪ H with H free of foldable clusters.
struct Reduction {
    int peeled = 0;   // a'
    Graph rest;       // H
    std::vector<FoldCertificate> trace;
    std::int64_t triangles_before = 0;
    std::int64_t triangles_after = 0;  // κ_3(a'K_{r+1} ∪ H)

    /// 27·n(H)² <= 4r²(r+1)², the squared form of n(H) <= 2r(r+1)/(3√3).
    bool rest_within_bound(int r) const {
        std::int64_t nh = rest.order();
        return 27 * nh * nh <= 4LL * r * r * (r + 1) * (r + 1);
    }
};

/// Vertex sets of the components of `g` that are copies of K_{r+1}.
inline VertexSet complete_component_vertices(const Graph& g, int r) {
    VertexSet out;
    for (VertexSet comp : components(g)) {
        if (comp.size() == r + 1 && is_clique(g, comp)) {
            out |= comp;
        }
    }
    return out;
}

/// Repeatedly folds the foldable cluster with the least vertex, then peels
/// every K_{r+1} component. Each fold is recounted; a failed certificate
/// raises InvariantViolation.
inline Reduction reduce(const Graph& g, int r) {
    detail::require_degree_bound(g, r);
    Reduction out;
    out.triangles_before = static_cast<std::int64_t>(count_cliques_of_size(g, 3));
    Graph current = g;
    for (;;) {
        const Cluster* pick = nullptr;
        std::vector<Cluster> clusters = find_clusters(current, r);
        for (const Cluster& c : clusters) {
            if (!c.is_complete_component() && is_foldable(c)) {
                pick = &c;
                break;
            }
        }
        if (pick == nullptr) {
            break;
        }
        auto [folded, cert] = certified_fold(current, *pick);
        if (!cert.ok()) {
            throw InvariantViolation("fold at " + detail::set_string(cert.clique) +
                                     " failed its certificate: gain " +
                                     std::to_string(cert.gain()) + ", guaranteed " +
                                     std::to_string(cert.guaranteed_gain()));
        }
        out.trace.push_back(cert);
        current = std::move(folded);
    }
    VertexSet whole = complete_component_vertices(current, r);
    out.peeled = whole.size() / (r + 1);
    out.rest = induced_subgraph(current, current.vertices() - whole);
    out.triangles_after = static_cast<std::int64_t>(count_cliques_of_size(current, 3));
    if (out.triangles_after < out.triangles_before) {
        throw InvariantViolation("reduction lost triangles");
    }
    return out;
}

} // namespace cliquebound
