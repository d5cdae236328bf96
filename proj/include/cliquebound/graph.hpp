#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace cliquebound {

inline constexpr int kMaxVertices = 64;

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices {0, ..., n-1}, n <= 64.
///
/// Each vertex owns one adjacency word, so neighborhood intersections and
/// degree queries are single instructions. Values are immutable in spirit:
/// every transformation in the library returns a new Graph.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0) {
            throw InputError("vertex count must be non-negative");
        }
        if (n > kMaxVertices) {
            throw CapacityError("graph has " + std::to_string(n) + " vertices; capacity is " +
                                std::to_string(kMaxVertices));
        }
    }

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::first(n_); }
    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    /// N[v]
    VertexSet closed_neighbors(Vertex v) const { return adj_[v] | VertexSet::single(v); }
    int degree(Vertex v) const { return adj_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

    std::int64_t size() const {
        std::int64_t twice = 0;
        for (Vertex v = 0; v < n_; ++v) {
            twice += adj_[v].size();
        }
        return twice / 2;
    }

    int max_degree() const {
        int best = 0;
        for (Vertex v = 0; v < n_; ++v) {
            best = std::max(best, degree(v));
        }
        return best;
    }

    int min_degree() const {
        if (n_ == 0) {
            return 0;
        }
        int best = kMaxVertices;
        for (Vertex v = 0; v < n_; ++v) {
            best = std::min(best, degree(v));
        }
        return best;
    }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < n_; ++u) {
            for (Vertex v : adj_[u] - VertexSet::first(u + 1)) {
                out.emplace_back(u, v);
            }
        }
        return out;
    }

    void add_edge(Vertex u, Vertex v) {
        check_pair(u, v);
        adj_[u].insert(v);
        adj_[v].insert(u);
    }

    void remove_edge(Vertex u, Vertex v) {
        check_pair(u, v);
        adj_[u].erase(v);
        adj_[v].erase(u);
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
    }

private:
    void check_pair(Vertex u, Vertex v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) {
            throw InputError("vertex pair (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for n=" + std::to_string(n_));
        }
        if (u == v) {
            throw InputError("self-loop at vertex " + std::to_string(u));
        }
    }

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

/// Builds the simple graph with the given edges; repeated pairs collapse.
inline Graph graph_from_edge_list(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

inline Graph graph_from_edge_list(int n, std::initializer_list<Edge> edges) {
    return graph_from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph complement(const Graph& g) {
    Graph out(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) {
                out.add_edge(u, v);
            }
        }
    }
    return out;
}

/// The subgraph induced on `keep`, relabelled 0..|keep|-1 in increasing order.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
    std::vector<Vertex> order = keep.to_vector();
    Graph out(static_cast<int>(order.size()));
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            if (g.adjacent(order[i], order[j])) {
                out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return out;
}

/// Vertex v of `g` becomes vertex perm[v] of the result.
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    Graph out(g.order());
    for (auto [u, v] : g.edges()) {
        out.add_edge(perm[u], perm[v]);
    }
    return out;
}

/// Connected components, each as a vertex set, ordered by least vertex.
inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp = VertexSet::single(unseen.least());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) {
                next |= g.neighbors(v);
            }
            frontier = next - comp;
            comp |= frontier;
        }
        out.push_back(comp);
        unseen -= comp;
    }
    return out;
}

inline bool is_clique(const Graph& g, VertexSet s) {
    for (Vertex v : s) {
        if (!(s - VertexSet::single(v)).is_subset_of(g.neighbors(v))) {
            return false;
        }
    }
    return true;
}

// ---- standard constructions -------------------------------------------------

inline Graph complete_graph(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph cycle_graph(int n) {
    if (n < 3) {
        throw InputError("a cycle needs at least 3 vertices");
    }
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) {
        g.add_edge(v, (v + 1) % n);
    }
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

/// K_{p,q} with parts {0..p-1} and {p..p+q-1}.
inline Graph complete_bipartite(int p, int q) {
    Graph g(p + q);
    for (Vertex u = 0; u < p; ++u) {
        for (Vertex v = p; v < p + q; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

/// K_{1,p}, centre 0.
inline Graph star_graph(int p) { return complete_bipartite(1, p); }

/// G ∪ H; the vertices of H are shifted up by n(G).
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.order() + h.order());
    for (auto [u, v] : g.edges()) {
        out.add_edge(u, v);
    }
    for (auto [u, v] : h.edges()) {
        out.add_edge(u + g.order(), v + g.order());
    }
    return out;
}

/// G ∨ H: disjoint union plus every edge between the two sides.
inline Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = 0; v < h.order(); ++v) {
            out.add_edge(u, v + g.order());
        }
    }
    return out;
}

/// k disjoint copies of G.
inline Graph copies(int k, const Graph& g) {
    Graph out(0);
    for (int i = 0; i < k; ++i) {
        out = disjoint_union(out, g);
    }
    return out;
}

/// a·K_{r+1} ∪ K_b, the conjectured extremal graph for n = a(r+1)+b.
inline Graph extremal_graph(int n, int r) {
    if (r < 0 || n < 0) {
        throw InputError("n and r must be non-negative");
    }
    return disjoint_union(copies(n / (r + 1), complete_graph(r + 1)), complete_graph(n % (r + 1)));
}

} // namespace cliquebound
