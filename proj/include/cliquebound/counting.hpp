#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "graph.hpp"

namespace cliquebound {

/// C(n, k), exact whenever the result fits; zero when k < 0 or k > n.
constexpr std::int64_t choose(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    // i divides out·(n-k+i); splitting by gcd keeps every step <= the result
    std::int64_t out = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        std::int64_t g = std::gcd(out, i);
        out = (out / g) * ((n - k + i) / (i / g));
    }
    return out;
}

/// counts[t] = number of t-cliques for t = 1..n. The empty clique is not counted.
class CliqueCountVector {
public:
    CliqueCountVector() : counts_(1, 0) {}
    explicit CliqueCountVector(int n) : counts_(static_cast<std::size_t>(n) + 1, 0) {}

    std::uint64_t of_size(int t) const {
        return t >= 1 && t < static_cast<int>(counts_.size()) ? counts_[t] : 0;
    }
    std::uint64_t total() const {
        std::uint64_t sum = 0;
        for (std::size_t t = 1; t < counts_.size(); ++t) {
            sum += counts_[t];
        }
        return sum;
    }
    int clique_number() const {
        int w = 0;
        for (std::size_t t = 1; t < counts_.size(); ++t) {
            if (counts_[t] != 0) {
                w = static_cast<int>(t);
            }
        }
        return w;
    }
    int max_size() const { return static_cast<int>(counts_.size()) - 1; }

    void add(int t, std::uint64_t c) { counts_[t] += c; }

private:
    std::vector<std::uint64_t> counts_;
};

namespace detail {

/// Order vertices by repeatedly removing one of minimum remaining degree.
inline std::vector<Vertex> degeneracy_order(const Graph& g) {
    std::vector<Vertex> order;
    order.reserve(g.order());
    VertexSet left = g.vertices();
    while (!left.empty()) {
        Vertex pick = left.least();
        int best = kMaxVertices + 1;
        for (Vertex v : left) {
            int d = (g.neighbors(v) & left).size();
            if (d < best) {
                best = d;
                pick = v;
            }
        }
        order.push_back(pick);
        left.erase(pick);
    }
    return order;
}

struct CliqueWalker {
    const Graph& g;
    CliqueCountVector& counts;
    int limit;  // deepest clique size worth visiting

    // `size` vertices are already chosen; every vertex in cand extends them.
    void walk(VertexSet cand, int size) {
        if (size >= limit || cand.empty()) {
            return;
        }
        if (is_clique(g, cand)) {
            int k = cand.size();
            for (int j = 1; j <= k && size + j <= limit; ++j) {
                counts.add(size + j, static_cast<std::uint64_t>(choose(k, j)));
            }
            return;
        }
        while (!cand.empty()) {
            Vertex v = cand.least();
            cand.erase(v);
            counts.add(size + 1, 1);
            walk(cand & g.neighbors(v), size + 1);
        }
    }
};

inline CliqueCountVector count_cliques_up_to(const Graph& g, int limit) {
    CliqueCountVector counts(g.order());
    std::vector<Vertex> order = degeneracy_order(g);
    std::vector<int> rank(g.order());
    for (std::size_t i = 0; i < order.size(); ++i) {
        rank[order[i]] = static_cast<int>(i);
    }
    CliqueWalker walker{g, counts, limit};
    for (Vertex v : order) {
        VertexSet later;
        for (Vertex w : g.neighbors(v)) {
            if (rank[w] > rank[v]) {
                later.insert(w);
            }
        }
        if (limit >= 1) {
            counts.add(1, 1);
        }
        walker.walk(later, 1);
    }
    return counts;
}

} // namespace detail

/// κ_t for every t at once.
inline CliqueCountVector clique_counts(const Graph& g) {
    return detail::count_cliques_up_to(g, g.order());
}

/// κ_t(G): the number of t-subsets inducing complete graphs.
inline std::uint64_t count_cliques_of_size(const Graph& g, int t) {
    if (t < 1) {
        throw InputError("clique size must be at least 1");
    }
    if (t > g.order()) {
        return 0;
    }
    return detail::count_cliques_up_to(g, t).of_size(t);
}

/// κ(G) = Σ_{t>=1} κ_t(G).
inline std::uint64_t count_all_cliques(const Graph& g) { return clique_counts(g).total(); }

/// w(xy) = |N(x) ∩ N(y)|, the number of triangles through the edge xy.
inline int edge_weight(const Graph& g, Vertex x, Vertex y) {
    if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || !g.adjacent(x, y)) {
        throw DomainError("edge weight requested for non-edge (" + std::to_string(x) + "," +
                          std::to_string(y) + ")");
    }
    return (g.neighbors(x) & g.neighbors(y)).size();
}

/// r - 2 - w(xy). Equals -1 exactly on tight edges and is non-negative otherwise.
inline int edge_benefit(const Graph& g, Vertex x, Vertex y, int r) {
    if (g.max_degree() > r) {
        throw DomainError("maximum degree " + std::to_string(g.max_degree()) + " exceeds r=" +
                          std::to_string(r));
    }
    return r - 2 - edge_weight(g, x, y);
}

/// Counts of induced 3-vertex subgraphs by number of edges.
struct TripleCensus {
    std::int64_t triangles = 0;
    std::int64_t cherries = 0;
    std::int64_t one_edge = 0;
    std::int64_t empty = 0;

    std::int64_t total() const { return triangles + cherries + one_edge + empty; }
    bool operator==(const TripleCensus&) const = default;
};

/// Direct count over all triples: each pair i<j classifies the vertices k>j
/// by how many of i, j they see.
inline TripleCensus triple_census(const Graph& g) {
    TripleCensus c;
    const int n = g.order();
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            VertexSet above = g.vertices() - VertexSet::first(j + 1);
            int both = (g.neighbors(i) & g.neighbors(j) & above).size();
            int one = ((g.neighbors(i) ^ g.neighbors(j)) & above).size();
            int none = above.size() - both - one;
            std::int64_t by_edges[4] = {0, 0, 0, 0};
            int base = g.adjacent(i, j) ? 1 : 0;
            by_edges[base + 2] += both;
            by_edges[base + 1] += one;
            by_edges[base] += none;
            c.empty += by_edges[0];
            c.one_edge += by_edges[1];
            c.cherries += by_edges[2];
            c.triangles += by_edges[3];
        }
    }
    return c;
}

/// μ(G) = 2·#triangles + #cherries.
inline std::int64_t mu(const Graph& g) {
    TripleCensus c = triple_census(g);
    return 2 * c.triangles + c.cherries;
}

} // namespace cliquebound
