#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace cliquebound {

/// Largest n accepted when a degree bound prunes the search.
inline constexpr int kExhaustiveBoundedCap = 10;
/// Largest n accepted with no effective degree bound.
inline constexpr int kExhaustiveFreeCap = 7;

struct SearchSpace {
    int n = 0;
    std::optional<int> max_degree;
    std::optional<int> min_degree;
    std::optional<std::int64_t> edge_count;

    bool degree_bounded() const { return max_degree && *max_degree < n - 1; }
    int degree_cap() const { return max_degree ? std::min(*max_degree, std::max(n - 1, 0)) : std::max(n - 1, 0); }

    bool admits(const Graph& g) const {
        return g.order() == n && g.max_degree() <= degree_cap() &&
               (!min_degree || g.min_degree() >= *min_degree) &&
               (!edge_count || g.size() == *edge_count);
    }
};

/// One isomorphism class, canonically labelled.
struct GraphClass {
    Graph graph;
    CanonicalKey key;
};

inline int default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace detail {

inline void validate_space(const SearchSpace& space) {
    if (space.n < 0) {
        throw InputError("n must be non-negative");
    }
    if (space.max_degree && *space.max_degree < 0) {
        throw InputError("maximum degree must be non-negative");
    }
    if (space.min_degree && *space.min_degree < 0) {
        throw InputError("minimum degree must be non-negative");
    }
    if (space.edge_count && *space.edge_count < 0) {
        throw InputError("edge count must be non-negative");
    }
    int cap = space.degree_bounded() ? kExhaustiveBoundedCap : kExhaustiveFreeCap;
    if (space.n > cap) {
        throw InputError("exhaustive enumeration supports n <= " + std::to_string(cap) +
                         (space.degree_bounded() ? " with a degree bound" : " without a degree bound") +
                         "; got n=" + std::to_string(space.n));
    }
}

using ClassMap = std::unordered_map<CanonicalKey, Graph>;

/// Every one-edge extension of parents[begin, end) that respects the cap.
inline void extend_shard(const std::vector<GraphClass>& parents, std::size_t begin, std::size_t end,
                         int cap, ClassMap& out) {
    for (std::size_t i = begin; i < end; ++i) {
        const Graph& g = parents[i].graph;
        const int n = g.order();
        for (Vertex u = 0; u < n; ++u) {
            if (g.degree(u) >= cap) {
                continue;
            }
            for (Vertex v = u + 1; v < n; ++v) {
                if (g.degree(v) >= cap || g.adjacent(u, v)) {
                    continue;
                }
                Graph child = g;
                child.add_edge(u, v);
                auto [canon, key] = canonical_graph(child);
                out.try_emplace(std::move(key), canon);
            }
        }
    }
}

} // namespace detail

/// One canonically labelled representative per isomorphism class in `space`,
/// ordered by edge count and then by key.
///
/// Classes are grown one edge at a time from E_n; a degree bound survives
/// edge deletion, so every admissible graph is reached. Each level is
/// split into contiguous shards of parents, one per worker, and the
/// shards' results are merged and sorted, so the output does not depend
/// on `workers`.
inline std::vector<GraphClass> enumerate_graphs(const SearchSpace& space, int workers = 1) {
    detail::validate_space(space);
    workers = std::max(workers, 1);
    const int n = space.n;
    const int cap = space.degree_cap();
    std::int64_t top = static_cast<std::int64_t>(n) * cap / 2;
    if (space.edge_count) {
        top = std::min(top, *space.edge_count);
    }

    std::vector<GraphClass> out;
    std::vector<GraphClass> level;
    {
        auto [g, key] = canonical_graph(Graph(n));
        level.push_back({g, key});
    }
    for (std::int64_t m = 0;; ++m) {
        for (const GraphClass& c : level) {
            if (space.admits(c.graph)) {
                out.push_back(c);
            }
        }
        if (m >= top || level.empty()) {
            break;
        }
        const std::size_t shards = std::min<std::size_t>(static_cast<std::size_t>(workers), level.size());
        std::vector<detail::ClassMap> found(shards);
        auto bounds = [&](std::size_t s) { return level.size() * s / shards; };
        if (shards == 1) {
            detail::extend_shard(level, 0, level.size(), cap, found[0]);
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t s = 0; s < shards; ++s) {
                pool.emplace_back([&, s] { detail::extend_shard(level, bounds(s), bounds(s + 1), cap, found[s]); });
            }
        }
        detail::ClassMap merged = std::move(found[0]);
        for (std::size_t s = 1; s < shards; ++s) {
            merged.merge(found[s]);
        }
        std::vector<GraphClass> next;
        next.reserve(merged.size());
        for (auto& [key, g] : merged) {
            next.push_back({g, key});
        }
        std::sort(next.begin(), next.end(),
                  [](const GraphClass& a, const GraphClass& b) { return a.key < b.key; });
        level = std::move(next);
    }
    return out;
}

/// Just the graphs.
inline std::vector<Graph> enumerate_graph_list(const SearchSpace& space, int workers = 1) {
    std::vector<Graph> out;
    for (GraphClass& c : enumerate_graphs(space, workers)) {
        out.push_back(std::move(c.graph));
    }
    return out;
}

} // namespace cliquebound
