#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "counting.hpp"
#include "graph.hpp"

namespace cliquebound {

/// Build sequence of a threshold graph on n vertices, n - 1 symbols.
///
/// Vertices are numbered 1..n backwards: vertex n is the seed K_1 and
/// symbol i (1-based) says whether vertex i arrived dominating (1) or
/// isolated (0). Graph vertex i - 1 stands for code vertex i.
class ThresholdCode {
public:
    ThresholdCode() = default;
    explicit ThresholdCode(std::vector<bool> bits) : bits_(std::move(bits)) {}

    /// Parses a string of '0'/'1' characters.
    static ThresholdCode parse(std::string_view text) {
        std::vector<bool> bits;
        for (char ch : text) {
            if (ch != '0' && ch != '1') {
                throw InputError("threshold code may only contain 0 and 1");
            }
            bits.push_back(ch == '1');
        }
        return ThresholdCode(std::move(bits));
    }

    /// Concatenates runs, e.g. runs({{1,4},{0,5}}) is 1^4 0^5.
    static ThresholdCode runs(std::initializer_list<std::pair<int, int>> parts) {
        std::vector<bool> bits;
        for (auto [symbol, count] : parts) {
            bits.insert(bits.end(), static_cast<std::size_t>(count), symbol != 0);
        }
        return ThresholdCode(std::move(bits));
    }

    int length() const { return static_cast<int>(bits_.size()); }
    int vertices() const { return length() + 1; }
    bool at(int position) const { return bits_.at(static_cast<std::size_t>(position - 1)); }
    int ones() const {
        int k = 0;
        for (bool b : bits_) {
            k += b ? 1 : 0;
        }
        return k;
    }
    int zeros() const { return length() - ones(); }
    const std::vector<bool>& bits() const { return bits_; }

    ThresholdCode then(const ThresholdCode& tail) const {
        std::vector<bool> bits = bits_;
        bits.insert(bits.end(), tail.bits_.begin(), tail.bits_.end());
        return ThresholdCode(std::move(bits));
    }

    std::string str() const {
        std::string out;
        for (bool b : bits_) {
            out.push_back(b ? '1' : '0');
        }
        return out;
    }

    bool operator==(const ThresholdCode&) const = default;

private:
    std::vector<bool> bits_;
};

/// Vertices i < j are adjacent exactly when symbol i is 1.
inline Graph threshold_from_code(const ThresholdCode& code) {
    const int n = code.vertices();
    Graph g(n);
    for (int i = 1; i < n; ++i) {
        if (code.at(i)) {
            for (int j = i + 1; j <= n; ++j) {
                g.add_edge(i - 1, j - 1);
            }
        }
    }
    return g;
}

namespace detail {

inline void require_lex_range(int n, std::int64_t m) {
    if (n < 0 || n > kMaxVertices) {
        throw InputError("vertex count out of range");
    }
    if (m < 0 || m > choose(n, 2)) {
        throw InputError("edge count " + std::to_string(m) + " outside [0, C(" + std::to_string(n) +
                         ",2)]");
    }
}

} // namespace detail

/// L(n, m): the first m pairs of [n] in lex order {1,2},{1,3},...,{2,3},...
inline Graph lex_graph(int n, std::int64_t m) {
    detail::require_lex_range(n, m);
    Graph g(n);
    std::int64_t left = m;
    for (Vertex u = 0; u < n && left > 0; ++u) {
        for (Vertex v = u + 1; v < n && left > 0; ++v, --left) {
            g.add_edge(u, v);
        }
    }
    return g;
}

/// Code of L(n, m) in the form 1^a 0^b 1^x 0^c with x ∈ {0, 1}; the
/// trailing 1 appears only when it has a positive number of right neighbours.
inline ThresholdCode lex_code(int n, std::int64_t m) {
    detail::require_lex_range(n, m);
    if (n < 1) {
        throw InputError("threshold codes need at least one vertex");
    }
    std::vector<bool> bits(static_cast<std::size_t>(n - 1), false);
    std::int64_t left = m;
    int full = 0;
    while (full < n - 1 && left >= n - 1 - full) {
        left -= n - 1 - full;
        bits[static_cast<std::size_t>(full)] = true;
        ++full;
    }
    if (left > 0) {
        // code vertex p has n - p right neighbours
        bits[static_cast<std::size_t>(n - left - 1)] = true;
    }
    return ThresholdCode(std::move(bits));
}

/// The four classes of V ∖ {x, y} by adjacency to x and y.
struct CompressionSplit {
    VertexSet x_only;
    VertexSet both;
    VertexSet y_only;
    VertexSet neither;
};

inline CompressionSplit compression_split(const Graph& g, Vertex x, Vertex y) {
    if (x < 0 || y < 0 || x >= g.order() || y >= g.order()) {
        throw InputError("compression vertices out of range");
    }
    if (x == y) {
        throw DomainError("compression needs two distinct vertices");
    }
    VertexSet rest = g.vertices() - VertexSet::single(x) - VertexSet::single(y);
    VertexSet nx = g.neighbors(x) & rest;
    VertexSet ny = g.neighbors(y) & rest;
    return {nx - ny, nx & ny, ny - nx, rest - nx - ny};
}

/// G_{x→y}: move x's private neighbours over to y.
inline Graph compress(const Graph& g, Vertex x, Vertex y) {
    CompressionSplit split = compression_split(g, x, y);
    Graph out = g;
    for (Vertex v : split.x_only) {
        out.remove_edge(x, v);
        out.add_edge(y, v);
    }
    return out;
}

namespace detail {

inline void require_star_matching_range(int n, std::int64_t m) {
    if (n < 0 || n > kMaxVertices || 2 * m < n || m >= n - 1) {
        throw InputError("star-plus-matching bound needs n/2 <= m < n-1 (n=" + std::to_string(n) +
                         ", m=" + std::to_string(m) + ")");
    }
}

} // namespace detail

/// K_{1,p} ∪ qK_2 with p = 2m - n + 1 and q = n - m - 1.
inline Graph star_matching_graph(int n, std::int64_t m) {
    detail::require_star_matching_range(n, m);
    const int p = static_cast<int>(2 * m - n + 1);
    const int q = static_cast<int>(n - m - 1);
    return disjoint_union(star_graph(p), copies(q, complete_graph(2)));
}

/// C(2m - n + 1, 2): the largest μ among graphs with n vertices, m edges, δ >= 1.
inline std::int64_t mu_bound_min_degree_one(int n, std::int64_t m) {
    detail::require_star_matching_range(n, m);
    return choose(2 * m - n + 1, 2);
}

} // namespace cliquebound
