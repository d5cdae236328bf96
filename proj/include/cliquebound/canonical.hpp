#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace cliquebound {

/// Isomorphism-invariant key: equal keys exactly for isomorphic graphs.
///
/// The first byte is n; the rest is the column-major upper triangle of the
/// adjacency matrix under the canonical labelling, packed MSB first.
using CanonicalKey = std::string;

namespace detail {

/// Colour refinement seeded by degree. Colours are ranks of signatures, so
/// the resulting ordered partition does not depend on the input labelling.
inline std::vector<int> refine_colors(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n);
    for (Vertex v = 0; v < n; ++v) {
        color[v] = g.degree(v);
    }
    int classes = -1;
    for (;;) {
        std::vector<std::pair<std::vector<int>, Vertex>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int>& s = sig[v].first;
            s.push_back(color[v]);
            std::vector<int> around;
            for (Vertex w : g.neighbors(v)) {
                around.push_back(color[w]);
            }
            std::sort(around.begin(), around.end());
            s.insert(s.end(), around.begin(), around.end());
            sig[v].second = v;
        }
        std::sort(sig.begin(), sig.end());
        std::vector<int> next(n);
        int rank = -1;
        for (int i = 0; i < n; ++i) {
            if (i == 0 || sig[i].first != sig[i - 1].first) {
                ++rank;
            }
            next[sig[i].second] = rank;
        }
        int now = rank + 1;
        color = std::move(next);
        if (now == classes) {
            return color;
        }
        classes = now;
    }
}

/// Finds the labelling whose column sequence is lexicographically greatest.
///
/// Position j may only hold a vertex of the j-th colour in refinement order.
/// Column j records adjacency of the vertex at position j to positions
/// 0..j-1 with position 0 as the most significant bit. Branches whose column
/// falls below the best sibling are cut. Two leaves with equal columns give
/// an automorphism; a candidate is skipped when an automorphism fixing the
/// current prefix maps an already explored candidate onto it. Twins are
/// skipped the same way without waiting for a leaf.
class CanonicalSearch {
public:
    static constexpr std::size_t kMaxAutomorphisms = 4096;

    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
        color_ = refine_colors(g);
        std::vector<int> sorted = color_;
        std::sort(sorted.begin(), sorted.end());
        slot_color_ = std::move(sorted);
        placed_.assign(n_, -1);
        cols_.assign(n_, 0);
        best_cols_.assign(n_, 0);
        best_perm_.assign(n_, 0);
        best_placed_.assign(n_, 0);
    }

    /// perm[v] = canonical position of vertex v.
    std::vector<Vertex> run() {
        if (n_ > 0) {
            descend(0, VertexSet());
        }
        return best_perm_;
    }

    const std::vector<std::uint64_t>& columns() const { return best_cols_; }

private:
    std::uint64_t column_for(Vertex v, int j) const {
        std::uint64_t col = 0;
        for (int i = 0; i < j; ++i) {
            col = (col << 1) | (g_.adjacent(placed_[i], v) ? 1U : 0U);
        }
        return col;
    }

    bool twins(Vertex u, Vertex v) const {
        VertexSet uv = VertexSet::single(u) | VertexSet::single(v);
        return (g_.neighbors(u) - uv) == (g_.neighbors(v) - uv);
    }

    // -1 / 0 / +1 comparing the current prefix plus `col` at j against the best.
    int compare_prefix(int j, std::uint64_t col) const {
        for (int i = 0; i < j; ++i) {
            if (cols_[i] != best_cols_[i]) {
                return cols_[i] < best_cols_[i] ? -1 : 1;
            }
        }
        if (col != best_cols_[j]) {
            return col < best_cols_[j] ? -1 : 1;
        }
        return 0;
    }

    void record_automorphism() {
        if (automorphisms_.size() >= kMaxAutomorphisms) {
            return;
        }
        std::vector<Vertex> gamma(n_);
        bool identity = true;
        for (int i = 0; i < n_; ++i) {
            gamma[placed_[i]] = best_placed_[i];
            identity = identity && placed_[i] == best_placed_[i];
        }
        if (!identity) {
            automorphisms_.push_back(std::move(gamma));
        }
    }

    // Orbit representatives under the stored automorphisms that fix positions 0..j-1.
    std::vector<Vertex> prefix_orbits(int j) const {
        std::vector<Vertex> parent(n_);
        for (Vertex v = 0; v < n_; ++v) {
            parent[v] = v;
        }
        auto find = [&](Vertex v) {
            while (parent[v] != v) {
                v = parent[v] = parent[parent[v]];
            }
            return v;
        };
        for (const std::vector<Vertex>& gamma : automorphisms_) {
            bool fixes = true;
            for (int i = 0; i < j && fixes; ++i) {
                fixes = gamma[placed_[i]] == placed_[i];
            }
            if (!fixes) {
                continue;
            }
            for (Vertex v = 0; v < n_; ++v) {
                Vertex a = find(v);
                Vertex b = find(gamma[v]);
                if (a != b) {
                    parent[std::max(a, b)] = std::min(a, b);
                }
            }
        }
        for (Vertex v = 0; v < n_; ++v) {
            parent[v] = find(v);
        }
        return parent;
    }

    void descend(int j, VertexSet used) {
        if (j == n_) {
            int cmp = have_best_ ? compare_prefix(n_ - 1, cols_[n_ - 1]) : 1;
            if (cmp > 0) {
                have_best_ = true;
                best_cols_ = cols_;
                best_placed_ = placed_;
                for (int i = 0; i < n_; ++i) {
                    best_perm_[placed_[i]] = i;
                }
            } else if (cmp == 0) {
                record_automorphism();
            }
            return;
        }
        std::vector<std::pair<Vertex, std::uint64_t>> cand;
        std::uint64_t top = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (!used.contains(v) && color_[v] == slot_color_[j]) {
                std::uint64_t c = column_for(v, j);
                cand.emplace_back(v, c);
                top = std::max(top, c);
            }
        }
        if (have_best_ && compare_prefix(j, top) < 0) {
            return;
        }
        std::vector<Vertex> tried;
        std::vector<Vertex> orbit;       // representatives, prefix-fixing automorphisms
        std::size_t orbit_from = 0;      // automorphisms_.size() when `orbit` was built
        for (auto [v, c] : cand) {
            if (c != top) {
                continue;
            }
            bool covered = false;
            if (!tried.empty() && automorphisms_.size() > orbit_from) {
                orbit = prefix_orbits(j);
                orbit_from = automorphisms_.size();
            }
            for (Vertex u : tried) {
                if (twins(u, v) || (!orbit.empty() && orbit[u] == orbit[v])) {
                    covered = true;
                    break;
                }
            }
            if (covered) {
                continue;
            }
            tried.push_back(v);
            placed_[j] = v;
            cols_[j] = c;
            descend(j + 1, used | VertexSet::single(v));
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> color_;
    std::vector<int> slot_color_;
    std::vector<Vertex> placed_;
    std::vector<std::uint64_t> cols_;
    std::vector<std::uint64_t> best_cols_;
    std::vector<Vertex> best_perm_;
    std::vector<Vertex> best_placed_;
    std::vector<std::vector<Vertex>> automorphisms_;
    bool have_best_ = false;
};

inline CanonicalKey pack_columns(int n, const std::vector<std::uint64_t>& cols) {
    CanonicalKey key(1, static_cast<char>(n));
    unsigned char acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = static_cast<unsigned char>((acc << 1) | ((cols[j] >> (j - 1 - i)) & 1U));
            if (++filled == 8) {
                key.push_back(static_cast<char>(acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled != 0) {
        key.push_back(static_cast<char>(acc << (8 - filled)));
    }
    return key;
}

} // namespace detail

/// perm[v] is the position of v in the canonical labelling.
inline std::vector<Vertex> canonical_labeling(const Graph& g) {
    return detail::CanonicalSearch(g).run();
}

inline CanonicalKey canonical_form(const Graph& g) {
    detail::CanonicalSearch search(g);
    search.run();
    return detail::pack_columns(g.order(), search.columns());
}

/// The canonically relabelled copy of `g`, with its key.
inline std::pair<Graph, CanonicalKey> canonical_graph(const Graph& g) {
    detail::CanonicalSearch search(g);
    std::vector<Vertex> perm = search.run();
    return {relabel(g, perm), detail::pack_columns(g.order(), search.columns())};
}

/// Lowercase hex rendering of a key, for reports.
inline std::string key_to_hex(const CanonicalKey& key) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(key.size() * 2);
    for (char ch : key) {
        auto b = static_cast<unsigned char>(ch);
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

} // namespace cliquebound
