#pragma once

#include <string>
#include <string_view>

#include "error.hpp"
#include "graph.hpp"

namespace cliquebound {

// graph6: printable bytes 63..126, each carrying six bits. The header N(n)
// is one byte for n <= 62 and '~' plus three bytes for 63 <= n <= 258047.
// The body lists x(i,j) for j = 1..n-1, i = 0..j-1, zero padded to a
// multiple of six.

inline std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled != 0) {
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    }
    return out;
}

/// Decodes one graph6 line. A trailing newline and the optional
/// ">>graph6<<" prefix are accepted; anything else that is not canonical
/// graph6 (bad bytes, wrong length, non-zero padding) is rejected.
inline Graph read_graph6(std::string_view line) {
    constexpr std::string_view kPrefix = ">>graph6<<";
    std::size_t pos = 0;
    if (line.substr(0, kPrefix.size()) == kPrefix) {
        pos = kPrefix.size();
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
        line.remove_suffix(1);
    }

    auto sextet = [&](std::size_t at) -> int {
        if (at >= line.size()) {
            throw ParseError("truncated graph6 data", at);
        }
        int c = static_cast<unsigned char>(line[at]);
        if (c < 63 || c > 126) {
            throw ParseError("byte outside graph6 range", at);
        }
        return c - 63;
    };

    if (pos >= line.size()) {
        throw ParseError("missing graph6 header", pos);
    }
    long n = 0;
    if (line[pos] != '~') {
        n = sextet(pos);
        pos += 1;
    } else {
        if (pos + 1 < line.size() && line[pos + 1] == '~') {
            throw ParseError("eight-byte graph6 header exceeds capacity", pos);
        }
        n = (static_cast<long>(sextet(pos + 1)) << 12) | (sextet(pos + 2) << 6) | sextet(pos + 3);
        if (n <= 62) {
            throw ParseError("long graph6 header used for n <= 62", pos);
        }
        pos += 4;
    }
    if (n > kMaxVertices) {
        throw CapacityError("graph6 header declares " + std::to_string(n) +
                            " vertices; capacity is " + std::to_string(kMaxVertices));
    }

    Graph g(static_cast<int>(n));
    const long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos < body) {
        throw ParseError("truncated graph6 data", line.size());
    }
    if (line.size() - pos > body) {
        throw ParseError("trailing bytes after graph6 data", pos + body);
    }
    long k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int chunk = sextet(pos + static_cast<std::size_t>(k / 6));
            if ((chunk >> (5 - k % 6)) & 1) {
                g.add_edge(i, j);
            }
        }
    }
    if (k % 6 != 0) {
        int chunk = sextet(pos + static_cast<std::size_t>(k / 6));
        if ((chunk & ((1 << (6 - k % 6)) - 1)) != 0) {
            throw ParseError("non-zero graph6 padding bits", pos + static_cast<std::size_t>(k / 6));
        }
    }
    return g;
}

} // namespace cliquebound
