#pragma once

// Identity checks shared by the unit suites and the acceptance run.

#include <cstdint>
#include <string>
#include <vector>

#include <cliquebound/counting.hpp>
#include <cliquebound/graph.hpp>

namespace props {

using namespace cliquebound;

/// The four census identities; returns a description of each one that fails.
inline std::vector<std::string> census_identity_failures(const Graph& g) {
    std::vector<std::string> out;
    const std::int64_t n = g.order();
    const std::int64_t e = g.size();
    TripleCensus c = triple_census(g);
    if (c.triangles < 0 || c.cherries < 0 || c.one_edge < 0 || c.empty < 0) {
        out.push_back("negative count");
    }
    if (c.total() != choose(n, 3)) {
        out.push_back("sum != C(n,3)");
    }
    if (3 * c.triangles + 2 * c.cherries + c.one_edge != e * (n - 2) && n >= 2) {
        out.push_back("edge incidences != e(n-2)");
    }
    std::int64_t incident_pairs = 0;
    for (Vertex v = 0; v < n; ++v) {
        incident_pairs += choose(g.degree(v), 2);
    }
    if (incident_pairs != c.cherries + 3 * c.triangles) {
        out.push_back("sum C(d,2) != cherries + 3 triangles");
    }
    std::int64_t mixed = 0;
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w = v + 1; w < n; ++w) {
            if (!g.adjacent(v, w)) {
                mixed += g.degree(v) + g.degree(w);
            }
        }
    }
    if (mixed != 2 * c.cherries + 2 * c.one_edge) {
        out.push_back("sum over non-edges of d(v)+d(w) != 2 cherries + 2 one-edge");
    }
    return out;
}

} // namespace props
