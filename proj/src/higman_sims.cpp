#include "hsc/higman_sims.hpp"

#include <algorithm>
#include <string>

#include "hsc/errors.hpp"

namespace hsc {

HsGraph build_hs_graph(const SteinerSystem& s) {
    const SteinerVerification check = verify_steiner(s);
    if (!check.ok())
        throw verification_error("build_hs_graph: input design failed verification: " +
                                 (check.failures.empty() ? "unknown" : check.failures.front()));

    HsGraph hs;
    const int n = 1 + s.v + s.block_count(); // 1 + 22 + 77
    hs.graph = Graph(n);
    hs.labeling.star = 0;
    for (int p = 0; p < s.v; ++p) hs.labeling.points.push_back(1 + p);
    for (int b = 0; b < s.block_count(); ++b) hs.labeling.blocks.push_back(1 + s.v + b);

    auto point_vertex = [&](int p) { return 1 + p; };
    auto block_vertex = [&](int b) { return 1 + s.v + b; };

    for (int p = 0; p < s.v; ++p) hs.graph.add_edge(hs.labeling.star, point_vertex(p));
    for (int b = 0; b < s.block_count(); ++b)
        for (int p : s.blocks[b]) hs.graph.add_edge(point_vertex(p), block_vertex(b));
    for (int b1 = 0; b1 < s.block_count(); ++b1)
        for (int b2 = b1 + 1; b2 < s.block_count(); ++b2) {
            bool disjoint = true;
            for (int p : s.blocks[b1])
                if (std::find(s.blocks[b2].begin(), s.blocks[b2].end(), p) != s.blocks[b2].end()) {
                    disjoint = false;
                    break;
                }
            if (disjoint) hs.graph.add_edge(block_vertex(b1), block_vertex(b2));
        }

    for (int v = 0; v < n; ++v)
        if (hs.graph.degree(v) != 22)
            throw verification_error("higman-sims build: vertex " + std::to_string(v) +
                                     " has degree " + std::to_string(hs.graph.degree(v)) +
                                     ", expected 22");
    return hs;
}

SrgParams verify_hs(const Graph& g) {
    // Triangle-freeness stated explicitly: no adjacent pair may have a
    // common neighbour.
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (!g.adjacent(u, v)) continue;
            for (int w = 0; w < g.n(); ++w)
                if (g.adjacent(u, w) && g.adjacent(v, w))
                    throw verification_error("higman-sims verify: triangle on vertices " +
                                             std::to_string(u) + "," + std::to_string(v) + "," +
                                             std::to_string(w));
        }

    const auto params = check_srg(g);
    if (!params)
        throw verification_error("higman-sims verify: graph is not strongly regular");
    const SrgParams expected{100, 22, 0, 6};
    if (*params != expected)
        throw verification_error("higman-sims verify: parameters (" + std::to_string(params->n) +
                                 "," + std::to_string(params->k) + "," +
                                 std::to_string(params->lambda) + "," + std::to_string(params->mu) +
                                 "), expected (100,22,0,6)");
    return *params;
}

} // namespace hsc
