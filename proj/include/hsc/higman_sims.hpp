#ifndef HSC_HIGMAN_SIMS_HPP
#define HSC_HIGMAN_SIMS_HPP

#include <vector>

#include "hsc/graph.hpp"
#include "hsc/steiner.hpp"

namespace hsc {

// Vertex classes of the 100-vertex Higman-Sims graph: one star vertex,
// the 22 design points, the 77 design blocks, in that order.
struct HsVertexLabeling {
    int star = 0;
    std::vector<int> points; // 1..22, in design point order
    std::vector<int> blocks; // 23..99, in design block order

    int total() const { return 1 + (int)points.size() + (int)blocks.size(); }
};

struct HsGraph {
    Graph graph;
    HsVertexLabeling labeling;
};

// The star joins the 22 points; a point joins the star and the 21 blocks
// containing it; a block joins its 6 points and the 16 blocks disjoint
// from it. Requires a verified S(3,6,22); throws verification_error with
// the offending vertex if any degree differs from 22.
HsGraph build_hs_graph(const SteinerSystem& s);

// Checks strong regularity with parameters exactly (100, 22, 0, 6);
// lambda = 0 (triangle-freeness) is additionally verified pair by pair.
// Throws verification_error naming the first violation.
SrgParams verify_hs(const Graph& g);

} // namespace hsc

#endif
