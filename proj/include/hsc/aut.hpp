#ifndef HSC_AUT_HPP
#define HSC_AUT_HPP

#include <vector>

#include "hsc/graph.hpp"
#include "hsc/perm.hpp"

namespace hsc {

// An ordered partition of the vertices: color[v] in [0, classes), every
// color nonempty.
struct Coloring {
    std::vector<int> color;
    int classes = 0;

    static Coloring monochrome(int n);
    // Throws std::invalid_argument when colors are not contiguous 0..c-1.
    void validate() const;
    // cells()[j] = vertices of color j, ascending.
    std::vector<std::vector<int>> cells() const;
    std::vector<long long> class_sizes() const;
};

// Coarsest equitable refinement of c: within a class, every vertex has the
// same number of neighbors in every class. Never coarsens; idempotent.
// Class renumbering is canonical: by (old color, neighbor-count vector)
// lexicographically, so isomorphic inputs refine to identical size
// sequences.
Coloring refine(const Graph& g, const Coloring& c);

// Splits v into a singleton placed at the front of its class. Colorings
// where v is already a singleton are returned unchanged.
Coloring individualize(const Coloring& c, int v);

// Full automorphism group by individualization-refinement along a first
// path, collecting one generator per new base-orbit point, bottom-up.
// Verified two ways: every generator passes an exhaustive edge check, and
// an independent search on the reverse-relabeled graph must reach the same
// order (verification_error otherwise). Deterministic: identical
// generators run-to-run. Requires 1 <= n <= 200.
//
// node_budget caps the number of refinement nodes across both searches;
// exhaustion throws budget_error, which is distinct from a trivial group
// (order 1 is a result, not an error).
PermGroup automorphism_group(const Graph& g, long long node_budget = 10'000'000);

// Single vertex orbit under the full automorphism group.
bool is_vertex_transitive(const Graph& g, long long node_budget = 10'000'000);

} // namespace hsc

#endif
