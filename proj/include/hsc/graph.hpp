#ifndef HSC_GRAPH_HPP
#define HSC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hsc {

// Undirected simple graph on n labeled vertices, dense adjacency rows.
// Symmetric adjacency, empty diagonal. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, std::vector<bool>(n, false)) {}

    // Builds from an edge list. Rejects out-of-range endpoints, self-loops
    // and duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[u][v]; }
    const std::vector<bool>& row(int u) const { return adj_[u]; }

    int degree(int u) const;
    long long edge_count() const;

    // Edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    // Throws verification_error unless adjacency is symmetric with an
    // empty diagonal. Every operation consuming a Graph calls this first.
    void validate() const;

    // Subgraph induced on the given vertices, relabeled 0..k-1 in the
    // order given.
    Graph induced(const std::vector<int>& vertices) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

    // Only used by builders; keeps the matrix symmetric.
    void add_edge(int u, int v) {
        adj_[u][v] = true;
        adj_[v][u] = true;
    }

private:
    int n_ = 0;
    std::vector<std::vector<bool>> adj_;
};

// Parameters (n, k, lambda, mu) of a strongly regular graph.
struct SrgParams {
    long long n = 0;
    long long k = 0;
    long long lambda = 0;
    long long mu = 0;

    bool operator==(const SrgParams&) const = default;

    // Bounds: 0 <= lambda <= k-1, 0 <= mu <= k, n > k.
    // Throws std::invalid_argument on violation.
    void validate() const;

    // k(k - lambda - 1) == (n - k - 1) mu, the two-way count of paths of
    // length 2 leaving a vertex's neighbourhood.
    bool counting_identity_holds() const;
};

// Returns (n,k,lambda,mu) iff g is strongly regular: regular of degree k,
// adjacent pairs have exactly lambda common neighbours, distinct
// non-adjacent pairs exactly mu. Complete and empty graphs report empty.
// Requires n >= 2.
std::optional<SrgParams> check_srg(const Graph& g);

// Maximal connected vertex sets; parts sorted by least element, vertices
// ascending inside each part.
std::vector<std::vector<int>> connected_components(const Graph& g);

Graph complement(const Graph& g);

// Edge counts inside common neighbourhoods: returns (alpha, beta) iff the
// count is the same alpha over all adjacent pairs and the same beta over
// all non-adjacent pairs. Requires check_srg(g) to be non-empty.
std::optional<std::pair<long long, long long>> four_vertex_condition(const Graph& g);

// Text format: first line "n m", then m lines "u v" with u < v, sorted
// lexicographically, one trailing newline per line and nothing after the
// last edge line.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);
void write_graph_file(const Graph& g, const std::string& path);
Graph read_graph_file(const std::string& path);

} // namespace hsc

#endif
