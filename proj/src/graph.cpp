#include "hsc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hsc/errors.hpp"

namespace hsc {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (g.adj_[u][v])
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        g.add_edge(u, v);
    }
    return g;
}

int Graph::degree(int u) const {
    int d = 0;
    for (int v = 0; v < n_; ++v)
        if (adj_[u][v]) ++d;
    return d;
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int u = 0; u < n_; ++u) total += degree(u);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adj_[u][v]) out.emplace_back(u, v);
    return out;
}

void Graph::validate() const {
    for (int u = 0; u < n_; ++u) {
        if ((int)adj_[u].size() != n_) throw verification_error("ragged adjacency matrix");
        if (adj_[u][u]) throw verification_error("loop on vertex " + std::to_string(u));
        for (int v = u + 1; v < n_; ++v)
            if (adj_[u][v] != adj_[v][u])
                throw verification_error("asymmetric adjacency at (" + std::to_string(u) + "," +
                                         std::to_string(v) + ")");
    }
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    Graph g((int)vertices.size());
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (adj_[vertices[i]][vertices[j]]) g.add_edge((int)i, (int)j);
    return g;
}

void SrgParams::validate() const {
    if (n <= k) throw std::invalid_argument("srg params: need n > k");
    if (k < 1) throw std::invalid_argument("srg params: need k >= 1");
    if (lambda < 0 || lambda > k - 1) throw std::invalid_argument("srg params: need 0 <= lambda <= k-1");
    if (mu < 0 || mu > k) throw std::invalid_argument("srg params: need 0 <= mu <= k");
}

bool SrgParams::counting_identity_holds() const {
    return k * (k - lambda - 1) == (n - k - 1) * mu;
}

namespace {

int common_neighbours(const Graph& g, int u, int v) {
    int c = 0;
    for (int w = 0; w < g.n(); ++w)
        if (g.adjacent(u, w) && g.adjacent(v, w)) ++c;
    return c;
}

} // namespace

std::optional<SrgParams> check_srg(const Graph& g) {
    g.validate();
    const int n = g.n();
    if (n < 2) throw std::invalid_argument("check_srg: need n >= 2");

    const int k = g.degree(0);
    for (int u = 1; u < n; ++u)
        if (g.degree(u) != k) return std::nullopt;
    // Degenerate cases: mu resp. lambda would be undefined.
    if (k == 0 || k == n - 1) return std::nullopt;

    // Entry-by-entry check of A^2 = kI + lambda A + mu (J - I - A) on
    // integer common-neighbour counts.
    int lambda = -1, mu = -1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const int c = common_neighbours(g, u, v);
            if (g.adjacent(u, v)) {
                if (lambda < 0) lambda = c;
                else if (c != lambda) return std::nullopt;
            } else {
                if (mu < 0) mu = c;
                else if (c != mu) return std::nullopt;
            }
        }
    }
    // k > 0 and k < n-1 guarantee both an edge and a non-edge exist in a
    // regular graph, so lambda and mu are set.
    return SrgParams{n, k, lambda, mu};
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    g.validate();
    const int n = g.n();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> parts;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = (int)parts.size();
        std::vector<int> part, stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            part.push_back(u);
            for (int v = 0; v < n; ++v)
                if (g.adjacent(u, v) && comp[v] < 0) {
                    comp[v] = id;
                    stack.push_back(v);
                }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

Graph complement(const Graph& g) {
    g.validate();
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

std::optional<std::pair<long long, long long>> four_vertex_condition(const Graph& g) {
    if (!check_srg(g)) throw std::invalid_argument("four_vertex_condition: graph is not strongly regular");
    const int n = g.n();

    auto edges_in_common_neighbourhood = [&](int u, int v) {
        std::vector<int> s;
        for (int w = 0; w < n; ++w)
            if (g.adjacent(u, w) && g.adjacent(v, w)) s.push_back(w);
        long long e = 0;
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (g.adjacent(s[i], s[j])) ++e;
        return e;
    };

    long long alpha = -1, beta = -1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const long long e = edges_in_common_neighbourhood(u, v);
            if (g.adjacent(u, v)) {
                if (alpha < 0) alpha = e;
                else if (e != alpha) return std::nullopt;
            } else {
                if (beta < 0) beta = e;
                else if (e != beta) return std::nullopt;
            }
        }
    }
    return std::make_pair(alpha, beta);
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    const auto es = g.edges();
    out << g.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw parse_error("graph text: missing header line");
    std::istringstream hdr(line);
    long long n = -1, m = -1;
    if (!(hdr >> n >> m) || n < 0 || m < 0) throw parse_error("graph text: bad header \"" + line + "\"");
    std::string junk;
    if (hdr >> junk) throw parse_error("graph text: trailing data in header");

    std::vector<std::pair<int, int>> edges;
    edges.reserve((size_t)m);
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw parse_error("graph text: expected " + std::to_string(m) +
                                                       " edge lines, got " + std::to_string(i));
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v)) throw parse_error("graph text: bad edge line \"" + line + "\"");
        if (es >> junk) throw parse_error("graph text: trailing data on edge line");
        if (u >= v) throw parse_error("graph text: edges must satisfy u < v");
        if (!edges.empty() && !(edges.back() < std::make_pair((int)u, (int)v)))
            throw parse_error("graph text: edges must be sorted lexicographically");
        edges.emplace_back((int)u, (int)v);
    }
    if (std::getline(in, line)) throw parse_error("graph text: trailing data after edge list");
    try {
        return Graph::from_edges((int)n, edges);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("graph text: ") + e.what());
    }
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << graph_to_text(g);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_text(buf.str());
}

} // namespace hsc
