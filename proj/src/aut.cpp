#include "hsc/aut.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "hsc/errors.hpp"

namespace hsc {

Coloring Coloring::monochrome(int n) {
    Coloring c;
    c.color.assign(n, 0);
    c.classes = n > 0 ? 1 : 0;
    return c;
}

void Coloring::validate() const {
    std::vector<char> seen(classes, 0);
    for (int cv : color) {
        if (cv < 0 || cv >= classes) throw std::invalid_argument("coloring: color out of range");
        seen[cv] = 1;
    }
    for (char s : seen)
        if (!s) throw std::invalid_argument("coloring: empty color class");
}

std::vector<std::vector<int>> Coloring::cells() const {
    std::vector<std::vector<int>> out(classes);
    for (int v = 0; v < (int)color.size(); ++v) out[color[v]].push_back(v);
    return out;
}

std::vector<long long> Coloring::class_sizes() const {
    std::vector<long long> out(classes, 0);
    for (int cv : color) ++out[cv];
    return out;
}

Coloring refine(const Graph& g, const Coloring& c) {
    if ((int)c.color.size() != g.n())
        throw std::invalid_argument("refine: coloring size differs from graph order");
    c.validate();
    const int n = g.n();
    Coloring cur = c;
    while (cur.classes < n) {
        // Signature of v: (current color, neighbor count per current class).
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].assign(cur.classes, 0);
            for (int u = 0; u < n; ++u)
                if (g.adjacent(v, u)) ++sig[v][cur.color[u]];
        }
        std::map<std::pair<int, std::vector<int>>, int> renum;
        for (int v = 0; v < n; ++v) renum.emplace(std::make_pair(cur.color[v], sig[v]), 0);
        int next = 0;
        for (auto& [key, idx] : renum) idx = next++;
        if (next == cur.classes) break;
        for (int v = 0; v < n; ++v)
            cur.color[v] = renum.at(std::make_pair(cur.color[v], sig[v]));
        cur.classes = next;
    }
    return cur;
}

Coloring individualize(const Coloring& c, int v) {
    c.validate();
    if (v < 0 || v >= (int)c.color.size())
        throw std::invalid_argument("individualize: vertex out of range");
    const int cv = c.color[v];
    long long mates = std::count(c.color.begin(), c.color.end(), cv);
    if (mates == 1) return c;
    Coloring out;
    out.color.resize(c.color.size());
    for (int u = 0; u < (int)c.color.size(); ++u) {
        int cu = c.color[u];
        out.color[u] = cu + (cu > cv || (cu == cv && u != v) ? 1 : 0);
    }
    out.classes = c.classes + 1;
    return out;
}

namespace {

// First smallest non-singleton class, or -1 when discrete.
int target_color(const std::vector<long long>& sizes) {
    int best = -1;
    for (int j = 0; j < (int)sizes.size(); ++j)
        if (sizes[j] > 1 && (best == -1 || sizes[j] < sizes[best])) best = j;
    return best;
}

struct Searcher {
    Searcher(const Graph& graph, long long node_budget, long long& node_counter)
        : g(graph), budget(node_budget), nodes(node_counter) {}

    const Graph& g;
    long long budget;
    long long& nodes;

    // First path: path[i] is the refined coloring whose target cell was
    // split at level i; its class sizes and target color are cached for
    // pruning. base[i] is the vertex individualized on the first path.
    std::vector<Coloring> path;
    std::vector<std::vector<long long>> path_sizes;
    std::vector<int> tcolor;
    std::vector<std::vector<int>> tcell;
    std::vector<int> base;
    std::vector<long long> leaf_sizes;
    // leaf0[j] = vertex of color j at the first discrete leaf.
    std::vector<int> leaf0;

    std::vector<Perm> gens;
    // Current branch: candidates must fix base[0..top_lvl-1] and send
    // base[top_lvl] to top_v, or the orbit bookkeeping below is wrong.
    size_t top_lvl = 0;
    int top_v = -1;

    Coloring step(const Coloring& c, int v) {
        if (++nodes > budget)
            throw budget_error("automorphism search budget exhausted at " +
                               std::to_string(budget) + " nodes");
        return refine(g, individualize(c, v));
    }

    bool is_automorphism(const Perm& p) const {
        const int n = g.n();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.adjacent(u, v) != g.adjacent(p.apply(u), p.apply(v))) return false;
        return true;
    }

    void build_first_path() {
        ++nodes;
        Coloring c = refine(g, Coloring::monochrome(g.n()));
        for (;;) {
            auto sizes = c.class_sizes();
            int tc = target_color(sizes);
            if (tc == -1) {
                leaf_sizes = sizes;
                leaf0.assign(g.n(), -1);
                for (int v = 0; v < g.n(); ++v) leaf0[c.color[v]] = v;
                return;
            }
            path.push_back(c);
            path_sizes.push_back(sizes);
            tcolor.push_back(tc);
            tcell.push_back(c.cells()[tc]);
            base.push_back(tcell.back().front());
            c = step(c, base.back());
        }
    }

    // Depth-first search below level lvl for one automorphism extending the
    // current branch; the coloring must stay size-compatible with the first
    // path level by level.
    std::optional<Perm> dfs(size_t lvl, const Coloring& c) {
        auto sizes = c.class_sizes();
        if (lvl < path.size()) {
            if (sizes != path_sizes[lvl]) return std::nullopt;
            const std::vector<int> cell = c.cells()[tcolor[lvl]];
            for (int v : cell) {
                auto got = dfs(lvl + 1, step(c, v));
                if (got) return got;
            }
            return std::nullopt;
        }
        if (sizes != leaf_sizes) return std::nullopt;
        std::vector<int> images(g.n());
        for (int v = 0; v < g.n(); ++v) images[leaf0[c.color[v]]] = v;
        Perm p = Perm::from_images(std::move(images));
        for (size_t i = 0; i < top_lvl; ++i)
            if (p.apply(base[i]) != base[i]) return std::nullopt;
        if (p.apply(base[top_lvl]) != top_v) return std::nullopt;
        if (is_automorphism(p)) return p;
        return std::nullopt;
    }

    // One automorphism fixing base[0..lvl-1] and mapping base[lvl] to v, if
    // any exists.
    std::optional<Perm> find_mapping(size_t lvl, int v) {
        top_lvl = lvl;
        top_v = v;
        return dfs(lvl + 1, step(path[lvl], v));
    }

    std::vector<int> orbit_of_base(size_t lvl) const {
        std::vector<char> in(g.n(), 0);
        std::vector<int> stack{base[lvl]};
        in[base[lvl]] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const Perm& p : gens) {
                int y = p.apply(x);
                if (!in[y]) {
                    in[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        std::vector<int> out;
        for (int x = 0; x < g.n(); ++x)
            if (in[x]) out.push_back(x);
        return out;
    }

    // Bottom-up over the base: at level lvl every generator found so far
    // fixes base[0..lvl-1], so the known orbit of base[lvl] is exact once
    // every unreached cell vertex has been searched.
    void run() {
        build_first_path();
        for (size_t lvl = path.size(); lvl-- > 0;) {
            for (int v : tcell[lvl]) {
                if (v == base[lvl]) continue;
                auto reached = orbit_of_base(lvl);
                if (std::binary_search(reached.begin(), reached.end(), v)) continue;
                auto got = find_mapping(lvl, v);
                if (got) gens.push_back(*got);
            }
        }
    }
};

Graph reverse_relabel(const Graph& g) {
    const int n = g.n();
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(n - 1 - u, n - 1 - v);
    return Graph::from_edges(n, edges);
}

} // namespace

PermGroup automorphism_group(const Graph& g, long long node_budget) {
    if (g.n() < 1 || g.n() > 200)
        throw std::invalid_argument("automorphism_group: order must be in [1, 200]");
    if (node_budget < 1) throw std::invalid_argument("automorphism_group: budget must be positive");

    long long nodes = 0;
    Searcher first{g, node_budget, nodes};
    first.run();
    for (const Perm& p : first.gens)
        if (!first.is_automorphism(p))
            throw verification_error("automorphism_group: generator fails the edge check");
    PermGroup group(g.n(), first.gens);

    Graph reversed = reverse_relabel(g);
    Searcher second{reversed, node_budget, nodes};
    second.run();
    PermGroup check(g.n(), second.gens);
    if (group.order() != check.order())
        throw verification_error("automorphism_group: search orders disagree on the group order");
    return group;
}

bool is_vertex_transitive(const Graph& g, long long node_budget) {
    return automorphism_group(g, node_budget).is_transitive();
}

} // namespace hsc
