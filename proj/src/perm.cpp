#include "hsc/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hsc/errors.hpp"

namespace hsc {

Perm Perm::identity(int n) {
    if (n < 0) throw std::invalid_argument("Perm::identity: negative degree");
    std::vector<int> imgs(n);
    std::iota(imgs.begin(), imgs.end(), 0);
    return Perm(std::move(imgs));
}

Perm Perm::from_images(std::vector<int> images) {
    const int n = (int)images.size();
    std::vector<bool> seen(n, false);
    for (int x : images) {
        if (x < 0 || x >= n) throw std::invalid_argument("Perm::from_images: image out of range");
        if (seen[x]) throw std::invalid_argument("Perm::from_images: repeated image");
        seen[x] = true;
    }
    return Perm(std::move(images));
}

Perm Perm::inverse() const {
    std::vector<int> inv(images_.size());
    for (int x = 0; x < (int)images_.size(); ++x) inv[images_[x]] = x;
    return Perm(std::move(inv));
}

bool Perm::is_identity() const {
    for (int x = 0; x < (int)images_.size(); ++x)
        if (images_[x] != x) return false;
    return true;
}

int Perm::smallest_moved() const {
    for (int x = 0; x < (int)images_.size(); ++x)
        if (images_[x] != x) return x;
    return -1;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("Perm compose: degree mismatch");
    std::vector<int> imgs(a.degree());
    for (int x = 0; x < a.degree(); ++x) imgs[x] = a.apply(b.apply(x));
    return Perm::from_images(std::move(imgs));
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
    if (degree < 0) throw std::invalid_argument("PermGroup: negative degree");
    for (const Perm& g : gens_)
        if (g.degree() != degree_) throw std::invalid_argument("PermGroup: generator degree mismatch");
    build_chain();
}

void PermGroup::rebuild_transversal(Level& level) const {
    level.transversal.clear();
    level.transversal.emplace(level.base, Perm::identity(degree_));
    std::deque<int> queue{level.base};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        const Perm ux = level.transversal.at(x);
        for (const Perm& g : level.gens) {
            int y = g.apply(x);
            if (!level.transversal.count(y)) {
                level.transversal.emplace(y, g * ux);
                queue.push_back(y);
            }
        }
    }
}

std::pair<Perm, size_t> PermGroup::strip(Perm p, size_t from) const {
    for (size_t i = from; i < levels_.size(); ++i) {
        int x = p.apply(levels_[i].base);
        auto it = levels_[i].transversal.find(x);
        if (it == levels_[i].transversal.end()) return {std::move(p), i};
        p = it->second.inverse() * p;
    }
    return {std::move(p), levels_.size()};
}

void PermGroup::build_chain() {
    std::vector<Perm> gens;
    for (const Perm& g : gens_)
        if (!g.is_identity()) gens.push_back(g);
    levels_.clear();
    base_.clear();
    orbit_sizes_.clear();
    if (gens.empty()) return;

    // Base with every generator moving some base point, lowest moved first.
    for (const Perm& g : gens) {
        bool moves = false;
        for (int b : base_)
            if (g.apply(b) != b) {
                moves = true;
                break;
            }
        if (!moves) base_.push_back(g.smallest_moved());
    }
    levels_.resize(base_.size());
    for (size_t i = 0; i < base_.size(); ++i) levels_[i].base = base_[i];
    for (const Perm& g : gens)
        for (size_t i = 0; i < levels_.size(); ++i) {
            levels_[i].gens.push_back(g);
            if (g.apply(levels_[i].base) != levels_[i].base) break;
        }

    // Bottom-up pass: a level is clean when all its Schreier generators
    // sift to the identity through the deeper levels. Chain mutation only
    // happens after leaving the iteration over the level's transversal.
    int lev = (int)levels_.size() - 1;
    while (lev >= 0) {
        rebuild_transversal(levels_[lev]);
        Perm witness;
        size_t target = 0;
        bool dirty = false;
        for (const auto& [x, ux] : levels_[lev].transversal) {
            for (const Perm& g : levels_[lev].gens) {
                const Perm& ugx = levels_[lev].transversal.at(g.apply(x));
                Perm schreier = ugx.inverse() * (g * ux);
                if (schreier.is_identity()) continue;
                auto [residue, j] = strip(std::move(schreier), (size_t)lev + 1);
                if (residue.is_identity()) continue;
                witness = std::move(residue);
                target = j;
                dirty = true;
                break;
            }
            if (dirty) break;
        }
        if (!dirty) {
            --lev;
            continue;
        }
        if (target == levels_.size()) {
            Level fresh;
            fresh.base = witness.smallest_moved();
            base_.push_back(fresh.base);
            levels_.push_back(std::move(fresh));
        }
        for (size_t l = (size_t)lev + 1; l <= target; ++l) levels_[l].gens.push_back(witness);
        lev = (int)target;
    }

    for (const Level& level : levels_) orbit_sizes_.push_back((long long)level.transversal.size());
}

BigInt PermGroup::order() const {
    BigInt o = 1;
    for (long long s : orbit_sizes_) o *= s;
    return o;
}

bool PermGroup::contains(const Perm& p) const {
    if (p.degree() != degree_) throw std::invalid_argument("PermGroup::contains: degree mismatch");
    auto [residue, level] = strip(p, 0);
    (void)level;
    return residue.is_identity();
}

bool PermGroup::is_transitive() const {
    if (degree_ == 0) return false;
    return (int)orbit(*this, 0).size() == degree_;
}

std::vector<int> orbit(const PermGroup& g, int x) {
    if (x < 0 || x >= g.degree()) throw std::invalid_argument("orbit: point out of range");
    std::vector<bool> seen(g.degree(), false);
    seen[x] = true;
    std::deque<int> queue{x};
    std::vector<int> out{x};
    while (!queue.empty()) {
        int y = queue.front();
        queue.pop_front();
        for (const Perm& p : g.generators()) {
            int z = p.apply(y);
            if (!seen[z]) {
                seen[z] = true;
                out.push_back(z);
                queue.push_back(z);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

OrbitalDecomposition orbitals(const PermGroup& g) {
    const int n = g.degree();
    if (!g.is_transitive()) throw std::invalid_argument("orbitals: group is not transitive");

    OrbitalDecomposition dec;
    dec.color.assign(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (dec.color[x][y] != -1) continue;
            const int c = dec.rank++;
            dec.orbitals.emplace_back();
            dec.color[x][y] = c;
            std::deque<std::pair<int, int>> queue{{x, y}};
            dec.orbitals[c].push_back({x, y});
            while (!queue.empty()) {
                auto [a, b] = queue.front();
                queue.pop_front();
                for (const Perm& p : g.generators()) {
                    int pa = p.apply(a), pb = p.apply(b);
                    if (dec.color[pa][pb] == -1) {
                        dec.color[pa][pb] = c;
                        dec.orbitals[c].push_back({pa, pb});
                        queue.push_back({pa, pb});
                    }
                }
            }
            std::sort(dec.orbitals[c].begin(), dec.orbitals[c].end());
        }

    dec.subdegrees.assign(dec.rank, 0);
    for (int y = 0; y < n; ++y) dec.subdegrees[dec.color[0][y]]++;
    dec.pairing.resize(dec.rank);
    for (int c = 0; c < dec.rank; ++c) {
        auto [x, y] = dec.orbitals[c].front();
        dec.pairing[c] = dec.color[y][x];
    }
    return dec;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

} // namespace

bool is_primitive(const PermGroup& g) {
    const int n = g.degree();
    if (n < 2) throw std::invalid_argument("is_primitive: degree < 2");
    OrbitalDecomposition dec = orbitals(g);
    for (int c = 0; c < dec.rank; ++c) {
        if (dec.orbitals[c].front().first == dec.orbitals[c].front().second) continue;
        UnionFind uf(n);
        int components = n;
        for (int side : {c, dec.pairing[c]})
            for (auto [x, y] : dec.orbitals[side])
                if (uf.unite(x, y)) --components;
        if (components != 1) return false;
    }
    return true;
}

std::vector<std::vector<std::vector<int>>> block_system_oracle(const PermGroup& g) {
    const int n = g.degree();
    if (!g.is_transitive()) throw std::invalid_argument("block_system_oracle: group is not transitive");

    std::set<std::vector<std::vector<int>>> systems;
    for (int beta = 1; beta < n; ++beta) {
        UnionFind uf(n);
        uf.unite(0, beta);
        std::deque<std::pair<int, int>> queue{{0, beta}};
        int classes = n - 1;
        while (!queue.empty()) {
            auto [a, b] = queue.front();
            queue.pop_front();
            for (const Perm& p : g.generators()) {
                int pa = p.apply(a), pb = p.apply(b);
                if (uf.unite(pa, pb)) {
                    --classes;
                    queue.push_back({pa, pb});
                }
            }
        }
        if (classes < 2) continue;
        std::vector<std::vector<int>> blocks(n);
        for (int x = 0; x < n; ++x) blocks[uf.find(x)].push_back(x);
        std::vector<std::vector<int>> system;
        for (auto& b : blocks)
            if (!b.empty()) system.push_back(std::move(b));
        std::sort(system.begin(), system.end());
        systems.insert(std::move(system));
    }
    return {systems.begin(), systems.end()};
}

std::string perm_to_cycles(const Perm& p) {
    const int n = p.degree();
    std::vector<bool> done(n, false);
    std::string out;
    for (int x = 0; x < n; ++x) {
        if (done[x] || p.apply(x) == x) continue;
        out += '(';
        int y = x;
        bool first = true;
        do {
            if (!first) out += ' ';
            out += std::to_string(y);
            done[y] = true;
            y = p.apply(y);
            first = false;
        } while (y != x);
        out += ')';
    }
    if (out.empty()) return "()";
    return out;
}

namespace {

std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

Perm perm_from_cycles(int degree, const std::string& line) {
    std::vector<int> imgs(degree);
    std::iota(imgs.begin(), imgs.end(), 0);
    std::vector<bool> used(degree, false);
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace((unsigned char)line[i])) {
            ++i;
            continue;
        }
        if (line[i] != '(') throw parse_error("permutation: expected '(' in cycle form");
        size_t close = line.find(')', i);
        if (close == std::string::npos) throw parse_error("permutation: unbalanced '('");
        std::string body = line.substr(i + 1, close - i - 1);
        std::replace(body.begin(), body.end(), ',', ' ');
        std::istringstream in(body);
        std::vector<int> cycle;
        int v;
        while (in >> v) cycle.push_back(v);
        in.clear();
        std::string rest;
        std::getline(in, rest);
        if (!trimmed(rest).empty()) throw parse_error("permutation: bad cycle entry");
        for (int x : cycle) {
            if (x < 0 || x >= degree) throw parse_error("permutation: point out of range");
            if (used[x]) throw parse_error("permutation: point repeated across cycles");
            used[x] = true;
        }
        for (size_t k = 0; k < cycle.size(); ++k) imgs[cycle[k]] = cycle[(k + 1) % cycle.size()];
        i = close + 1;
    }
    return Perm::from_images(std::move(imgs));
}

Perm perm_from_images_text(int degree, const std::string& line) {
    std::string t = trimmed(line);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw parse_error("permutation: expected '[...]' image form");
    std::string body = t.substr(1, t.size() - 2);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::vector<int> imgs;
    int v;
    while (in >> v) imgs.push_back(v);
    in.clear();
    std::string rest;
    std::getline(in, rest);
    if (!trimmed(rest).empty()) throw parse_error("permutation: bad image entry");
    if ((int)imgs.size() != degree) throw parse_error("permutation: image list length != degree");
    try {
        return Perm::from_images(std::move(imgs));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("permutation: ") + e.what());
    }
}

} // namespace

Perm perm_from_line(int degree, const std::string& line) {
    std::string t = trimmed(line);
    if (t.empty()) throw parse_error("permutation: empty line");
    if (t.front() == '(') return perm_from_cycles(degree, t);
    if (t.front() == '[') return perm_from_images_text(degree, t);
    throw parse_error("permutation: expected cycle or image form");
}

std::string generators_to_text(int degree, const std::vector<Perm>& gens) {
    std::string out = "degree " + std::to_string(degree) + "\n";
    for (const Perm& g : gens) {
        if (g.degree() != degree) throw std::invalid_argument("generators_to_text: degree mismatch");
        out += perm_to_cycles(g) + "\n";
    }
    return out;
}

GeneratorFile generators_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw parse_error("generators: missing header");
    std::istringstream head(line);
    std::string word;
    GeneratorFile f;
    if (!(head >> word >> f.degree) || word != "degree" || f.degree < 0)
        throw parse_error("generators: header must be \"degree n\"");
    if (head >> word) throw parse_error("generators: trailing data in header");
    while (std::getline(in, line)) {
        if (trimmed(line).empty()) continue;
        f.generators.push_back(perm_from_line(f.degree, line));
    }
    return f;
}

void write_generators_file(const GeneratorFile& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open for writing: " + path);
    out << generators_to_text(f.degree, f.generators);
}

GeneratorFile read_generators_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return generators_from_text(buf.str());
}

} // namespace hsc
