#include "hsc/coherent.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hsc/errors.hpp"

namespace hsc {

namespace {

std::string cell(int x, int y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

// Sorted (i * classes + j, count) aggregation of the composition colors
// through every intermediate vertex.
std::vector<std::pair<long long, long long>> composition_counts(
    const std::vector<std::vector<int>>& color, int classes, int x, int y) {
    const int n = (int)color.size();
    std::vector<long long> keys(n);
    for (int z = 0; z < n; ++z) keys[z] = (long long)color[x][z] * classes + color[z][y];
    std::sort(keys.begin(), keys.end());
    std::vector<std::pair<long long, long long>> agg;
    for (int z = 0; z < n;) {
        int w = z;
        while (w < n && keys[w] == keys[z]) ++w;
        agg.emplace_back(keys[z], w - z);
        z = w;
    }
    return agg;
}

} // namespace

long long CoherentConfiguration::p(int i, int j, int k) const {
    const long long key = (long long)i * classes + j;
    const auto& row = p_[k];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(key, (long long)0));
    if (it == row.end() || it->first != key) return 0;
    return it->second;
}

bool CoherentConfiguration::is_commutative() const {
    for (int k = 0; k < classes; ++k)
        for (const auto& [key, count] : p_[k]) {
            int i = (int)(key / classes), j = (int)(key % classes);
            if (p(j, i, k) != count) return false;
        }
    return true;
}

std::vector<std::vector<long long>> CoherentConfiguration::intersection_matrix(int i) const {
    std::vector<std::vector<long long>> b(classes, std::vector<long long>(classes, 0));
    for (int k = 0; k < classes; ++k)
        for (int j = 0; j < classes; ++j) b[k][j] = p(i, j, k);
    return b;
}

std::vector<long long> CoherentConfiguration::valencies() const {
    if (!is_association_scheme())
        throw std::invalid_argument("valencies: configuration must have one fiber");
    std::vector<long long> v(classes);
    for (int i = 0; i < classes; ++i) v[i] = class_sizes[i] / n;
    return v;
}

CoherentConfiguration from_color_matrix(int n, const std::vector<std::vector<int>>& color) {
    if (n < 1) throw std::invalid_argument("from_color_matrix: n < 1");
    if ((int)color.size() != n) throw std::invalid_argument("from_color_matrix: row count != n");
    int classes = 0;
    for (const auto& row : color) {
        if ((int)row.size() != n) throw std::invalid_argument("from_color_matrix: ragged row");
        for (int c : row) {
            if (c < 0) throw std::invalid_argument("from_color_matrix: negative class index");
            classes = std::max(classes, c + 1);
        }
    }
    std::vector<long long> sizes(classes, 0);
    for (const auto& row : color)
        for (int c : row) sizes[c]++;
    for (int c = 0; c < classes; ++c)
        if (sizes[c] == 0)
            throw std::invalid_argument("from_color_matrix: class indices not contiguous, class " +
                                        std::to_string(c) + " empty");

    CoherentConfiguration cc;
    cc.n = n;
    cc.classes = classes;
    cc.color = color;
    cc.class_sizes = std::move(sizes);

    // The diagonal must be a union of classes.
    std::vector<int> diag_cell(classes, -1);
    for (int x = 0; x < n; ++x)
        if (diag_cell[color[x][x]] == -1) diag_cell[color[x][x]] = x;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            int c = color[x][y];
            if (diag_cell[c] != -1)
                throw verification_error("diagonal not a union of classes: class " +
                                         std::to_string(c) + " contains " +
                                         cell(diag_cell[c], diag_cell[c]) + " and " + cell(x, y));
        }
    for (int c = 0; c < classes; ++c)
        if (diag_cell[c] != -1) cc.fibers.push_back(c);

    // Transpose closure.
    cc.pairing.assign(classes, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int c = color[x][y], t = color[y][x];
            if (cc.pairing[c] == -1)
                cc.pairing[c] = t;
            else if (cc.pairing[c] != t)
                throw verification_error(
                    "transpose closure violated at " + cell(x, y) + ": class " +
                    std::to_string(c) + " transposes to both " + std::to_string(cc.pairing[c]) +
                    " and " + std::to_string(t));
        }

    // Intersection numbers must not depend on the representative pair.
    cc.p_.assign(classes, {});
    std::vector<char> defined(classes, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int k = color[x][y];
            auto agg = composition_counts(color, classes, x, y);
            if (!defined[k]) {
                cc.p_[k] = std::move(agg);
                defined[k] = 1;
            } else if (cc.p_[k] != agg) {
                // Name one differing composition for the witness.
                long long bad = -1;
                size_t a = 0, b = 0;
                const auto& ref = cc.p_[k];
                while (bad == -1 && (a < ref.size() || b < agg.size())) {
                    if (b == agg.size() || (a < ref.size() && ref[a].first < agg[b].first))
                        bad = ref[a].first;
                    else if (a == ref.size() || agg[b].first < ref[a].first)
                        bad = agg[b].first;
                    else if (ref[a].second != agg[b].second)
                        bad = ref[a].first;
                    else
                        ++a, ++b;
                }
                throw verification_error(
                    "intersection number p(" + std::to_string(bad / classes) + "," +
                    std::to_string(bad % classes) + "," + std::to_string(k) +
                    ") inconsistent at " + cell(x, y));
            }
        }
    return cc;
}

CoherentConfiguration wl2_closure(const Graph& g) {
    const int n = g.n();
    std::vector<std::vector<int>> col(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) col[x][y] = x == y ? 0 : (g.adjacent(x, y) ? 1 : 2);

    // Renumber by first occurrence in row-major order so class indices are
    // contiguous; this also fixes the output numbering at every round.
    auto renumber = [n](std::vector<std::vector<int>>& m, int upper) {
        std::vector<int> to(upper, -1);
        int next = 0;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (to[m[x][y]] == -1) to[m[x][y]] = next++;
                m[x][y] = to[m[x][y]];
            }
        return next;
    };
    int classes = renumber(col, 3);

    while (true) {
        std::map<std::vector<long long>, int> ids;
        std::vector<std::vector<int>> fresh(n, std::vector<int>(n));
        int next = 0;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                std::vector<long long> sig{col[x][y], col[y][x]};
                for (auto [key, count] : composition_counts(col, classes, x, y)) {
                    sig.push_back(key);
                    sig.push_back(count);
                }
                auto [it, inserted] = ids.emplace(std::move(sig), next);
                if (inserted) ++next;
                fresh[x][y] = it->second;
            }
        if (next == classes && fresh == col) break;
        col = std::move(fresh);
        classes = next;
    }
    return from_color_matrix(n, col);
}

CoherentConfiguration from_group_orbitals(const PermGroup& g) {
    const int n = g.degree();
    if (n < 1) throw std::invalid_argument("from_group_orbitals: degree < 1");
    std::vector<std::vector<int>> col(n, std::vector<int>(n, -1));
    int next = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (col[x][y] != -1) continue;
            const int c = next++;
            col[x][y] = c;
            std::deque<std::pair<int, int>> queue{{x, y}};
            while (!queue.empty()) {
                auto [a, b] = queue.front();
                queue.pop_front();
                for (const Perm& p : g.generators()) {
                    int pa = p.apply(a), pb = p.apply(b);
                    if (col[pa][pb] == -1) {
                        col[pa][pb] = c;
                        queue.push_back({pa, pb});
                    }
                }
            }
        }
    return from_color_matrix(n, col);
}

SchemeSpectrum scheme_spectrum(const CoherentConfiguration& cc) {
    if (!cc.is_association_scheme())
        throw std::invalid_argument("scheme_spectrum: configuration must have one fiber");
    if (cc.fibers[0] != 0)
        throw std::invalid_argument("scheme_spectrum: diagonal class must be class 0");
    const int m = cc.classes;
    if (m > 7) throw std::invalid_argument("scheme_spectrum: supported up to 7 classes");
    if (!cc.is_commutative())
        throw std::invalid_argument("scheme_spectrum: non-commutative configuration");

    std::vector<Eigen::MatrixXd> B(m, Eigen::MatrixXd::Zero(m, m));
    for (int i = 0; i < m; ++i) {
        auto bi = cc.intersection_matrix(i);
        for (int k = 0; k < m; ++k)
            for (int j = 0; j < m; ++j) B[i](k, j) = (double)bi[k][j];
    }
    const std::vector<long long> val = cc.valencies();

    const double sep_tol = 1e-9;
    std::string failure = "eigenvalues not separated";
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull + (unsigned long long)attempt);
        std::uniform_real_distribution<double> dist(0.25, 1.0);
        Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) M += dist(rng) * B[i];

        Eigen::EigenSolver<Eigen::MatrixXd> es(M);
        if (es.info() != Eigen::Success) {
            failure = "eigensolver did not converge";
            continue;
        }
        const auto evals = es.eigenvalues();
        double scale = 1.0;
        for (int j = 0; j < m; ++j) scale = std::max(scale, std::abs(evals(j)));
        bool ok = true;
        for (int j = 0; j < m && ok; ++j)
            if (std::abs(evals(j).imag()) > 1e-8 * scale) {
                failure = "non-real eigenvalues";
                ok = false;
            }
        if (!ok) continue;
        for (int a = 0; a < m && ok; ++a)
            for (int b = a + 1; b < m && ok; ++b)
                if (std::abs(evals(a).real() - evals(b).real()) <= sep_tol * scale) {
                    failure = "eigenvalues not separated";
                    ok = false;
                }
        if (!ok) continue;

        // Each eigenvector of M is a common eigenvector of every B_i; read
        // off the eigenvalue rows.
        std::vector<std::vector<double>> rows(m, std::vector<double>(m));
        for (int j = 0; j < m && ok; ++j) {
            Eigen::VectorXcd vc = es.eigenvectors().col(j);
            int c = 0;
            for (int t = 1; t < m; ++t)
                if (std::abs(vc(t)) > std::abs(vc(c))) c = t;
            Eigen::VectorXcd scaled = vc / vc(c);
            Eigen::VectorXd v(m);
            for (int t = 0; t < m; ++t) {
                if (std::abs(scaled(t).imag()) > 1e-7) {
                    failure = "non-real eigenvector";
                    ok = false;
                }
                v(t) = scaled(t).real();
            }
            if (!ok) break;
            for (int i = 0; i < m; ++i) {
                Eigen::VectorXd bv = B[i] * v;
                double mu = bv(c);
                if ((bv - mu * v).lpNorm<Eigen::Infinity>() > 1e-7 * (1.0 + std::abs(mu))) {
                    failure = "common eigenvector residual too large";
                    ok = false;
                    break;
                }
                rows[j][i] = mu;
            }
        }
        if (!ok) continue;

        // The all-ones eigenvector carries the valencies; pin that row
        // first and exact, order the rest descending.
        int vrow = -1;
        for (int j = 0; j < m && vrow == -1; ++j) {
            bool match = true;
            for (int i = 0; i < m && match; ++i)
                if (std::abs(rows[j][i] - (double)val[i]) > 1e-6 * (1.0 + (double)val[i]))
                    match = false;
            if (match) vrow = j;
        }
        if (vrow == -1) {
            failure = "valency eigenvalue row missing";
            continue;
        }
        SchemeSpectrum s;
        s.d = m - 1;
        s.valencies = val;
        s.P.push_back(std::vector<double>(val.begin(), val.end()));
        std::vector<std::vector<double>> rest;
        for (int j = 0; j < m; ++j)
            if (j != vrow) rest.push_back(rows[j]);
        std::sort(rest.begin(), rest.end(), std::greater<>());
        for (auto& r : rest) s.P.push_back(std::move(r));

        Eigen::MatrixXd pm(m, m);
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < m; ++i) pm(j, i) = s.P[j][i];
        Eigen::MatrixXd qm = (double)cc.n * pm.inverse();
        if ((pm * qm - (double)cc.n * Eigen::MatrixXd::Identity(m, m)).norm() >
            1e-8 * (double)cc.n * m)
            throw verification_error("scheme_spectrum: P*Q deviates from n*I");
        s.Q.assign(m, std::vector<double>(m));
        for (int u = 0; u < m; ++u)
            for (int j = 0; j < m; ++j) s.Q[u][j] = qm(u, j);

        long long total = 0;
        for (int j = 0; j < m; ++j) {
            double mj = s.Q[0][j];
            long long r = std::llround(mj);
            if (std::abs(mj - (double)r) >= 1e-6)
                throw verification_error("scheme_spectrum: multiplicity " + std::to_string(mj) +
                                         " does not round to an integer");
            if (r <= 0) throw verification_error("scheme_spectrum: nonpositive multiplicity");
            s.multiplicities.push_back(r);
            total += r;
        }
        if (total != cc.n)
            throw verification_error("scheme_spectrum: multiplicities sum to " +
                                     std::to_string(total) + ", not n");

        s.q.assign(m, std::vector<std::vector<double>>(m, std::vector<double>(m, 0.0)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k) {
                    double sum = 0.0;
                    for (int u = 0; u < m; ++u) sum += s.Q[u][i] * s.Q[u][j] * s.P[k][u];
                    s.q[i][j][k] = sum / (double)cc.n;
                }
        return s;
    }
    throw verification_error("scheme_spectrum: " + failure);
}

KreinVerdict krein_check(const SchemeSpectrum& s, double tol) {
    KreinVerdict v;
    v.min_value = std::numeric_limits<double>::infinity();
    for (const auto& plane : s.q)
        for (const auto& row : plane)
            for (double x : row) v.min_value = std::min(v.min_value, x);
    v.pass = v.min_value >= -tol;
    return v;
}

std::string config_to_text(const CoherentConfiguration& cc) {
    std::string out = std::to_string(cc.n) + " " + std::to_string(cc.classes) + "\n";
    for (int x = 0; x < cc.n; ++x) {
        for (int y = 0; y < cc.n; ++y) {
            if (y) out += ' ';
            out += std::to_string(cc.color[x][y]);
        }
        out += '\n';
    }
    return out;
}

CoherentConfiguration config_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw parse_error("config: missing header");
    std::istringstream head(line);
    int n = 0, classes = 0;
    if (!(head >> n >> classes) || n < 1 || classes < 1)
        throw parse_error("config: header must be \"n classes\"");
    std::string extra;
    if (head >> extra) throw parse_error("config: trailing data in header");

    std::vector<std::vector<int>> col(n, std::vector<int>(n));
    int seen_max = -1;
    for (int x = 0; x < n; ++x) {
        if (!std::getline(in, line)) throw parse_error("config: missing row " + std::to_string(x));
        std::istringstream row(line);
        for (int y = 0; y < n; ++y) {
            if (!(row >> col[x][y])) throw parse_error("config: short row " + std::to_string(x));
            if (col[x][y] < 0 || col[x][y] >= classes)
                throw parse_error("config: class index out of range at " + cell(x, y));
            seen_max = std::max(seen_max, col[x][y]);
        }
        if (row >> extra) throw parse_error("config: trailing data in row " + std::to_string(x));
    }
    while (std::getline(in, line))
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
            throw parse_error("config: trailing data after matrix");
    if (seen_max + 1 != classes)
        throw parse_error("config: header declares " + std::to_string(classes) +
                          " classes, matrix uses " + std::to_string(seen_max + 1));
    return from_color_matrix(n, col);
}

void write_config_file(const CoherentConfiguration& cc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open for writing: " + path);
    out << config_to_text(cc);
}

CoherentConfiguration read_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_text(buf.str());
}

} // namespace hsc
