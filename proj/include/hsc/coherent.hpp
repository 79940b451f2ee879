#ifndef HSC_COHERENT_HPP
#define HSC_COHERENT_HPP

#include <string>
#include <utility>
#include <vector>

#include "hsc/graph.hpp"
#include "hsc/perm.hpp"

namespace hsc {

// A coherent configuration on n vertices: an edge coloring of the complete
// directed graph with loops whose classes partition the pairs, contain the
// diagonal as a union of classes (the fibers), are transpose-closed, and
// have well-defined intersection numbers p(i,j,k) = #{z : (x,z) in class i,
// (z,y) in class j} for every (x,y) in class k.
class CoherentConfiguration {
  public:
    int n = 0;
    int classes = 0;
    std::vector<std::vector<int>> color;
    // Diagonal classes, ascending.
    std::vector<int> fibers;
    // pairing[i] = class of the transposed pairs of class i.
    std::vector<int> pairing;
    // Number of pairs per class.
    std::vector<long long> class_sizes;

    long long p(int i, int j, int k) const;
    bool is_association_scheme() const { return fibers.size() == 1; }
    // p(i,j,k) == p(j,i,k) for all classes.
    bool is_commutative() const;
    // (B_i)(k,j) = p(i,j,k); row sums are the valency of class i when the
    // configuration has one fiber.
    std::vector<std::vector<long long>> intersection_matrix(int i) const;
    // class_sizes / n; requires one fiber.
    std::vector<long long> valencies() const;

  private:
    // Per class k, sorted pairs of (i * classes + j, count).
    std::vector<std::vector<std::pair<long long, long long>>> p_;

    friend CoherentConfiguration from_color_matrix(int n,
                                                   const std::vector<std::vector<int>>& color);
};

// Validates all axioms and computes the intersection tensor. Throws
// std::invalid_argument for non-contiguous class indices and
// verification_error naming the first violated axiom and a witness cell.
CoherentConfiguration from_color_matrix(int n, const std::vector<std::vector<int>>& color);

// Coarsest coherent configuration refining {diagonal, edges, non-edges}:
// iterated recoloring of pairs by the multiset of color compositions
// through intermediate vertices, to a fixpoint. Classes are numbered by
// first occurrence in row-major order.
CoherentConfiguration wl2_closure(const Graph& g);

// Classes = orbits of g on ordered pairs; transitivity not required. One
// fiber iff g is transitive.
CoherentConfiguration from_group_orbitals(const PermGroup& g);

// Eigendata of a commutative association scheme, all real.
struct SchemeSpectrum {
    int d = 0;
    // P[j][i] = eigenvalue of class i on eigenspace j; row 0 is the
    // valency row. Q = n * P^{-1}.
    std::vector<std::vector<double>> P;
    std::vector<std::vector<double>> Q;
    std::vector<long long> valencies;
    std::vector<long long> multiplicities;
    // Krein parameters q[i][j][k].
    std::vector<std::vector<std::vector<double>>> q;
};

// Spectrum from the (d+1)x(d+1) intersection matrices. Requires one fiber
// with the diagonal as class 0, a commutative tensor, and d <= 6 (throws
// std::invalid_argument otherwise). Throws verification_error when the
// eigenvalues are not real, cannot be separated, or the multiplicities do
// not round to positive integers with residual < 1e-6.
SchemeSpectrum scheme_spectrum(const CoherentConfiguration& cc);

struct KreinVerdict {
    bool pass = false;
    double min_value = 0.0;
};

// pass iff min over q[i][j][k] >= -tol.
KreinVerdict krein_check(const SchemeSpectrum& s, double tol);

// Text format: line 1 "n d+1", then n rows of n class indices.
std::string config_to_text(const CoherentConfiguration& cc);
CoherentConfiguration config_from_text(const std::string& text);
void write_config_file(const CoherentConfiguration& cc, const std::string& path);
CoherentConfiguration read_config_file(const std::string& path);

} // namespace hsc

#endif
