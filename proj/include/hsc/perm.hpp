#ifndef HSC_PERM_HPP
#define HSC_PERM_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hsc/bigint.hpp"

namespace hsc {

// A permutation of [0, n) stored as its image array.
class Perm {
  public:
    Perm() = default;

    static Perm identity(int n);
    // Validates that images is a bijection on [0, n).
    static Perm from_images(std::vector<int> images);

    int degree() const { return (int)images_.size(); }
    int apply(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    Perm inverse() const;
    bool is_identity() const;
    // Smallest point x with apply(x) != x, or -1 for the identity.
    int smallest_moved() const;

    bool operator==(const Perm& o) const { return images_ == o.images_; }
    bool operator!=(const Perm& o) const { return images_ != o.images_; }
    bool operator<(const Perm& o) const { return images_ < o.images_; }

  private:
    explicit Perm(std::vector<int> imgs) : images_(std::move(imgs)) {}
    std::vector<int> images_;
};

// (a * b)(x) = a(b(x)). Throws std::invalid_argument on degree mismatch.
Perm operator*(const Perm& a, const Perm& b);

// A permutation group given by generators, with a deterministic
// base/strong-generating-set chain built once at construction. Base points
// are lowest moved points; the object is immutable afterwards, so reads
// from several threads are safe.
class PermGroup {
  public:
    PermGroup(int degree, std::vector<Perm> generators);

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<int>& base() const { return base_; }
    // Orbit sizes along the chain; their product is the order.
    const std::vector<long long>& chain_orbit_sizes() const { return orbit_sizes_; }

    BigInt order() const;
    // True iff p sifts to the identity through the chain.
    bool contains(const Perm& p) const;
    bool is_transitive() const;

  private:
    struct Level {
        int base = 0;
        std::vector<Perm> gens;
        // Sorted by orbit point; each entry u satisfies u(base) = point.
        std::map<int, Perm> transversal;
    };

    void build_chain();
    void rebuild_transversal(Level& level) const;
    std::pair<Perm, size_t> strip(Perm p, size_t from) const;

    int degree_;
    std::vector<Perm> gens_;
    std::vector<Level> levels_;
    std::vector<int> base_;
    std::vector<long long> orbit_sizes_;
};

// Smallest generator-closed set containing x, sorted.
std::vector<int> orbit(const PermGroup& g, int x);

// Orbits of a transitive group on ordered pairs, numbered by first
// occurrence in row-major order; orbital 0 is the diagonal.
struct OrbitalDecomposition {
    int rank = 0;
    // color[x][y] = orbital index of the pair (x, y).
    std::vector<std::vector<int>> color;
    std::vector<std::vector<std::pair<int, int>>> orbitals;
    // subdegrees[i] = #{y : color[0][y] = i}; sums to the degree.
    std::vector<long long> subdegrees;
    // pairing[i] = index of the transpose orbital; an involution.
    std::vector<int> pairing;
};

// Throws std::invalid_argument if g is intransitive.
OrbitalDecomposition orbitals(const PermGroup& g);

// True iff every non-diagonal orbital, united with its transpose, forms a
// connected undirected graph. Throws std::invalid_argument if g is
// intransitive or has degree < 2.
bool is_primitive(const PermGroup& g);

// All distinct nontrivial block systems arising as the minimal block
// containing {0, beta} for some beta, via union-refinement. Empty iff
// primitive. Throws std::invalid_argument if g is intransitive.
std::vector<std::vector<std::vector<int>>> block_system_oracle(const PermGroup& g);

// Generator text format: first line "degree n", then one permutation per
// line in cycle notation "(0 1 2)(3 4)" (fixed points omitted, identity
// "()") or as an image list "[1,2,0,4,3]".
struct GeneratorFile {
    int degree = 0;
    std::vector<Perm> generators;
};

std::string perm_to_cycles(const Perm& p);
Perm perm_from_line(int degree, const std::string& line);
std::string generators_to_text(int degree, const std::vector<Perm>& gens);
GeneratorFile generators_from_text(const std::string& text);
void write_generators_file(const GeneratorFile& f, const std::string& path);
GeneratorFile read_generators_file(const std::string& path);

} // namespace hsc

#endif
