#ifndef HSC_STEINER_HPP
#define HSC_STEINER_HPP

#include <array>
#include <string>
#include <vector>

#include "hsc/graph.hpp"

namespace hsc {

// The projective plane PG(2,4): 21 points, 21 lines of 5 points each,
// any two distinct points on exactly one common line.
struct ProjectivePlane {
    // Homogeneous coordinates over the 4-element field, first nonzero
    // coordinate normalized to 1. Kept for reference and debugging.
    std::vector<std::array<int, 3>> points;
    // Each line as a sorted list of point indices.
    std::vector<std::vector<int>> lines;
    // line_through[u][v] = index of the unique line through u != v.
    std::vector<std::vector<int>> line_through;
    // on_line[l][p] = true iff point p lies on line l.
    std::vector<std::vector<bool>> on_line;

    int point_count() const { return (int)points.size(); }
    int line_count() const { return (int)lines.size(); }

    // Throws verification_error unless the plane axioms hold: 5 points per
    // line, 5 lines per point, unique line through any two points.
    void validate() const;
};

// The Steiner system S(3,6,22): 22 points, 77 six-point blocks, every
// 3-subset of points in exactly one block.
struct SteinerSystem {
    int t = 3;
    int k = 6;
    int v = 22;
    // Blocks sorted internally and lexicographically between each other.
    std::vector<std::vector<int>> blocks;

    int block_count() const { return (int)blocks.size(); }
};

// Per-assertion outcome of checking the defining properties of S(3,6,22).
struct SteinerVerification {
    bool triples_once = false;      // every 3-subset in exactly one block
    bool block_count_77 = false;
    bool point_degree_21 = false;   // every point in 21 blocks
    bool pair_degree_5 = false;     // every pair in 5 blocks
    std::vector<std::string> failures;

    bool ok() const { return triples_once && block_count_77 && point_degree_21 && pair_degree_5; }
};

// Coordinate construction over the 4-element field realized by explicit
// addition/multiplication tables.
ProjectivePlane build_pg24();

// All 6-point sets meeting every line in at most 2 points, enumerated
// exhaustively in lexicographic order.
std::vector<std::vector<int>> hyperovals(const ProjectivePlane& p);

// Partition of the 168 hyperovals under the equivalence generated by
// "intersect in an even number of points". Throws verification_error
// unless there are exactly 3 classes of 56.
std::vector<std::vector<std::vector<int>>> classify_hyperovals(
    const std::vector<std::vector<int>>& hs);

// One-point extension of PG(2,4): the 21 lines extended by a new point
// plus one class of 56 hyperovals. The result always passes
// verify_steiner; failing classes are skipped, and if no class works a
// verification_error reports the construction as broken.
SteinerSystem build_steiner_3_6_22();

// Checks the defining properties; shape violations (wrong point count or
// block size) throw std::invalid_argument.
SteinerVerification verify_steiner(const SteinerSystem& s);

// Vertices = blocks, edges = disjoint pairs of blocks. Throws
// verification_error if the result is not 16-regular.
Graph disjoint_block_graph(const SteinerSystem& s);

// Text format: "v b" then b lines of k sorted point labels, lines sorted
// lexicographically.
std::string design_to_text(const SteinerSystem& s);
SteinerSystem design_from_text(const std::string& text);
void write_design_file(const SteinerSystem& s, const std::string& path);
SteinerSystem read_design_file(const std::string& path);

} // namespace hsc

#endif
