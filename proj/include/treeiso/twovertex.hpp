#ifndef TREEISO_TWOVERTEX_HPP
#define TREEISO_TWOVERTEX_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "treeiso/graph.hpp"

namespace treeiso {

/// Adjacency [[A,B],[C,D]] over the vertices x, y.
struct TwoVertexGraph {
    std::uint64_t A = 0;
    std::uint64_t B = 0;
    std::uint64_t C = 0;
    std::uint64_t D = 0;

    bool operator==(const TwoVertexGraph&) const = default;
};

/// The corresponding MultiGraph with vertices named x, y.
MultiGraph two_vertex_graph(const TwoVertexGraph& t);

/// D = 0 closed form for x = y in the graph monoid: C = 1, or B = 1 and
/// A = 0. Requires C > 0 (else y is not a root); throws otherwise.
bool closed_form_d0(std::uint64_t A, std::uint64_t B, std::uint64_t C);

/// B = 1, D = 2 closed form: x = y iff N | A for N = A - C - 1. Requires
/// A, C > 0 and A >= C + 2 (N >= 1); throws otherwise.
bool closed_form_b1d2(std::uint64_t A, std::uint64_t C);

/// Monoid-preserving reductions: (A,B,C,D) -> (A-C, B-D+1, C, D) when
/// A >= C and B >= D, or (A, B, C-A+1, D-B) when C >= A and D >= B. Applied
/// while A, B, C, D are all positive; each step lowers A + D, ending at
/// A = 0, D = 0 or (A-C)(B-D) < 0.
TwoVertexGraph matrix_reduce(TwoVertexGraph t);

/// Scans all (A,B,C,D) in [1,max]^4 with A >= D and (A-C)(B-D) < 0,
/// comparing the monoid verdict for x = y against the conjectured predicate
/// B = 1 and D = 2 and (A-C-1) | A. Returns the disagreeing tuples, sorted.
std::vector<std::array<std::uint64_t, 4>> conjecture_scan(std::uint64_t max,
                                                          unsigned jobs = 1);

}  // namespace treeiso

#endif
