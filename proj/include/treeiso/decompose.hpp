#ifndef TREEISO_DECOMPOSE_HPP
#define TREEISO_DECOMPOSE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "treeiso/graph.hpp"
#include "treeiso/monoid.hpp"
#include "treeiso/natural.hpp"

namespace treeiso {

/// One component of a spider normal form: a connected, robust, non-redundant
/// graph plus the multiset of root attachments (vertex -> multiplicity > 0).
struct SpiderComponent {
    MultiGraph graph;
    std::map<Vertex, Natural> rho;
};

/// Spider normal form of a rooted graph: components pairwise non-isomorphic,
/// their disjoint union non-redundant, and the half-graphs at each rho's
/// support covering the component. The spider product of these components
/// has an unfolding tree almost isomorphic to the input's.
struct SpiderDecomposition {
    std::vector<SpiderComponent> components;
};

/// Vertices lying on some nonempty cycle (an SCC of size >= 2 or a
/// self-loop). Sorted ascending.
std::vector<Vertex> cycle_vertices(const MultiGraph& g);

/// Vertices with no outgoing edges. Sorted ascending.
std::vector<Vertex> sinks(const MultiGraph& g);

/// For each m in `targets`, the number of walks from the root whose terminus
/// is their first vertex in `targets`. {root: 1} when the root is a target.
/// Throws InvalidArgumentError when the subgraph off the targets has a cycle
/// (counts would diverge).
std::map<Vertex, Natural> first_hit_counts(const RootedGraph& g,
                                           const std::vector<Vertex>& targets);

/// Lemma-10 pipeline: first-hit counts into cycle vertices and sinks, union
/// of half-graphs there, non-redundant quotient, counts pushed through, then
/// split into weakly connected components. Components are ordered by (vertex
/// count, adjacency matrix, names). Throws InternalError if an output
/// invariant fails.
SpiderDecomposition spider_normal_form(const RootedGraph& g);

/// A prefix-free set of walks from a common origin; the basis of the union
/// of half-trees hanging off its members.
struct Basis {
    Vertex origin = 0;
    std::vector<Walk> walks;

    bool operator==(const Basis&) const = default;
};

/// The basis {ε_root} of the whole unfolding tree.
Basis initial_basis(const RootedGraph& g);

/// Replaces p by its one-edge extensions {pe : e leaving T(p)}. Keeps
/// prefix-freeness, inescapability and cofiniteness. Throws when p is not in
/// the basis or T(p) is a sink.
Basis expand_basis(const MultiGraph& g, const Basis& b, const Walk& p);

/// Σ_{p in b} e_{T(p)} as a monoid element over g's vertices.
MonoidElement basis_terminus_sum(const MultiGraph& g, const Basis& b);

/// Positive-side search oracle for almost isomorphism of two rootings:
/// explores terminus multisets reachable by basis expansions from {ε_s} and
/// {ε_r}, looking for a common one. Returns true when found within `budget`
/// generated states; nullopt otherwise (never false: the criterion is only
/// semi-decided by search). Throws when s or r is not a root.
std::optional<bool> almost_iso_basis_oracle(const MultiGraph& g, Vertex s, Vertex r,
                                            std::uint64_t budget);

}  // namespace treeiso

#endif
