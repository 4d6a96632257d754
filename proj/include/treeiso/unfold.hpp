#ifndef TREEISO_UNFOLD_HPP
#define TREEISO_UNFOLD_HPP

#include <cstdint>
#include <vector>

#include "treeiso/graph.hpp"
#include "treeiso/natural.hpp"

namespace treeiso {

/// 128-bit structural digest of a rooted tree. Equal digests mean isomorphic
/// trees (collision-free in practice; cross-checked against an explicit
/// isomorphism test in the suite).
struct TreeDigest {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    auto operator<=>(const TreeDigest&) const = default;
};

/// The unfolding tree of a rooted graph, truncated at `depth`: one node per
/// walk from the root of length <= depth, labeled by the walk's terminus.
/// nodes[0] is the root; children are ordered by (target vertex, copy index)
/// and nodes are laid out breadth-first.
struct UnfoldTree {
    struct Node {
        Vertex vertex = 0;                    ///< terminus of the walk
        std::size_t parent = npos;            ///< npos for the root
        EdgeRef step;                         ///< edge from the parent walk
        std::vector<std::size_t> children;
    };

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t depth = 0;
    std::vector<Node> nodes;

    /// Reconstructs the walk a node stands for.
    Walk walk_of(std::size_t node, const RootedGraph& g) const;
};

/// Materializes the truncated unfolding tree. Node count can be exponential
/// in depth; callers bound it (see unfold_node_count).
UnfoldTree unfold(const RootedGraph& g, std::size_t depth);

/// Number of nodes unfold(g, depth) would produce, without building it.
Natural unfold_node_count(const RootedGraph& g, std::size_t depth);

/// Bottom-up digest over the sorted multiset of child digests.
TreeDigest tree_hash(const UnfoldTree& t);

/// tree_hash(unfold(g, depth)) computed by (vertex, remaining depth)
/// memoization, usable where the materialized tree would not fit.
TreeDigest truncated_unfolding_hash(const RootedGraph& g, std::size_t depth);

}  // namespace treeiso

#endif
