#ifndef TREEISO_PARTITION_HPP
#define TREEISO_PARTITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "treeiso/graph.hpp"

namespace treeiso {

/// A partition of the vertices 0..n-1 into classes 0..class_count-1.
/// Classes are numbered by their least member, ascending.
struct Partition {
    std::vector<std::size_t> class_of;
    std::size_t class_count = 0;

    std::size_t size() const noexcept { return class_of.size(); }
    bool is_discrete() const noexcept { return class_count == class_of.size(); }

    /// Members of class c, ascending.
    std::vector<Vertex> members(std::size_t c) const;

    /// Renumbers class ids so classes appear in order of least member.
    static Partition canonical(std::vector<std::size_t> raw_class_of);

    /// The one-class partition of n vertices (n > 0), or the empty partition.
    static Partition single_class(std::size_t n);

    /// One singleton class per vertex.
    static Partition discrete(std::size_t n);

    bool operator==(const Partition&) const = default;
};

/// Count-stability: vertices sharing a class send equal edge counts into
/// every class. The computational form of the non-edge-collapsing condition.
bool is_stable(const MultiGraph& g, const Partition& p);

/// The coarsest stable partition refining `seed` (default: everything in one
/// class). Iterated signature refinement; fixed point within |V| rounds.
Partition coarsest_stable_partition(const MultiGraph& g,
                                    const std::optional<Partition>& seed = std::nullopt);

/// Quotient graph together with the class map used. Vertex i of the quotient
/// is class i; its row is the per-class out-count vector of the class's
/// least-index representative (well defined by stability).
struct QuotientResult {
    MultiGraph graph;
    Partition map;
};

/// Throws InvalidArgumentError when p does not cover g or is not stable.
QuotientResult quotient(const MultiGraph& g, const Partition& p);

/// True iff the coarsest stable partition is discrete.
bool is_non_redundant(const MultiGraph& g);

/// Quotient by the coarsest stable partition, rooted at the root's class.
struct ReduceResult {
    RootedGraph reduced;
    Partition partition;
};
ReduceResult reduce(const RootedGraph& g);

/// Coarsest stable partition of the disjoint union g ⊔ h
/// (indices: g's vertices, then h's shifted by |V(g)|).
Partition matched_classes(const MultiGraph& g, const MultiGraph& h);

/// Rooted isomorphism of two non-redundant rooted graphs via class matching
/// on the union. Returns the vertex bijection g -> h, or nullopt.
/// Throws InvalidArgumentError when an input is redundant.
std::optional<std::vector<Vertex>> rooted_iso_nonredundant(const RootedGraph& g,
                                                           const RootedGraph& h);

/// As above without the root condition.
std::optional<std::vector<Vertex>> graph_iso_nonredundant(const MultiGraph& g,
                                                          const MultiGraph& h);

/// Serialization: one line "class <id>: <name> <name> ..." per class.
std::string to_text(const Partition& p, const MultiGraph& g);

}  // namespace treeiso

#endif
