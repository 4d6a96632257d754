#ifndef TREEISO_ISODECIDE_HPP
#define TREEISO_ISODECIDE_HPP

#include <optional>
#include <variant>
#include <vector>

#include "treeiso/graph.hpp"
#include "treeiso/partition.hpp"

namespace treeiso {

/// Positive witness: both reduced forms plus a rooted bijection between
/// them, checkable in linear time.
struct IsoWitness {
    RootedGraph reduced_left;
    RootedGraph reduced_right;
    std::vector<Vertex> mapping;  ///< reduced_left vertex -> reduced_right vertex
};

/// Negative witness: the smallest depth at which the truncated unfolding
/// trees differ.
struct IsoRefutation {
    std::size_t distinguishing_depth = 0;
};

/// Outcome of the unfolding-tree isomorphism decision.
struct IsoVerdict {
    bool isomorphic = false;
    std::variant<IsoWitness, IsoRefutation> certificate;
};

/// Do the unfolding trees of g and h coincide? Decided by reducing both
/// graphs and matching the non-redundant forms.
IsoVerdict unfolding_iso(const RootedGraph& g, const RootedGraph& h);

/// Truncated-tree comparison at `depth` (default |V(g)| + |V(h)|, which is
/// conclusive). Test oracle for unfolding_iso.
bool truncated_iso_oracle(const RootedGraph& g, const RootedGraph& h,
                          std::optional<std::size_t> depth = std::nullopt);

}  // namespace treeiso

#endif
