#ifndef TREEISO_ALMOST_HPP
#define TREEISO_ALMOST_HPP

#include <optional>
#include <string>
#include <vector>

#include "treeiso/decompose.hpp"
#include "treeiso/graph.hpp"
#include "treeiso/monoid.hpp"

namespace treeiso {

/// Audit record for one matched component pair: the component (left form),
/// the isomorphism onto the right component, both attachment sums
/// transported into the left component, and their normal forms.
struct ComponentCertificate {
    MultiGraph component;
    std::vector<Vertex> mapping;  ///< left component vertex -> right component vertex
    MonoidElement left_sum;
    MonoidElement right_sum;
    MonoidElement left_normal;
    MonoidElement right_normal;
    bool sums_equal = false;
};

/// Outcome of the almost-isomorphism decision. On success every certificate
/// has equal normal forms; on failure either a component went unmatched
/// (`unmatched` holds it, `unmatched_from_left` tells which side) or some
/// certificate's normal forms differ.
struct AlmostVerdict {
    bool almost_isomorphic = false;
    std::vector<ComponentCertificate> components;
    std::string failure_reason;  ///< empty on success
    std::optional<MultiGraph> unmatched;
    bool unmatched_from_left = true;
};

/// Do the unfolding trees of g and h agree up to removing finite subtrees?
/// Decided on spider normal forms: components must match one-to-one by
/// isomorphism and each matched pair's attachment sums must coincide in the
/// component's graph monoid.
AlmostVerdict almost_iso(const RootedGraph& g, const RootedGraph& h);

/// The two-rootings special case. For non-redundant g this is the single
/// monoid query e_s = e_r; otherwise it defers to almost_iso on the two
/// rootings. Throws when s or r is not a root.
AlmostVerdict two_roots_almost_iso(const MultiGraph& g, Vertex s, Vertex r);

}  // namespace treeiso

#endif
