#include "treeiso/isodecide.hpp"

#include "treeiso/unfold.hpp"

namespace treeiso {

IsoVerdict unfolding_iso(const RootedGraph& g, const RootedGraph& h) {
    ReduceResult rg = reduce(g);
    ReduceResult rh = reduce(h);
    auto mapping = rooted_iso_nonredundant(rg.reduced, rh.reduced);
    if (mapping) {
        return {true, IsoWitness{std::move(rg.reduced), std::move(rh.reduced),
                                 std::move(*mapping)}};
    }
    // Not isomorphic: the truncated trees must split by the depth at which
    // refinement of the union stabilizes.
    const std::size_t bound = g.graph().vertex_count() + h.graph().vertex_count();
    for (std::size_t d = 0; d <= bound; ++d) {
        if (truncated_unfolding_hash(g, d) != truncated_unfolding_hash(h, d))
            return {false, IsoRefutation{d}};
    }
    throw InternalError("reduced forms differ but truncated trees agree at full depth");
}

bool truncated_iso_oracle(const RootedGraph& g, const RootedGraph& h,
                          std::optional<std::size_t> depth) {
    const std::size_t d =
        depth ? *depth : g.graph().vertex_count() + h.graph().vertex_count();
    return truncated_unfolding_hash(g, d) == truncated_unfolding_hash(h, d);
}

}  // namespace treeiso
