#include "treeiso/unfold.hpp"

#include <algorithm>
#include <unordered_map>

namespace treeiso {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr TreeDigest kLeafDigest{0x8f1bbcdc2b9a4f6eULL, 0x5a8279996ed9eba1ULL};

TreeDigest combine_children(std::vector<TreeDigest> children) {
    std::sort(children.begin(), children.end());
    TreeDigest d{0x6a09e667f3bcc908ULL, 0xbb67ae8584caa73bULL};
    for (const TreeDigest& c : children) {
        d.hi = mix64(d.hi ^ c.hi) + 0x9e3779b97f4a7c15ULL * c.lo;
        d.lo = mix64(d.lo + c.lo) ^ (c.hi * 0xc2b2ae3d27d4eb4fULL);
    }
    d.hi = mix64(d.hi ^ children.size());
    d.lo = mix64(d.lo + children.size());
    return d;
}

}  // namespace

Walk UnfoldTree::walk_of(std::size_t node, const RootedGraph& g) const {
    Walk w;
    w.origin = g.root();
    std::vector<EdgeRef> rev;
    while (node != npos && nodes[node].parent != npos) {
        rev.push_back(nodes[node].step);
        node = nodes[node].parent;
    }
    w.steps.assign(rev.rbegin(), rev.rend());
    return w;
}

UnfoldTree unfold(const RootedGraph& g, std::size_t depth) {
    const MultiGraph& graph = g.graph();
    UnfoldTree t;
    t.depth = depth;
    t.nodes.push_back({g.root(), UnfoldTree::npos, {}, {}});
    std::size_t level_begin = 0, level_end = 1;
    for (std::size_t d = 0; d < depth; ++d) {
        for (std::size_t i = level_begin; i < level_end; ++i) {
            const Vertex u = t.nodes[i].vertex;
            for (Vertex v = 0; v < graph.vertex_count(); ++v) {
                const std::uint64_t mult = graph.adjacency()[u][v];
                for (std::uint64_t c = 0; c < mult; ++c) {
                    t.nodes.push_back({v, i, EdgeRef{u, v, c}, {}});
                    t.nodes[i].children.push_back(t.nodes.size() - 1);
                }
            }
        }
        level_begin = level_end;
        level_end = t.nodes.size();
        if (level_begin == level_end) break;  // walks exhausted
    }
    return t;
}

Natural unfold_node_count(const RootedGraph& g, std::size_t depth) {
    const std::size_t n = g.graph().vertex_count();
    std::vector<Natural> walks(n, 0);
    walks[g.root()] = 1;
    Natural total = 1;
    for (std::size_t d = 0; d < depth; ++d) {
        std::vector<Natural> next(n, 0);
        bool any = false;
        for (Vertex u = 0; u < n; ++u) {
            if (walks[u] == 0) continue;
            for (Vertex v = 0; v < n; ++v) {
                const std::uint64_t m = g.graph().adjacency()[u][v];
                if (m == 0) continue;
                next[v] += walks[u] * m;
                any = true;
            }
        }
        if (!any) break;
        for (const Natural& c : next) total += c;
        walks = std::move(next);
    }
    return total;
}

TreeDigest tree_hash(const UnfoldTree& t) {
    if (t.nodes.empty()) return kLeafDigest;
    std::vector<TreeDigest> digest(t.nodes.size());
    // Nodes are breadth-first, so children always follow their parent.
    for (std::size_t i = t.nodes.size(); i-- > 0;) {
        const auto& node = t.nodes[i];
        if (node.children.empty()) {
            digest[i] = kLeafDigest;
            continue;
        }
        std::vector<TreeDigest> kids;
        kids.reserve(node.children.size());
        for (std::size_t c : node.children) kids.push_back(digest[c]);
        digest[i] = combine_children(std::move(kids));
    }
    return digest[0];
}

TreeDigest truncated_unfolding_hash(const RootedGraph& g, std::size_t depth) {
    const MultiGraph& graph = g.graph();
    const std::size_t n = graph.vertex_count();
    // level[v] = digest of the depth-d truncated tree unfolded from v.
    std::vector<TreeDigest> level(n, kLeafDigest);
    for (std::size_t d = 0; d < depth; ++d) {
        std::vector<TreeDigest> next(n);
        for (Vertex u = 0; u < n; ++u) {
            std::vector<TreeDigest> kids;
            for (Vertex v = 0; v < n; ++v) {
                const std::uint64_t m = graph.adjacency()[u][v];
                for (std::uint64_t c = 0; c < m; ++c) kids.push_back(level[v]);
            }
            next[u] = kids.empty() ? kLeafDigest : combine_children(std::move(kids));
        }
        level = std::move(next);
    }
    return level[g.root()];
}

}  // namespace treeiso
