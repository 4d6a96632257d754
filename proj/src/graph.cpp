#include "treeiso/graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace treeiso {

namespace {

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                        (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > UINT64_MAX - b) throw OverflowError("edge count overflow");
    return a + b;
}

}  // namespace

MultiGraph::MultiGraph(std::vector<std::string> names,
                       std::vector<std::vector<std::uint64_t>> adj)
    : names_(std::move(names)), adj_(std::move(adj)) {
    const std::size_t n = names_.size();
    if (adj_.size() != n)
        throw InvalidArgumentError("adjacency matrix must have one row per vertex");
    for (const auto& row : adj_)
        if (row.size() != n)
            throw InvalidArgumentError("adjacency matrix must be square");
    std::unordered_set<std::string_view> seen;
    for (const auto& nm : names_) {
        if (!valid_name(nm))
            throw InvalidArgumentError("vertex name must be a nonempty word over [A-Za-z0-9_]: '" + nm + "'");
        if (!seen.insert(nm).second)
            throw InvalidArgumentError("duplicate vertex name '" + nm + "'");
    }
}

const std::string& MultiGraph::name(Vertex v) const {
    if (v >= names_.size()) throw InvalidArgumentError("vertex index out of range");
    return names_[v];
}

std::optional<Vertex> MultiGraph::find_vertex(std::string_view name) const {
    for (Vertex v = 0; v < names_.size(); ++v)
        if (names_[v] == name) return v;
    return std::nullopt;
}

std::uint64_t MultiGraph::multiplicity(Vertex u, Vertex v) const {
    if (u >= adj_.size() || v >= adj_.size())
        throw InvalidArgumentError("vertex index out of range");
    return adj_[u][v];
}

RootedGraph::RootedGraph(MultiGraph graph, Vertex root)
    : graph_(std::move(graph)), root_(root) {
    if (root_ >= graph_.vertex_count())
        throw InvalidArgumentError("root index out of range");
    if (reachable_from(graph_, root_).size() != graph_.vertex_count())
        throw InvalidArgumentError("root does not reach every vertex");
}

bool walk_valid(const MultiGraph& g, const Walk& w) {
    if (w.origin >= g.vertex_count()) return false;
    Vertex at = w.origin;
    for (const EdgeRef& e : w.steps) {
        if (e.from != at || e.to >= g.vertex_count()) return false;
        if (e.copy >= g.multiplicity(e.from, e.to)) return false;
        at = e.to;
    }
    return true;
}

std::uint64_t out_degree(const MultiGraph& g, Vertex v) {
    if (v >= g.vertex_count()) throw InvalidArgumentError("vertex index out of range");
    std::uint64_t total = 0;
    for (std::uint64_t m : g.adjacency()[v]) total = checked_add(total, m);
    return total;
}

std::uint64_t in_degree(const MultiGraph& g, Vertex v) {
    if (v >= g.vertex_count()) throw InvalidArgumentError("vertex index out of range");
    std::uint64_t total = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        total = checked_add(total, g.adjacency()[u][v]);
    return total;
}

std::vector<Vertex> reachable_from(const MultiGraph& g, Vertex v) {
    if (v >= g.vertex_count()) throw InvalidArgumentError("vertex index out of range");
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w = 0; w < g.vertex_count(); ++w)
            if (g.adjacency()[u][w] > 0 && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    std::vector<Vertex> out;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (seen[u]) out.push_back(u);
    return out;
}

MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<Vertex>& vertices) {
    if (!std::is_sorted(vertices.begin(), vertices.end()))
        throw InvalidArgumentError("induced_subgraph expects sorted vertices");
    std::vector<std::string> names;
    names.reserve(vertices.size());
    for (Vertex v : vertices) names.push_back(g.name(v));
    std::vector<std::vector<std::uint64_t>> adj(vertices.size(),
                                                std::vector<std::uint64_t>(vertices.size(), 0));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j)
            adj[i][j] = g.adjacency()[vertices[i]][vertices[j]];
    return MultiGraph(std::move(names), std::move(adj));
}

RootedGraph half_graph(const MultiGraph& g, Vertex x) {
    const std::vector<Vertex> verts = reachable_from(g, x);
    MultiGraph sub = induced_subgraph(g, verts);
    const auto it = std::lower_bound(verts.begin(), verts.end(), x);
    return RootedGraph(std::move(sub), static_cast<Vertex>(it - verts.begin()));
}

std::vector<Vertex> roots(const MultiGraph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (reachable_from(g, v).size() == g.vertex_count()) out.push_back(v);
    return out;
}

bool is_robustly_rooted(const MultiGraph& g) {
    for (Vertex v : roots(g))
        if (in_degree(g, v) > 0) return true;
    return false;
}

bool is_robust(const MultiGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Vertex>> reach(n);
    for (Vertex v = 0; v < n; ++v) reach[v] = reachable_from(g, v);

    std::set<std::vector<Vertex>> maximal;
    for (Vertex v = 0; v < n; ++v) {
        bool dominated = false;
        for (Vertex w = 0; w < n && !dominated; ++w) {
            if (reach[w].size() <= reach[v].size()) continue;
            dominated = std::includes(reach[w].begin(), reach[w].end(),
                                      reach[v].begin(), reach[v].end());
        }
        if (!dominated) maximal.insert(reach[v]);
    }

    for (const auto& verts : maximal) {
        const MultiGraph sub = induced_subgraph(g, verts);
        if (sub.vertex_count() == 1 && sub.adjacency()[0][0] == 0) continue;
        if (!is_robustly_rooted(sub)) return false;
    }
    return true;
}

RootedGraph spider_product(const std::vector<SpiderFactor>& factors) {
    for (const SpiderFactor& f : factors) {
        if (f.rho.empty())
            throw InvalidArgumentError("spider factor with empty attachment multiset");
        std::vector<bool> covered(f.graph.vertex_count(), false);
        for (const auto& [m, mult] : f.rho) {
            if (m >= f.graph.vertex_count())
                throw InvalidArgumentError("attachment vertex out of range");
            if (mult == 0)
                throw InvalidArgumentError("attachment multiplicity must be positive");
            for (Vertex v : reachable_from(f.graph, m)) covered[v] = true;
        }
        if (std::find(covered.begin(), covered.end(), false) != covered.end())
            throw InvalidArgumentError(
                "half-graphs at the attachment multiset do not cover the component");
    }

    // Fresh root name, then factor vertices; names prefixed on clash only.
    std::unordered_set<std::string> used;
    std::size_t total = 1;
    for (const SpiderFactor& f : factors) total += f.graph.vertex_count();

    std::string root_name = "S";
    {
        std::unordered_set<std::string> all;
        for (const SpiderFactor& f : factors)
            for (const auto& nm : f.graph.names()) all.insert(nm);
        while (all.count(root_name)) root_name += "_";
    }

    std::vector<std::string> names{root_name};
    used.insert(root_name);
    std::vector<std::vector<std::uint64_t>> adj(total, std::vector<std::uint64_t>(total, 0));
    std::size_t base = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const MultiGraph& gi = factors[i].graph;
        for (Vertex v = 0; v < gi.vertex_count(); ++v) {
            std::string nm = gi.name(v);
            if (used.count(nm)) nm = "c" + std::to_string(i) + "_" + nm;
            while (used.count(nm)) nm += "_";
            used.insert(nm);
            names.push_back(std::move(nm));
        }
        for (Vertex u = 0; u < gi.vertex_count(); ++u)
            for (Vertex v = 0; v < gi.vertex_count(); ++v)
                adj[base + u][base + v] = gi.adjacency()[u][v];
        for (const auto& [m, mult] : factors[i].rho)
            adj[0][base + m] = mult;
        base += gi.vertex_count();
    }
    return RootedGraph(MultiGraph(std::move(names), std::move(adj)), 0);
}

RootedGraph labels_to_graph(const std::vector<std::string>& labels,
                            std::string_view root_label,
                            const std::vector<std::vector<std::uint64_t>>& counts) {
    for (const auto& row : counts)
        for (std::uint64_t c : row)
            if (c > kMaxInputMultiplicity)
                throw OverflowError("label count exceeds the input multiplicity cap");
    MultiGraph g(labels, counts);
    const auto root = g.find_vertex(root_label);
    if (!root) throw InvalidArgumentError("root label not among the labels");
    if (reachable_from(g, *root).size() != g.vertex_count())
        throw InvalidArgumentError("some label is unreachable from the root label");
    return RootedGraph(std::move(g), *root);
}

MultiGraph disjoint_union(const MultiGraph& g, const MultiGraph& h) {
    const std::size_t n = g.vertex_count(), m = h.vertex_count();
    std::vector<std::string> names;
    names.reserve(n + m);
    for (const auto& nm : g.names()) names.push_back("L_" + nm);
    for (const auto& nm : h.names()) names.push_back("R_" + nm);
    std::vector<std::vector<std::uint64_t>> adj(n + m, std::vector<std::uint64_t>(n + m, 0));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) adj[u][v] = g.adjacency()[u][v];
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = 0; v < m; ++v) adj[n + u][n + v] = h.adjacency()[u][v];
    return MultiGraph(std::move(names), std::move(adj));
}

}  // namespace treeiso
