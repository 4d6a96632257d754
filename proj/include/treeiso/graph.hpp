#ifndef TREEISO_GRAPH_HPP
#define TREEISO_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treeiso/errors.hpp"

namespace treeiso {

using Vertex = std::size_t;

/// Largest multiplicity accepted on input (per adjacency cell). Derived
/// graphs (quotients, spider products of large decompositions) may exceed it
/// internally; inputs may not.
inline constexpr std::uint64_t kMaxInputMultiplicity = std::uint64_t{1} << 32;

/// A finite directed multigraph as a square matrix of edge multiplicities:
/// adjacency()[u][v] parallel edges u -> v. An individual edge is addressed
/// as (u, v, copy) with copy < adjacency()[u][v]. Immutable after
/// construction; all operations on it are pure functions.
class MultiGraph {
public:
    MultiGraph() = default;

    /// Throws InvalidArgumentError unless `adj` is square with one row per
    /// name and the names are distinct, nonempty words over [A-Za-z0-9_].
    MultiGraph(std::vector<std::string> names,
               std::vector<std::vector<std::uint64_t>> adj);

    std::size_t vertex_count() const noexcept { return names_.size(); }
    const std::string& name(Vertex v) const;
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<Vertex> find_vertex(std::string_view name) const;

    std::uint64_t multiplicity(Vertex u, Vertex v) const;
    const std::vector<std::vector<std::uint64_t>>& adjacency() const noexcept {
        return adj_;
    }

    bool operator==(const MultiGraph&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::uint64_t>> adj_;
};

/// A graph together with a distinguished vertex from which every vertex is
/// reachable. Construction checks the reachability condition.
class RootedGraph {
public:
    RootedGraph(MultiGraph graph, Vertex root);

    const MultiGraph& graph() const noexcept { return graph_; }
    Vertex root() const noexcept { return root_; }

    bool operator==(const RootedGraph&) const = default;

private:
    MultiGraph graph_;
    Vertex root_;
};

/// One edge of a multigraph, by endpoints and parallel-copy index.
struct EdgeRef {
    Vertex from = 0;
    Vertex to = 0;
    std::uint64_t copy = 0;

    auto operator<=>(const EdgeRef&) const = default;
};

/// A walk: its starting vertex plus a chain of edges. An empty `steps`
/// vector is the empty walk at `origin`.
struct Walk {
    Vertex origin = 0;
    std::vector<EdgeRef> steps;

    Vertex terminus() const noexcept {
        return steps.empty() ? origin : steps.back().to;
    }
    std::size_t length() const noexcept { return steps.size(); }

    auto operator<=>(const Walk&) const = default;
};

/// True when the steps chain up and every edge exists in `g`.
bool walk_valid(const MultiGraph& g, const Walk& w);

/// Sum of out-multiplicities of v.
std::uint64_t out_degree(const MultiGraph& g, Vertex v);

/// Sum of in-multiplicities of v.
std::uint64_t in_degree(const MultiGraph& g, Vertex v);

/// Every vertex some walk from v ends at, v included. Sorted ascending.
std::vector<Vertex> reachable_from(const MultiGraph& g, Vertex v);

/// Vertex-induced subgraph on `vertices` (must be sorted, in range).
/// `vertices[i]` becomes vertex i of the result and keeps its name.
MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<Vertex>& vertices);

/// The outgoing graph G_x: the induced subgraph on reachable_from(g, x),
/// rooted at x.
RootedGraph half_graph(const MultiGraph& g, Vertex x);

/// All vertices that reach every vertex. Sorted ascending.
std::vector<Vertex> roots(const MultiGraph& g);

/// True when some root has an incoming edge.
bool is_robustly_rooted(const MultiGraph& g);

/// True when every inclusion-maximal half-graph is robustly rooted or is a
/// single vertex without edges. Maximal half-graphs are found by comparing
/// reachability sets under inclusion.
bool is_robust(const MultiGraph& g);

/// One factor of a spider product: a graph plus the multiset of its vertices
/// the fresh root attaches to (vertex -> multiplicity, all nonzero).
struct SpiderFactor {
    MultiGraph graph;
    std::map<Vertex, std::uint64_t> rho;
};

/// Attaches all factors disjointly under a fresh root S, with rho(m) parallel
/// edges S -> m. Throws InvalidArgumentError when some rho is empty or the
/// half-graphs at its support fail to cover the factor (the result would not
/// be rooted).
RootedGraph spider_product(const std::vector<SpiderFactor>& factors);

/// Builds the graph whose unfolding realizes a vertex labelling with the
/// given per-label child counts: counts[m][n] children labeled n under a
/// node labeled m. Throws when some label is unreachable from the root.
RootedGraph labels_to_graph(const std::vector<std::string>& labels,
                            std::string_view root_label,
                            const std::vector<std::vector<std::uint64_t>>& counts);

/// Disjoint union; left vertices first. Names are prefixed L_ / R_ to stay
/// distinct.
MultiGraph disjoint_union(const MultiGraph& g, const MultiGraph& h);

}  // namespace treeiso

#endif
