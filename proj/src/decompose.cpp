#include "treeiso/decompose.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "treeiso/partition.hpp"

namespace treeiso {

std::vector<Vertex> cycle_vertices(const MultiGraph& g) {
    const std::size_t n = g.vertex_count();
    // Iterative Tarjan SCC.
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    std::size_t next_index = 0, comp_count = 0;
    std::vector<std::size_t> comp_size;

    struct Frame {
        Vertex v;
        Vertex next_child;
    };
    for (Vertex start = 0; start < n; ++start) {
        if (index[start] != unset) continue;
        std::vector<Frame> frames{{start, 0}};
        index[start] = low[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            bool descended = false;
            while (f.next_child < n) {
                const Vertex w = f.next_child++;
                if (g.adjacency()[f.v][w] == 0) continue;
                if (index[w] == unset) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[f.v] = std::min(low[f.v], index[w]);
            }
            if (descended) continue;
            if (low[f.v] == index[f.v]) {
                std::size_t size = 0;
                while (true) {
                    const Vertex w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = comp_count;
                    ++size;
                    if (w == f.v) break;
                }
                comp_size.push_back(size);
                ++comp_count;
            }
            const Vertex child = f.v;
            frames.pop_back();
            if (!frames.empty())
                low[frames.back().v] = std::min(low[frames.back().v], low[child]);
        }
    }

    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (comp_size[comp[v]] >= 2 || g.adjacency()[v][v] > 0) out.push_back(v);
    return out;
}

std::vector<Vertex> sinks(const MultiGraph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (out_degree(g, v) == 0) out.push_back(v);
    return out;
}

std::map<Vertex, Natural> first_hit_counts(const RootedGraph& g,
                                           const std::vector<Vertex>& targets) {
    const MultiGraph& graph = g.graph();
    const std::size_t n = graph.vertex_count();
    std::vector<bool> in_targets(n, false);
    for (Vertex m : targets) {
        if (m >= n) throw InvalidArgumentError("target vertex out of range");
        in_targets[m] = true;
    }
    if (in_targets[g.root()]) return {{g.root(), Natural(1)}};

    // Topological order of the off-target part via Kahn's algorithm.
    std::vector<std::size_t> pending(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        if (in_targets[u]) continue;
        for (Vertex v = 0; v < n; ++v)
            if (!in_targets[v] && graph.adjacency()[u][v] > 0) ++pending[v];
    }
    std::deque<Vertex> ready;
    for (Vertex v = 0; v < n; ++v)
        if (!in_targets[v] && pending[v] == 0) ready.push_back(v);
    std::vector<Vertex> order;
    while (!ready.empty()) {
        const Vertex u = ready.front();
        ready.pop_front();
        order.push_back(u);
        for (Vertex v = 0; v < n; ++v)
            if (!in_targets[v] && graph.adjacency()[u][v] > 0 && --pending[v] == 0)
                ready.push_back(v);
    }
    std::size_t off_target = 0;
    for (Vertex v = 0; v < n; ++v) off_target += in_targets[v] ? 0 : 1;
    if (order.size() != off_target)
        throw InvalidArgumentError("subgraph off the targets contains a cycle");

    std::vector<Natural> ways(n, 0);
    ways[g.root()] = 1;
    std::map<Vertex, Natural> hits;
    for (Vertex u : order) {
        if (ways[u] == 0) continue;
        for (Vertex v = 0; v < n; ++v) {
            const std::uint64_t m = graph.adjacency()[u][v];
            if (m == 0) continue;
            if (in_targets[v])
                hits[v] += ways[u] * m;
            else
                ways[v] += ways[u] * m;
        }
    }
    return hits;
}

namespace {

/// Weakly connected components by union-find; returns component id per vertex.
std::vector<std::size_t> weak_components(const MultiGraph& g, std::size_t& count) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (g.adjacency()[u][v] > 0) parent[find(u)] = find(v);
    std::vector<std::size_t> id(n, static_cast<std::size_t>(-1));
    count = 0;
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t r = find(v);
        if (id[r] == static_cast<std::size_t>(-1)) id[r] = count++;
        id[v] = id[r];
    }
    return id;
}

}  // namespace

SpiderDecomposition spider_normal_form(const RootedGraph& g) {
    const MultiGraph& graph = g.graph();

    std::vector<Vertex> anchors = cycle_vertices(graph);
    for (Vertex s : sinks(graph)) anchors.push_back(s);
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());

    const std::map<Vertex, Natural> counts = first_hit_counts(g, anchors);

    // Union of half-graphs at the support; edges from reached vertices stay
    // inside their reachable set, so this is the induced subgraph.
    std::set<Vertex> keep;
    for (const auto& [m, c] : counts)
        for (Vertex v : reachable_from(graph, m)) keep.insert(v);
    const std::vector<Vertex> kept(keep.begin(), keep.end());
    const MultiGraph united = induced_subgraph(graph, kept);

    QuotientResult q = quotient(united, coarsest_stable_partition(united));

    // Push the counts through the quotient.
    std::vector<Natural> pushed(q.graph.vertex_count(), 0);
    for (const auto& [m, c] : counts) {
        const std::size_t local =
            std::lower_bound(kept.begin(), kept.end(), m) - kept.begin();
        pushed[q.map.class_of[local]] += c;
    }

    std::size_t comp_count = 0;
    const std::vector<std::size_t> comp_of = weak_components(q.graph, comp_count);

    SpiderDecomposition result;
    for (std::size_t c = 0; c < comp_count; ++c) {
        std::vector<Vertex> verts;
        for (Vertex v = 0; v < q.graph.vertex_count(); ++v)
            if (comp_of[v] == c) verts.push_back(v);
        SpiderComponent component;
        component.graph = induced_subgraph(q.graph, verts);
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (pushed[verts[i]] != 0) component.rho[i] = pushed[verts[i]];
        result.components.push_back(std::move(component));
    }

    std::sort(result.components.begin(), result.components.end(),
              [](const SpiderComponent& a, const SpiderComponent& b) {
                  if (a.graph.vertex_count() != b.graph.vertex_count())
                      return a.graph.vertex_count() < b.graph.vertex_count();
                  if (a.graph.adjacency() != b.graph.adjacency())
                      return a.graph.adjacency() < b.graph.adjacency();
                  return a.graph.names() < b.graph.names();
              });

    // The paper guarantees these; verify rather than assume.
    if (!is_non_redundant(q.graph))
        throw InternalError("quotient of the half-graph union is redundant");
    for (const SpiderComponent& comp : result.components) {
        if (comp.rho.empty())
            throw InternalError("spider component without attachments");
        if (!is_robust(comp.graph))
            throw InternalError("spider component is not robust");
        std::set<Vertex> covered;
        for (const auto& [m, c] : comp.rho)
            for (Vertex v : reachable_from(comp.graph, m)) covered.insert(v);
        if (covered.size() != comp.graph.vertex_count())
            throw InternalError("attachments do not cover their component");
    }
    for (std::size_t i = 0; i < result.components.size(); ++i)
        for (std::size_t j = i + 1; j < result.components.size(); ++j)
            if (graph_iso_nonredundant(result.components[i].graph,
                                       result.components[j].graph))
                throw InternalError("isomorphic components in a spider normal form");

    return result;
}

Basis initial_basis(const RootedGraph& g) {
    return Basis{g.root(), {Walk{g.root(), {}}}};
}

Basis expand_basis(const MultiGraph& g, const Basis& b, const Walk& p) {
    const auto it = std::find(b.walks.begin(), b.walks.end(), p);
    if (it == b.walks.end())
        throw InvalidArgumentError("walk to expand is not in the basis");
    const Vertex end = p.terminus();
    if (out_degree(g, end) == 0)
        throw InvalidArgumentError("cannot expand a walk ending in a sink");
    Basis out{b.origin, {}};
    for (const Walk& w : b.walks)
        if (w != p) out.walks.push_back(w);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const std::uint64_t mult = g.adjacency()[end][v];
        for (std::uint64_t c = 0; c < mult; ++c) {
            Walk extended = p;
            extended.steps.push_back(EdgeRef{end, v, c});
            out.walks.push_back(std::move(extended));
        }
    }
    return out;
}

MonoidElement basis_terminus_sum(const MultiGraph& g, const Basis& b) {
    MonoidElement sum(g.vertex_count(), 0);
    for (const Walk& w : b.walks) sum[w.terminus()] += 1;
    return sum;
}

std::optional<bool> almost_iso_basis_oracle(const MultiGraph& g, Vertex s, Vertex r,
                                            std::uint64_t budget) {
    const std::vector<Vertex> rs = roots(g);
    if (!std::binary_search(rs.begin(), rs.end(), s) ||
        !std::binary_search(rs.begin(), rs.end(), r))
        throw InvalidArgumentError("both vertices must be roots");

    // Expanding a basis walk with terminus v replaces one v in the terminus
    // multiset by v's out-neighbour multiset, so the reachable multisets are
    // exactly the forward-rewriting closure of {v : 1}.
    const std::size_t n = g.vertex_count();
    using State = std::vector<Natural>;
    const State init_s = unit_element(n, s), init_r = unit_element(n, r);
    if (init_s == init_r) return true;

    std::set<State> seen[2] = {{init_s}, {init_r}};
    std::deque<State> frontier[2] = {{init_s}, {init_r}};
    std::uint64_t generated = 0;
    std::size_t side = 0;
    while (!frontier[0].empty() || !frontier[1].empty()) {
        if (frontier[side].empty()) side ^= 1;
        const State cur = std::move(frontier[side].front());
        frontier[side].pop_front();
        for (Vertex v = 0; v < n; ++v) {
            if (cur[v] == 0 || out_degree(g, v) == 0) continue;
            State next = cur;
            next[v] -= 1;
            for (Vertex w = 0; w < n; ++w) next[w] += g.adjacency()[v][w];
            if (!seen[side].insert(next).second) continue;
            if (++generated > budget) return std::nullopt;
            if (seen[side ^ 1].count(next)) return true;
            frontier[side].push_back(std::move(next));
        }
        side ^= 1;
    }
    return std::nullopt;  // saturated without meeting; search is one-sided
}

}  // namespace treeiso
