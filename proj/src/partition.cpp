#include "treeiso/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace treeiso {

std::vector<Vertex> Partition::members(std::size_t c) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < class_of.size(); ++v)
        if (class_of[v] == c) out.push_back(v);
    return out;
}

Partition Partition::canonical(std::vector<std::size_t> raw_class_of) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> renum;
    Partition p;
    p.class_of.assign(raw_class_of.size(), 0);
    for (Vertex v = 0; v < raw_class_of.size(); ++v) {
        const std::size_t raw = raw_class_of[v];
        if (renum.size() <= raw) renum.resize(raw + 1, unset);
        if (renum[raw] == unset) renum[raw] = p.class_count++;
        p.class_of[v] = renum[raw];
    }
    return p;
}

Partition Partition::single_class(std::size_t n) {
    Partition p;
    p.class_of.assign(n, 0);
    p.class_count = n > 0 ? 1 : 0;
    return p;
}

Partition Partition::discrete(std::size_t n) {
    Partition p;
    p.class_of.resize(n);
    for (std::size_t v = 0; v < n; ++v) p.class_of[v] = v;
    p.class_count = n;
    return p;
}

namespace {

void check_covers(const MultiGraph& g, const Partition& p) {
    if (p.class_of.size() != g.vertex_count())
        throw InvalidArgumentError("partition does not cover the graph's vertices");
    std::vector<bool> present(p.class_count, false);
    for (std::size_t c : p.class_of) {
        if (c >= p.class_count)
            throw InvalidArgumentError("partition class id out of range");
        present[c] = true;
    }
    for (bool b : present)
        if (!b) throw InvalidArgumentError("partition has an empty class");
}

/// Per-class out-count vector of v under p.
std::vector<std::uint64_t> class_counts(const MultiGraph& g, const Partition& p, Vertex v) {
    std::vector<std::uint64_t> counts(p.class_count, 0);
    for (Vertex w = 0; w < g.vertex_count(); ++w)
        counts[p.class_of[w]] += g.adjacency()[v][w];
    return counts;
}

}  // namespace

bool is_stable(const MultiGraph& g, const Partition& p) {
    check_covers(g, p);
    std::vector<std::vector<std::uint64_t>> seen(p.class_count);
    std::vector<bool> have(p.class_count, false);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto counts = class_counts(g, p, v);
        const std::size_t c = p.class_of[v];
        if (!have[c]) {
            seen[c] = std::move(counts);
            have[c] = true;
        } else if (seen[c] != counts) {
            return false;
        }
    }
    return true;
}

Partition coarsest_stable_partition(const MultiGraph& g,
                                    const std::optional<Partition>& seed) {
    const std::size_t n = g.vertex_count();
    Partition p = seed ? Partition::canonical(seed->class_of) : Partition::single_class(n);
    if (seed) check_covers(g, p);
    while (true) {
        using Signature = std::pair<std::size_t, std::vector<std::uint64_t>>;
        std::map<Signature, std::size_t> ids;
        std::vector<std::size_t> next(n);
        for (Vertex v = 0; v < n; ++v) {
            Signature sig{p.class_of[v], class_counts(g, p, v)};
            auto [it, fresh] = ids.emplace(std::move(sig), ids.size());
            next[v] = it->second;
        }
        if (ids.size() == p.class_count) break;  // refinement only splits
        p = Partition::canonical(std::move(next));
    }
    return p;
}

QuotientResult quotient(const MultiGraph& g, const Partition& p) {
    check_covers(g, p);
    if (!is_stable(g, p))
        throw InvalidArgumentError("quotient requires a stable partition");
    const Partition canon = Partition::canonical(p.class_of);
    const std::size_t k = canon.class_count;
    std::vector<Vertex> rep(k, static_cast<Vertex>(-1));
    for (Vertex v = g.vertex_count(); v-- > 0;) rep[canon.class_of[v]] = v;
    std::vector<std::string> names;
    names.reserve(k);
    std::vector<std::vector<std::uint64_t>> adj(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t c = 0; c < k; ++c) {
        names.push_back(g.name(rep[c]));
        adj[c] = class_counts(g, canon, rep[c]);
    }
    return {MultiGraph(std::move(names), std::move(adj)), canon};
}

bool is_non_redundant(const MultiGraph& g) {
    return coarsest_stable_partition(g).is_discrete();
}

ReduceResult reduce(const RootedGraph& g) {
    Partition p = coarsest_stable_partition(g.graph());
    QuotientResult q = quotient(g.graph(), p);
    const std::size_t root_class = q.map.class_of[g.root()];
    return {RootedGraph(std::move(q.graph), root_class), std::move(q.map)};
}

Partition matched_classes(const MultiGraph& g, const MultiGraph& h) {
    return coarsest_stable_partition(disjoint_union(g, h));
}

namespace {

std::optional<std::vector<Vertex>> match_nonredundant(const MultiGraph& g,
                                                      const MultiGraph& h,
                                                      const Partition& classes) {
    const std::size_t n = g.vertex_count(), m = h.vertex_count();
    if (n != m) return std::nullopt;
    constexpr Vertex unset = static_cast<Vertex>(-1);
    std::vector<Vertex> left(classes.class_count, unset), right(classes.class_count, unset);
    for (Vertex v = 0; v < n; ++v) {
        if (left[classes.class_of[v]] != unset) return std::nullopt;
        left[classes.class_of[v]] = v;
    }
    for (Vertex w = 0; w < m; ++w) {
        if (right[classes.class_of[n + w]] != unset) return std::nullopt;
        right[classes.class_of[n + w]] = w;
    }
    std::vector<Vertex> bijection(n);
    for (std::size_t c = 0; c < classes.class_count; ++c) {
        if (left[c] == unset || right[c] == unset) return std::nullopt;
        bijection[left[c]] = right[c];
    }
    return bijection;
}

}  // namespace

std::optional<std::vector<Vertex>> rooted_iso_nonredundant(const RootedGraph& g,
                                                           const RootedGraph& h) {
    if (!is_non_redundant(g.graph()) || !is_non_redundant(h.graph()))
        throw InvalidArgumentError("rooted_iso_nonredundant requires non-redundant inputs");
    const Partition classes = matched_classes(g.graph(), h.graph());
    if (classes.class_of[g.root()] !=
        classes.class_of[g.graph().vertex_count() + h.root()])
        return std::nullopt;
    return match_nonredundant(g.graph(), h.graph(), classes);
}

std::optional<std::vector<Vertex>> graph_iso_nonredundant(const MultiGraph& g,
                                                          const MultiGraph& h) {
    if (!is_non_redundant(g) || !is_non_redundant(h))
        throw InvalidArgumentError("graph_iso_nonredundant requires non-redundant inputs");
    return match_nonredundant(g, h, matched_classes(g, h));
}

std::string to_text(const Partition& p, const MultiGraph& g) {
    std::ostringstream out;
    for (std::size_t c = 0; c < p.class_count; ++c) {
        out << "class " << c << ":";
        for (Vertex v : p.members(c)) out << ' ' << g.name(v);
        out << '\n';
    }
    return out.str();
}

}  // namespace treeiso
