#include "treeiso/almost.hpp"

#include <algorithm>
#include <numeric>

#include "treeiso/partition.hpp"

namespace treeiso {

namespace {

bool has_edges(const MultiGraph& g) {
    for (const auto& row : g.adjacency())
        for (std::uint64_t m : row)
            if (m > 0) return true;
    return false;
}

MonoidElement rho_vector(const MultiGraph& g, const std::map<Vertex, Natural>& rho) {
    MonoidElement out(g.vertex_count(), 0);
    for (const auto& [v, mult] : rho) out[v] = mult;
    return out;
}

ComponentCertificate certify_pair(const SpiderComponent& left, const SpiderComponent& right,
                                  std::vector<Vertex> mapping) {
    ComponentCertificate cert;
    cert.component = left.graph;
    cert.left_sum = rho_vector(left.graph, left.rho);
    // Transport the right attachments back through the matching bijection.
    cert.right_sum.assign(left.graph.vertex_count(), 0);
    MonoidElement right_raw = rho_vector(right.graph, right.rho);
    for (Vertex v = 0; v < left.graph.vertex_count(); ++v)
        cert.right_sum[v] = right_raw[mapping[v]];
    cert.mapping = std::move(mapping);
    if (!has_edges(left.graph)) {
        // Free monoid: sums are equal iff they are identical.
        cert.left_normal = cert.left_sum;
        cert.right_normal = cert.right_sum;
    } else {
        const GraphMonoid monoid(left.graph);
        cert.left_normal = monoid.normal_form(cert.left_sum);
        cert.right_normal = monoid.normal_form(cert.right_sum);
    }
    cert.sums_equal = cert.left_normal == cert.right_normal;
    return cert;
}

}  // namespace

AlmostVerdict almost_iso(const RootedGraph& g, const RootedGraph& h) {
    const SpiderDecomposition left = spider_normal_form(g);
    const SpiderDecomposition right = spider_normal_form(h);

    AlmostVerdict verdict;
    std::vector<bool> taken(right.components.size(), false);
    std::vector<std::pair<std::size_t, std::vector<Vertex>>> match(left.components.size());
    for (std::size_t i = 0; i < left.components.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < right.components.size() && !found; ++j) {
            if (taken[j]) continue;
            if (auto iso = graph_iso_nonredundant(left.components[i].graph,
                                                  right.components[j].graph)) {
                taken[j] = true;
                match[i] = {j, std::move(*iso)};
                found = true;
            }
        }
        if (!found) {
            verdict.failure_reason = "unmatched component";
            verdict.unmatched = left.components[i].graph;
            verdict.unmatched_from_left = true;
            return verdict;
        }
    }
    for (std::size_t j = 0; j < right.components.size(); ++j) {
        if (!taken[j]) {
            verdict.failure_reason = "unmatched component";
            verdict.unmatched = right.components[j].graph;
            verdict.unmatched_from_left = false;
            return verdict;
        }
    }

    verdict.almost_isomorphic = true;
    for (std::size_t i = 0; i < left.components.size(); ++i) {
        ComponentCertificate cert =
            certify_pair(left.components[i], right.components[match[i].first],
                         std::move(match[i].second));
        if (!cert.sums_equal) {
            verdict.almost_isomorphic = false;
            verdict.failure_reason = "component attachment sums differ";
        }
        verdict.components.push_back(std::move(cert));
    }
    return verdict;
}

AlmostVerdict two_roots_almost_iso(const MultiGraph& g, Vertex s, Vertex r) {
    const std::vector<Vertex> rs = roots(g);
    if (!std::binary_search(rs.begin(), rs.end(), s) ||
        !std::binary_search(rs.begin(), rs.end(), r))
        throw InvalidArgumentError("both vertices must be roots");

    if (!is_non_redundant(g))
        return almost_iso(RootedGraph(g, s), RootedGraph(g, r));

    const GraphMonoid monoid(g);
    ComponentCertificate cert;
    cert.component = g;
    cert.mapping.resize(g.vertex_count());
    std::iota(cert.mapping.begin(), cert.mapping.end(), Vertex{0});
    cert.left_sum = unit_element(g.vertex_count(), s);
    cert.right_sum = unit_element(g.vertex_count(), r);
    cert.left_normal = monoid.normal_form(cert.left_sum);
    cert.right_normal = monoid.normal_form(cert.right_sum);
    cert.sums_equal = cert.left_normal == cert.right_normal;

    AlmostVerdict verdict;
    verdict.almost_isomorphic = cert.sums_equal;
    if (!cert.sums_equal) verdict.failure_reason = "root classes differ in the graph monoid";
    verdict.components.push_back(std::move(cert));
    return verdict;
}

}  // namespace treeiso
