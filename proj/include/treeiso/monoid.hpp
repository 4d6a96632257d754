#ifndef TREEISO_MONOID_HPP
#define TREEISO_MONOID_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treeiso/graph.hpp"
#include "treeiso/natural.hpp"

namespace treeiso {

/// An element of the free commutative monoid over the vertices: one natural
/// coefficient per vertex.
using MonoidElement = std::vector<Natural>;

/// e_v as a MonoidElement of length n.
MonoidElement unit_element(std::size_t n, Vertex v);

/// Graded-lexicographic order: total degree first, ties broken by the
/// highest-index coordinate that differs (later vertices weigh more).
bool graded_lex_less(const MonoidElement& a, const MonoidElement& b);

/// A rewrite rule lhs -> rhs with lhs greater in graded-lex order. A rule
/// applies to v iff v >= lhs componentwise, yielding v - lhs + rhs.
struct Rule {
    MonoidElement lhs;
    MonoidElement rhs;

    bool operator==(const Rule&) const = default;
};

/// A list of rules. complete() returns these terminating, inter-reduced and
/// confluent, so normal forms are unique and decide the congruence.
struct RewriteSystem {
    std::vector<Rule> rules;

    bool operator==(const RewriteSystem&) const = default;
};

/// The defining relations of the graph monoid: (e_v, Σ_w adj[v][w]·e_w) for
/// every non-sink v.
std::vector<std::pair<MonoidElement, MonoidElement>> defining_relations(const MultiGraph& g);

/// Knuth–Bendix-style completion over ℕ-vectors: orient by graded-lex,
/// inter-reduce, and add oriented differences of non-joining critical pairs
/// (overlap at the componentwise max) until all pairs join. Terminates by
/// Dickson's lemma; worst case exponential.
RewriteSystem complete(std::vector<std::pair<MonoidElement, MonoidElement>> relations);

/// Exhaustively applies rules (first applicable in list order). Unique
/// irreducible result when `sys` is canonical.
MonoidElement normal_form(const RewriteSystem& sys, MonoidElement m);

/// Post-hoc check that `sys` is inter-reduced, terminating and confluent.
bool verify_canonical(const RewriteSystem& sys);

/// The graph monoid of a fixed graph with its canonical rewriting system,
/// computed once at construction. Immutable afterwards; safe to share across
/// threads for concurrent queries.
class GraphMonoid {
public:
    explicit GraphMonoid(MultiGraph g);

    const MultiGraph& graph() const noexcept { return graph_; }
    const RewriteSystem& rules() const noexcept { return system_; }

    MonoidElement normal_form(MonoidElement m) const;
    bool equal(const MonoidElement& a, const MonoidElement& b) const;

private:
    MultiGraph graph_;
    RewriteSystem system_;
};

/// One-shot word-problem query. Builds the canonical system for g; use
/// GraphMonoid directly for repeated queries against one graph.
bool monoid_equal(const MultiGraph& g, const MonoidElement& a, const MonoidElement& b);

/// Independent congruence oracle: explores the classes of a and b by
/// applying the defining relations in both directions, pruning states with a
/// coordinate above `coord_cap`. Returns true when the explored classes
/// meet, false when both are exhausted inside the coordinate box, and
/// nullopt when `state_cap` would be exceeded (or an input lies outside the
/// box).
std::optional<bool> bfs_equal_oracle(const MultiGraph& g, const MonoidElement& a,
                                     const MonoidElement& b, std::uint64_t state_cap,
                                     std::uint64_t coord_cap);

/// Element syntax: '+'-separated terms "<coeff><vertex>" with coefficient 1
/// omitted, e.g. "3x + y"; "0" is the zero element. A term that is exactly a
/// vertex name parses as that vertex even if it starts with digits.
MonoidElement parse_element(const MultiGraph& g, std::string_view text);
std::string format_element(const MultiGraph& g, const MonoidElement& m);

/// Rules as "<lhs> -> <rhs>" lines, sorted by left-hand side.
std::string format_rules(const MultiGraph& g, const RewriteSystem& sys);

}  // namespace treeiso

#endif
