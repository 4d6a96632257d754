#include "treeiso/monoid.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace treeiso {

MonoidElement unit_element(std::size_t n, Vertex v) {
    if (v >= n) throw InvalidArgumentError("vertex index out of range");
    MonoidElement e(n, 0);
    e[v] = 1;
    return e;
}

namespace {

Natural degree(const MonoidElement& a) {
    Natural d = 0;
    for (const Natural& c : a) d += c;
    return d;
}

bool dominates(const MonoidElement& a, const MonoidElement& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

bool is_zero(const MonoidElement& a) {
    for (const Natural& c : a)
        if (c != 0) return false;
    return true;
}

/// a - lhs + rhs, defined when a >= lhs.
MonoidElement apply_rule(const MonoidElement& a, const Rule& r) {
    MonoidElement out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - r.lhs[i] + r.rhs[i];
    return out;
}

void check_length(const MonoidElement& m, std::size_t n) {
    if (m.size() != n)
        throw InvalidArgumentError("element length does not match the vertex count");
}

}  // namespace

bool graded_lex_less(const MonoidElement& a, const MonoidElement& b) {
    if (a.size() != b.size())
        throw InvalidArgumentError("comparing elements of different lengths");
    const Natural da = degree(a), db = degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

std::vector<std::pair<MonoidElement, MonoidElement>> defining_relations(const MultiGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::pair<MonoidElement, MonoidElement>> rel;
    for (Vertex v = 0; v < n; ++v) {
        if (out_degree(g, v) == 0) continue;
        MonoidElement rhs(n, 0);
        for (Vertex w = 0; w < n; ++w) rhs[w] = g.adjacency()[v][w];
        rel.emplace_back(unit_element(n, v), std::move(rhs));
    }
    return rel;
}

MonoidElement normal_form(const RewriteSystem& sys, MonoidElement m) {
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (const Rule& r : sys.rules) {
            if (dominates(m, r.lhs)) {
                m = apply_rule(m, r);
                reduced = true;
                break;
            }
        }
    }
    return m;
}

RewriteSystem complete(std::vector<std::pair<MonoidElement, MonoidElement>> relations) {
    RewriteSystem sys;
    std::deque<std::pair<MonoidElement, MonoidElement>> queue(
        std::make_move_iterator(relations.begin()), std::make_move_iterator(relations.end()));

    auto enqueue_critical_pairs = [&](const Rule& fresh) {
        for (const Rule& other : sys.rules) {
            if (&other == &fresh) continue;
            MonoidElement overlap(fresh.lhs.size());
            for (std::size_t i = 0; i < overlap.size(); ++i)
                overlap[i] = std::max(fresh.lhs[i], other.lhs[i]);
            queue.emplace_back(apply_rule(overlap, fresh), apply_rule(overlap, other));
        }
    };

    while (true) {
        while (!queue.empty()) {
            auto [a, b] = std::move(queue.front());
            queue.pop_front();
            a = normal_form(sys, std::move(a));
            b = normal_form(sys, std::move(b));
            if (a == b) continue;
            Rule fresh = graded_lex_less(a, b) ? Rule{std::move(b), std::move(a)}
                                               : Rule{std::move(a), std::move(b)};
            // Retire rules whose lhs the new rule reduces; their content is
            // requeued and re-derived in reduced form.
            std::vector<Rule> kept;
            kept.reserve(sys.rules.size() + 1);
            for (Rule& r : sys.rules) {
                if (dominates(r.lhs, fresh.lhs))
                    queue.emplace_back(std::move(r.lhs), std::move(r.rhs));
                else
                    kept.push_back(std::move(r));
            }
            sys.rules = std::move(kept);
            sys.rules.push_back(std::move(fresh));
            for (Rule& r : sys.rules) r.rhs = normal_form(sys, std::move(r.rhs));
            enqueue_critical_pairs(sys.rules.back());
        }
        // Final sweep: requeue any critical pair that does not join yet.
        for (std::size_t i = 0; i < sys.rules.size() && queue.empty(); ++i) {
            for (std::size_t j = i + 1; j < sys.rules.size() && queue.empty(); ++j) {
                MonoidElement overlap(sys.rules[i].lhs.size());
                for (std::size_t k = 0; k < overlap.size(); ++k)
                    overlap[k] = std::max(sys.rules[i].lhs[k], sys.rules[j].lhs[k]);
                MonoidElement left = normal_form(sys, apply_rule(overlap, sys.rules[i]));
                MonoidElement right = normal_form(sys, apply_rule(overlap, sys.rules[j]));
                if (left != right) queue.emplace_back(std::move(left), std::move(right));
            }
        }
        if (queue.empty()) break;
    }

    std::sort(sys.rules.begin(), sys.rules.end(),
              [](const Rule& a, const Rule& b) { return graded_lex_less(a.lhs, b.lhs); });
    return sys;
}

bool verify_canonical(const RewriteSystem& sys) {
    for (const Rule& r : sys.rules) {
        if (is_zero(r.lhs)) return false;
        if (!graded_lex_less(r.rhs, r.lhs)) return false;
    }
    for (std::size_t i = 0; i < sys.rules.size(); ++i) {
        for (std::size_t j = 0; j < sys.rules.size(); ++j) {
            if (i != j && dominates(sys.rules[i].lhs, sys.rules[j].lhs)) return false;
        }
        RewriteSystem others;
        for (std::size_t j = 0; j < sys.rules.size(); ++j)
            if (j != i) others.rules.push_back(sys.rules[j]);
        if (normal_form(others, sys.rules[i].rhs) != sys.rules[i].rhs) return false;
    }
    for (std::size_t i = 0; i < sys.rules.size(); ++i) {
        for (std::size_t j = i + 1; j < sys.rules.size(); ++j) {
            MonoidElement overlap(sys.rules[i].lhs.size());
            for (std::size_t k = 0; k < overlap.size(); ++k)
                overlap[k] = std::max(sys.rules[i].lhs[k], sys.rules[j].lhs[k]);
            if (normal_form(sys, apply_rule(overlap, sys.rules[i])) !=
                normal_form(sys, apply_rule(overlap, sys.rules[j])))
                return false;
        }
    }
    return true;
}

GraphMonoid::GraphMonoid(MultiGraph g)
    : graph_(std::move(g)), system_(complete(defining_relations(graph_))) {}

MonoidElement GraphMonoid::normal_form(MonoidElement m) const {
    check_length(m, graph_.vertex_count());
    return treeiso::normal_form(system_, std::move(m));
}

bool GraphMonoid::equal(const MonoidElement& a, const MonoidElement& b) const {
    return normal_form(a) == normal_form(b);
}

bool monoid_equal(const MultiGraph& g, const MonoidElement& a, const MonoidElement& b) {
    return GraphMonoid(g).equal(a, b);
}

namespace {

/// Shared state-space walker for bfs_equal_oracle. Coordinates are kept as
/// machine words; anything above coord_cap is pruned.
class CongruenceSearch {
public:
    CongruenceSearch(const MultiGraph& g, std::uint64_t state_cap, std::uint64_t coord_cap)
        : n_(g.vertex_count()), state_cap_(state_cap), coord_cap_(coord_cap) {
        for (auto& [v, row] : defining_relations(g)) {
            Vertex vi = 0;
            for (std::size_t i = 0; i < n_; ++i)
                if (v[i] == 1) vi = static_cast<Vertex>(i);
            std::vector<std::uint64_t> r(n_);
            bool fits = true;
            for (std::size_t i = 0; i < n_; ++i) {
                if (row[i] > coord_cap_) fits = false;
                r[i] = fits ? static_cast<std::uint64_t>(row[i]) : 0;
            }
            // A row that itself exceeds the box can never fire inside it.
            if (fits) relations_.emplace_back(vi, std::move(r));
        }
    }

    std::optional<bool> run(const MonoidElement& a, const MonoidElement& b) {
        auto sa = to_state(a), sb = to_state(b);
        if (!sa || !sb) return std::nullopt;  // outside the box: cannot explore
        if (*sa == *sb) return true;
        if (!insert(0, *sa)) return std::nullopt;
        if (!insert(1, *sb)) return std::nullopt;
        std::size_t side = 0;
        while (!frontier_[0].empty() || !frontier_[1].empty()) {
            if (frontier_[side].empty()) side ^= 1;
            State s = std::move(frontier_[side].front());
            frontier_[side].pop_front();
            for (const auto& [v, row] : relations_) {
                // forward: replace one v by its out-neighbour row
                if (s[v] >= 1) {
                    State t = s;
                    t[v] -= 1;
                    bool ok = true;
                    for (std::size_t i = 0; i < n_ && ok; ++i) {
                        t[i] += row[i];
                        if (t[i] > coord_cap_) ok = false;
                    }
                    if (ok) {
                        if (seen_[side ^ 1].count(t)) return true;
                        if (!insert(side, t)) return std::nullopt;
                    }
                }
                // backward: replace the row by one v
                bool ge = true;
                for (std::size_t i = 0; i < n_ && ge; ++i) ge = s[i] >= row[i];
                if (ge) {
                    State t = s;
                    for (std::size_t i = 0; i < n_; ++i) t[i] -= row[i];
                    t[v] += 1;
                    if (t[v] <= coord_cap_) {
                        if (seen_[side ^ 1].count(t)) return true;
                        if (!insert(side, t)) return std::nullopt;
                    }
                }
            }
            side ^= 1;
        }
        return false;
    }

private:
    using State = std::vector<std::uint64_t>;

    std::optional<State> to_state(const MonoidElement& m) const {
        State s(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (m[i] > coord_cap_) return std::nullopt;
            s[i] = static_cast<std::uint64_t>(m[i]);
        }
        return s;
    }

    bool insert(std::size_t side, const State& s) {
        if (!seen_[side].insert(s).second) return true;  // already known
        if (seen_[0].size() + seen_[1].size() > state_cap_) return false;
        frontier_[side].push_back(s);
        return true;
    }

    std::size_t n_;
    std::uint64_t state_cap_;
    std::uint64_t coord_cap_;
    std::vector<std::pair<Vertex, State>> relations_;
    std::set<State> seen_[2];
    std::deque<State> frontier_[2];
};

}  // namespace

std::optional<bool> bfs_equal_oracle(const MultiGraph& g, const MonoidElement& a,
                                     const MonoidElement& b, std::uint64_t state_cap,
                                     std::uint64_t coord_cap) {
    if (state_cap < 1 || coord_cap < 1)
        throw InvalidArgumentError("oracle caps must be at least 1");
    check_length(a, g.vertex_count());
    check_length(b, g.vertex_count());
    return CongruenceSearch(g, state_cap, coord_cap).run(a, b);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

MonoidElement parse_element(const MultiGraph& g, std::string_view text) {
    MonoidElement m(g.vertex_count(), 0);
    std::size_t pos = 0;
    bool any = false;
    while (pos <= text.size()) {
        const std::size_t plus = std::min(text.find('+', pos), text.size());
        std::string_view term = trim(text.substr(pos, plus - pos));
        pos = plus + 1;
        if (term.empty()) {
            if (any || pos <= text.size()) throw InvalidArgumentError("empty term in element");
            break;
        }
        any = true;
        if (term == "0") continue;
        if (auto v = g.find_vertex(term)) {
            m[*v] += 1;
            continue;
        }
        std::size_t d = 0;
        while (d < term.size() && term[d] >= '0' && term[d] <= '9') ++d;
        if (d == 0 || d == term.size())
            throw InvalidArgumentError("cannot parse element term '" + std::string(term) + "'");
        Natural coeff(std::string(term.substr(0, d)));
        std::string_view rest = trim(term.substr(d));
        if (!rest.empty() && rest.front() == '*') rest = trim(rest.substr(1));
        const auto v = g.find_vertex(rest);
        if (!v)
            throw InvalidArgumentError("unknown vertex in element term '" + std::string(term) + "'");
        m[*v] += coeff;
    }
    if (!any) throw InvalidArgumentError("empty element");
    return m;
}

std::string format_element(const MultiGraph& g, const MonoidElement& m) {
    check_length(m, g.vertex_count());
    std::string out;
    for (Vertex v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!out.empty()) out += " + ";
        if (m[v] != 1) out += m[v].str();
        out += g.name(v);
    }
    return out.empty() ? "0" : out;
}

std::string format_rules(const MultiGraph& g, const RewriteSystem& sys) {
    std::vector<Rule> rules = sys.rules;
    std::sort(rules.begin(), rules.end(),
              [](const Rule& a, const Rule& b) { return graded_lex_less(a.lhs, b.lhs); });
    std::string out;
    for (const Rule& r : rules) {
        out += format_element(g, r.lhs);
        out += " -> ";
        out += format_element(g, r.rhs);
        out += '\n';
    }
    return out;
}

}  // namespace treeiso
