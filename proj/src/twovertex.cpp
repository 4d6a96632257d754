#include "treeiso/twovertex.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "treeiso/monoid.hpp"

namespace treeiso {

MultiGraph two_vertex_graph(const TwoVertexGraph& t) {
    return MultiGraph({"x", "y"}, {{t.A, t.B}, {t.C, t.D}});
}

bool closed_form_d0(std::uint64_t A, std::uint64_t B, std::uint64_t C) {
    if (C == 0) throw InvalidArgumentError("closed_form_d0 requires C > 0");
    return C == 1 || (B == 1 && A == 0);
}

bool closed_form_b1d2(std::uint64_t A, std::uint64_t C) {
    if (A == 0 || C == 0 || A < C + 2)
        throw InvalidArgumentError("closed_form_b1d2 requires A, C > 0 and A >= C + 2");
    const std::uint64_t n = A - C - 1;
    return A % n == 0;
}

TwoVertexGraph matrix_reduce(TwoVertexGraph t) {
    while (t.A > 0 && t.B > 0 && t.C > 0 && t.D > 0) {
        if (t.A >= t.C && t.B >= t.D)
            t = {t.A - t.C, t.B - t.D + 1, t.C, t.D};
        else if (t.C >= t.A && t.D >= t.B)
            t = {t.A, t.B, t.C - t.A + 1, t.D - t.B};
        else
            break;  // (A-C)(B-D) < 0
    }
    return t;
}

std::vector<std::array<std::uint64_t, 4>> conjecture_scan(std::uint64_t max, unsigned jobs) {
    if (max < 1) throw InvalidArgumentError("conjecture_scan requires max >= 1");
    if (jobs < 1) jobs = 1;

    std::vector<TwoVertexGraph> cells;
    for (std::uint64_t a = 1; a <= max; ++a)
        for (std::uint64_t b = 1; b <= max; ++b)
            for (std::uint64_t c = 1; c <= max; ++c)
                for (std::uint64_t d = 1; d <= a && d <= max; ++d) {
                    const bool sign_split = (a > c && b < d) || (a < c && b > d);
                    if (sign_split) cells.push_back({a, b, c, d});
                }

    std::vector<std::array<std::uint64_t, 4>> found;
    std::mutex found_mutex;
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= cells.size()) break;
            const TwoVertexGraph& t = cells[i];
            const MultiGraph g = two_vertex_graph(t);
            const bool verdict = monoid_equal(g, unit_element(2, 0), unit_element(2, 1));
            const bool predicted =
                t.B == 1 && t.D == 2 && t.A >= t.C + 2 && t.A % (t.A - t.C - 1) == 0;
            if (verdict != predicted) {
                std::lock_guard lock(found_mutex);
                found.push_back({t.A, t.B, t.C, t.D});
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace treeiso
