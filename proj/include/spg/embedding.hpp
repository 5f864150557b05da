#pragma once

// Backtracking subgraph embedding. Included from board.hpp.

#include <chrono>
#include <vector>

#include "spg/board.hpp"

namespace spg {

namespace detail {

/// Static matching order: the highest-degree vertex first, then repeatedly the
/// vertex with the most already-ordered neighbours (ties: degree, then id).
struct EmbeddingPlan {
    std::vector<int> order;
    /// For order[k], the positions (< k) of its ordered neighbours.
    std::vector<std::vector<int>> back;
};

EmbeddingPlan plan_embedding(const Board& pattern);

class SearchClock {
public:
    explicit SearchClock(const EmbeddingBudget& budget);
    void tick();

private:
    EmbeddingBudget budget_;
    std::size_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

template <typename Visitor>
void for_each_embedding(const Board& pattern, const Board& host, Visitor&& visit,
                        const EmbeddingBudget& budget)
{
    const int np = pattern.num_vertices();
    const int nh = host.num_vertices();
    std::vector<int> image(static_cast<std::size_t>(np), -1);
    if (np == 0) {
        visit(image);
        return;
    }
    if (np > nh || pattern.num_edges() > host.num_edges()) {
        return;
    }
    const auto plan = detail::plan_embedding(pattern);
    detail::SearchClock clock(budget);
    std::vector<char> used(static_cast<std::size_t>(nh), 0);
    std::vector<int> all_host(static_cast<std::size_t>(nh));
    for (int h = 0; h < nh; ++h) {
        all_host[static_cast<std::size_t>(h)] = h;
    }
    bool stop = false;

    auto unused_neighbors = [&](int h) {
        int c = 0;
        for (int w : host.neighbors(h)) {
            c += used[static_cast<std::size_t>(w)] ? 0 : 1;
        }
        return c;
    };

    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == plan.order.size()) {
            if (!visit(static_cast<const std::vector<int>&>(image))) {
                stop = true;
            }
            return;
        }
        clock.tick();
        const int p = plan.order[k];
        const auto& back = plan.back[k];
        const int pdeg = pattern.degree(p);
        const int pending = pdeg - static_cast<int>(back.size());
        const std::vector<int>& candidates =
            back.empty() ? all_host
                         : host.neighbors(image[static_cast<std::size_t>(plan.order[static_cast<std::size_t>(back.front())])]);
        for (int h : candidates) {
            if (stop) {
                return;
            }
            if (used[static_cast<std::size_t>(h)] || host.degree(h) < pdeg) {
                continue;
            }
            bool ok = true;
            for (std::size_t b = 1; b < back.size() && ok; ++b) {
                const int q = plan.order[static_cast<std::size_t>(back[b])];
                ok = host.adjacent(h, image[static_cast<std::size_t>(q)]);
            }
            if (!ok || unused_neighbors(h) < pending) {
                continue;
            }
            used[static_cast<std::size_t>(h)] = 1;
            image[static_cast<std::size_t>(p)] = h;
            self(self, k + 1);
            image[static_cast<std::size_t>(p)] = -1;
            used[static_cast<std::size_t>(h)] = 0;
        }
    };
    rec(rec, 0);
}

} // namespace spg
