#pragma once

#include <cstddef>
#include <deque>
#include <vector>

#include "automin/word.hh"

namespace automin::detail {

/// Breadth-first numbering from `roots`, successors visited in the order the
/// callback lists them. States not reached are numbered afterwards by
/// restarting the search from the smallest unvisited index, which makes the
/// renumbering idempotent. Returns old index → new index.
template <class Successors>
std::vector<State> canonical_order(std::size_t n, const std::vector<State>& roots, Successors&& successors) {
    constexpr State unset = static_cast<State>(-1);
    std::vector<State> rank(n, unset);
    State next = 0;
    auto bfs = [&](const std::vector<State>& from) {
        std::deque<State> queue;
        for (State r : from) {
            if (rank[r] == unset) {
                rank[r] = next++;
                queue.push_back(r);
            }
        }
        while (!queue.empty()) {
            const State q = queue.front();
            queue.pop_front();
            successors(q, [&](State s) {
                if (rank[s] == unset) {
                    rank[s] = next++;
                    queue.push_back(s);
                }
            });
        }
    };
    bfs(roots);
    for (State q = 0; q < n; ++q) {
        if (rank[q] == unset) bfs({q});
    }
    return rank;
}

} // namespace automin::detail
