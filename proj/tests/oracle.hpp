// Brute-force reference implementations used only by tests. Deliberately
// independent of the library's computation paths: distances come from
// Floyd-Warshall, feasibility is checked straight off the generator
// definitions, and minimization enumerates subsets in (size, lex) order.
#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "lexidim/graph.hpp"

namespace testoracle {

inline std::vector<std::vector<int>> floyd_distances(const lexidim::Graph& g) {
    const int n = g.order();
    const int kFar = 1 << 28;
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), kFar));
    for (int v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (int w : g.neighbors(v)) {
            d[v][w] = 1;
        }
    }
    for (int m = 0; m < n; ++m) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (d[i][m] + d[m][j] < d[i][j]) {
                    d[i][j] = d[i][m] + d[m][j];
                }
            }
        }
    }
    return d;
}

// One bitmask per unordered pair: the vertices distinguishing it under the
// plain metric or the 2-truncated metric. Requires order <= 64.
inline std::vector<std::uint64_t> pair_masks(const lexidim::Graph& g, bool adjacency) {
    const int n = g.order();
    auto d = floyd_distances(g);
    auto metric = [&](int a, int b) {
        int dist = d[a][b];
        return adjacency ? (dist > 2 ? 2 : dist) : dist;
    };
    std::vector<std::uint64_t> masks;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t mask = 0;
            for (int w = 0; w < n; ++w) {
                if (metric(u, w) != metric(v, w)) {
                    mask |= std::uint64_t{1} << w;
                }
            }
            masks.push_back(mask);
        }
    }
    return masks;
}

inline bool mask_feasible(const std::vector<std::uint64_t>& masks, std::uint64_t candidate,
                          int k) {
    for (std::uint64_t mask : masks) {
        if (std::popcount(mask & candidate) < k) {
            return false;
        }
    }
    return true;
}

// Visits r-subsets of {0..n-1} in lexicographic order; visit returns false
// to stop.
template <typename Visit>
inline void combinations(int n, int r, Visit visit) {
    if (r < 0 || r > n) {
        return;
    }
    std::vector<int> combo(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        combo[i] = i;
    }
    while (true) {
        if (!visit(combo)) {
            return;
        }
        int i = r - 1;
        while (i >= 0 && combo[i] == n - r + i) {
            --i;
        }
        if (i < 0) {
            return;
        }
        ++combo[i];
        for (int j = i + 1; j < r; ++j) {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

inline std::uint64_t to_mask(const std::vector<int>& vertices) {
    std::uint64_t mask = 0;
    for (int v : vertices) {
        mask |= std::uint64_t{1} << v;
    }
    return mask;
}

struct NaiveResult {
    int value;
    std::vector<int> witness;  // lexicographically smallest optimum
};

/// First feasible subset in (size, lex) order.
inline NaiveResult naive_dimension(const lexidim::Graph& g, int k, bool adjacency) {
    auto masks = pair_masks(g, adjacency);
    for (int size = 0; size <= g.order(); ++size) {
        NaiveResult found{-1, {}};
        combinations(g.order(), size, [&](const std::vector<int>& combo) {
            if (mask_feasible(masks, to_mask(combo), k)) {
                found = {size, combo};
                return false;
            }
            return true;
        });
        if (found.value >= 0) {
            return found;
        }
    }
    return {-1, {}};
}

/// All minimum feasible subsets, in lexicographic order.
inline std::vector<std::vector<int>> naive_all_minimum(const lexidim::Graph& g, int k,
                                                       bool adjacency) {
    NaiveResult min = naive_dimension(g, k, adjacency);
    std::vector<std::vector<int>> out;
    if (min.value < 0) {
        return out;
    }
    auto masks = pair_masks(g, adjacency);
    combinations(g.order(), min.value, [&](const std::vector<int>& combo) {
        if (mask_feasible(masks, to_mask(combo), k)) {
            out.push_back(combo);
        }
        return true;
    });
    return out;
}

/// Largest k admitting a generator: the smallest pair-mask popcount.
inline int naive_largest_valid_k(const lexidim::Graph& g, bool adjacency) {
    auto masks = pair_masks(g, adjacency);
    int best = g.order();
    for (std::uint64_t mask : masks) {
        best = std::min(best, std::popcount(mask));
    }
    return best;
}

inline lexidim::Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return lexidim::Graph::from_edges(n, edges);
}

/// Random spanning tree plus extra edges kept with probability p.
inline lexidim::Graph random_connected_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool in_tree = false;
            for (auto [a, b] : edges) {
                if ((a == u && b == v) || (a == v && b == u)) {
                    in_tree = true;
                    break;
                }
            }
            if (!in_tree && coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return lexidim::Graph::from_edges(n, edges);
}

}  // namespace testoracle
