#include "lexidim/profiles.hpp"

#include "lexidim/error.hpp"

namespace lexidim {

std::vector<int> to_vertex_list(const VertexSet& set) {
    std::vector<int> out;
    out.reserve(set.count());
    for (std::size_t v = set.find_first(); v != VertexSet::npos; v = set.find_next(v)) {
        out.push_back(static_cast<int>(v));
    }
    return out;
}

VertexSet make_vertex_set(int order, const std::vector<int>& members) {
    VertexSet set(static_cast<std::size_t>(order));
    for (int v : members) {
        set.set(static_cast<std::size_t>(v));
    }
    return set;
}

namespace {

void check_pair(const Graph& g, int x, int y) {
    if (x < 0 || x >= g.order() || y < 0 || y >= g.order()) {
        throw Error("index", "vertex pair out of range");
    }
    if (x == y) {
        throw Error("parse", "distinctive sets need two distinct vertices");
    }
}

}  // namespace

VertexSet distinctive_set(const Graph& g, const DistanceMatrix& m, int x, int y) {
    check_pair(g, x, y);
    if (!m.all_finite()) {
        throw Error("disconnected", "metric distinctive sets require a connected graph");
    }
    const int n = g.order();
    VertexSet set(static_cast<std::size_t>(n));
    for (int z = 0; z < n; ++z) {
        if (m.at(x, z) != m.at(y, z)) {
            set.set(static_cast<std::size_t>(z));
        }
    }
    return set;
}

VertexSet adjacency_distinctive_set(const Graph& g, int x, int y) {
    check_pair(g, x, y);
    const int n = g.order();
    VertexSet set(static_cast<std::size_t>(n));
    for (int w : g.neighbors(x)) {
        set.flip(static_cast<std::size_t>(w));
    }
    for (int w : g.neighbors(y)) {
        set.flip(static_cast<std::size_t>(w));
    }
    set.set(static_cast<std::size_t>(x));
    set.set(static_cast<std::size_t>(y));
    return set;
}

VertexSet PairProfile::metric_nontrivial() const {
    VertexSet set = metric_distinctive;
    set.reset(static_cast<std::size_t>(x));
    set.reset(static_cast<std::size_t>(y));
    return set;
}

VertexSet PairProfile::adjacency_nontrivial() const {
    VertexSet set = adjacency_distinctive;
    set.reset(static_cast<std::size_t>(x));
    set.reset(static_cast<std::size_t>(y));
    return set;
}

PairProfile pair_profile(const Graph& g, const DistanceMatrix& m, int x, int y) {
    return PairProfile{x, y, distinctive_set(g, m, x, y), adjacency_distinctive_set(g, x, y)};
}

GlobalMin global_D(const Graph& g) {
    if (g.order() < 2) {
        throw Error("order", "D(G) needs at least two vertices");
    }
    DistanceMatrix m = all_pairs_distances(g);
    if (!m.all_finite()) {
        throw Error("disconnected", "D(G) requires a connected graph");
    }
    GlobalMin best{g.order() + 1, -1, -1};
    for (int x = 0; x < g.order(); ++x) {
        for (int y = x + 1; y < g.order(); ++y) {
            int size = static_cast<int>(distinctive_set(g, m, x, y).count());
            if (size < best.value) {
                best = {size, x, y};
            }
        }
    }
    return best;
}

GlobalMin global_C(const Graph& g) {
    if (g.order() < 2) {
        throw Error("order", "C(G) needs at least two vertices");
    }
    GlobalMin best{g.order() + 1, -1, -1};
    for (int x = 0; x < g.order(); ++x) {
        for (int y = x + 1; y < g.order(); ++y) {
            int size = static_cast<int>(adjacency_distinctive_set(g, x, y).count());
            if (size < best.value) {
                best = {size, x, y};
            }
        }
    }
    return best;
}

}  // namespace lexidim
