#include "lexidim/lexicographic.hpp"

#include <algorithm>
#include <thread>

#include "lexidim/error.hpp"
#include "lexidim/profiles.hpp"

namespace lexidim {

GraphFamily expand_family(int base_order, std::vector<Graph> members) {
    if (members.size() == 1 && base_order > 1) {
        std::vector<Graph> expanded;
        expanded.reserve(static_cast<std::size_t>(base_order));
        for (int i = 0; i < base_order; ++i) {
            expanded.push_back(members[0]);
        }
        return GraphFamily{std::move(expanded)};
    }
    if (static_cast<int>(members.size()) != base_order) {
        throw Error("family", "family has " + std::to_string(members.size()) +
                                  " members but the base has order " +
                                  std::to_string(base_order));
    }
    return GraphFamily{std::move(members)};
}

GraphFamily complement(const GraphFamily& fam) {
    std::vector<Graph> members;
    members.reserve(fam.members.size());
    for (const Graph& h : fam.members) {
        members.push_back(complement(h));
    }
    return GraphFamily{std::move(members)};
}

int LexiProduct::flat_index(int base, int inner) const {
    if (base < 0 || base >= base_order || inner < 0 ||
        inner >= member_orders[static_cast<std::size_t>(base)]) {
        throw Error("index", "product coordinate out of range");
    }
    return block_offsets[static_cast<std::size_t>(base)] + inner;
}

std::pair<int, int> LexiProduct::origin_of(int flat_vertex) const {
    if (flat_vertex < 0 || flat_vertex >= flat.order()) {
        throw Error("index", "flat index out of range");
    }
    auto it = std::upper_bound(block_offsets.begin(), block_offsets.end(), flat_vertex);
    int base = static_cast<int>(it - block_offsets.begin()) - 1;
    return {base, flat_vertex - block_offsets[static_cast<std::size_t>(base)]};
}

LexiProduct build_product(const Graph& base, const GraphFamily& fam) {
    if (fam.size() != base.order()) {
        throw Error("family", "family length " + std::to_string(fam.size()) +
                                  " does not match base order " + std::to_string(base.order()));
    }
    std::vector<int> offsets{0};
    std::vector<int> orders;
    for (const Graph& h : fam.members) {
        orders.push_back(h.order());
        offsets.push_back(offsets.back() + h.order());
    }

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < base.order(); ++i) {
        int off = offsets[static_cast<std::size_t>(i)];
        for (auto [u, v] : fam[i].edges()) {
            edges.emplace_back(off + u, off + v);
        }
    }
    for (auto [a, b] : base.edges()) {
        for (int u = 0; u < orders[static_cast<std::size_t>(a)]; ++u) {
            for (int v = 0; v < orders[static_cast<std::size_t>(b)]; ++v) {
                edges.emplace_back(offsets[static_cast<std::size_t>(a)] + u,
                                   offsets[static_cast<std::size_t>(b)] + v);
            }
        }
    }
    return LexiProduct{Graph::from_edges(offsets.back(), edges), base.order(),
                       std::move(orders), std::move(offsets)};
}

int product_distance(const LexiProduct& lp, const DistanceMatrix& base_dist,
                     std::pair<int, int> a, std::pair<int, int> b) {
    if (lp.base_order < 2) {
        throw Error("order", "product distances by formula need a base of order >= 2");
    }
    lp.flat_index(a.first, a.second);
    lp.flat_index(b.first, b.second);
    if (a.first != b.first) {
        return base_dist.at(a.first, b.first);
    }
    if (a.second == b.second) {
        return 0;
    }
    // d_{H_i,2}: adjacency inside the block is read off the flat graph.
    int u = lp.flat_index(a.first, a.second);
    int v = lp.flat_index(b.first, b.second);
    return lp.flat.adjacent(u, v) ? 1 : 2;
}

namespace {

void check_members_nontrivial(const GraphFamily& fam) {
    for (int i = 0; i < fam.size(); ++i) {
        if (fam[i].order() < 2) {
            throw Error("family",
                        "family member " + std::to_string(i) + " is trivial (order < 2)");
        }
    }
}

// Sum of the two smallest values produced by eval over the class members.
template <typename Eval>
int min_pair_sum(const std::vector<int>& members, Eval eval) {
    int lo1 = kInfiniteDistance;
    int lo2 = kInfiniteDistance;
    for (int j : members) {
        int value = eval(j);
        if (value < lo1) {
            lo2 = lo1;
            lo1 = value;
        } else if (value < lo2) {
            lo2 = value;
        }
    }
    return lo1 + lo2;
}

}  // namespace

int local_T(const Graph& base, const GraphFamily& fam, const TwinPartition& p, int i) {
    if (i < 0 || i >= base.order()) {
        throw Error("index", "base vertex out of range");
    }
    check_members_nontrivial(fam);
    const TwinClass& cls = p.class_containing(i);
    switch (cls.kind) {
        case TwinKind::singleton:
            return fam[i].order();
        case TwinKind::false_twin:
            return min_pair_sum(cls.members, [&](int j) { return fam[j].min_degree() + 1; });
        case TwinKind::true_twin:
            return min_pair_sum(cls.members,
                                [&](int j) { return fam[j].order() - fam[j].max_degree(); });
    }
    throw Error("internal", "unreachable twin kind");
}

GlobalT global_T(const Graph& base, const GraphFamily& fam) {
    if (fam.size() != base.order()) {
        throw Error("family", "family length does not match base order");
    }
    TwinPartition p = twin_partition(base);
    GlobalT best{kInfiniteDistance, -1};
    for (int i = 0; i < base.order(); ++i) {
        int value = local_T(base, fam, p, i);
        if (value < best.value) {
            best = {value, i};
        }
    }
    return best;
}

DimensionalK dimensional_k(const Graph& base, const GraphFamily& fam, int threads) {
    if (base.order() < 2) {
        throw Error("order", "dimensional analysis needs a base of order >= 2");
    }
    if (!connectivity_report(base).connected) {
        throw Error("disconnected", "dimensional analysis needs a connected base");
    }
    if (fam.size() != base.order()) {
        throw Error("family", "family length does not match base order");
    }
    check_members_nontrivial(fam);

    GlobalT t = global_T(base, fam);

    std::vector<int> c_values(static_cast<std::size_t>(fam.size()));
    auto compute_range = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            c_values[static_cast<std::size_t>(i)] = global_C(fam[i]).value;
        }
    };
    if (threads <= 1 || fam.size() < 2) {
        compute_range(0, fam.size());
    } else {
        int workers = std::min(threads, fam.size());
        std::vector<std::thread> pool;
        int chunk = (fam.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            int lo = w * chunk;
            int hi = std::min(fam.size(), lo + chunk);
            if (lo < hi) {
                pool.emplace_back(compute_range, lo, hi);
            }
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    int c_fam = kInfiniteDistance;
    int c_member = -1;
    for (int i = 0; i < fam.size(); ++i) {
        if (c_values[static_cast<std::size_t>(i)] < c_fam) {
            c_fam = c_values[static_cast<std::size_t>(i)];
            c_member = i;
        }
    }
    return DimensionalK{std::min(t.value, c_fam), t.value, c_fam, t.vertex, c_member};
}

}  // namespace lexidim
