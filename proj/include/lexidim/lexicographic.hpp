#pragma once

#include <utility>
#include <vector>

#include "lexidim/graph.hpp"
#include "lexidim/twins.hpp"

namespace lexidim {

/// Per-base-vertex family H = {H_1, ..., H_n}, aligned with V(G) order.
struct GraphFamily {
    std::vector<Graph> members;

    int size() const noexcept { return static_cast<int>(members.size()); }
    const Graph& operator[](int i) const { return members[static_cast<std::size_t>(i)]; }
};

/// Expands a one-member list to base_order copies (the uniform G o H case);
/// otherwise requires an exact length match.
GraphFamily expand_family(int base_order, std::vector<Graph> members);

/// Member-wise complement.
GraphFamily complement(const GraphFamily& fam);

/// Materialized lexicographic product. Inner vertices of H_i occupy the
/// contiguous flat range [block_offsets[i], block_offsets[i+1]).
struct LexiProduct {
    Graph flat;
    int base_order;
    std::vector<int> member_orders;
    std::vector<int> block_offsets;  // size base_order + 1

    int flat_index(int base, int inner) const;
    std::pair<int, int> origin_of(int flat_vertex) const;
};

/// Builds G o H. (a,v) ~ (b,w) iff ab is a base edge, or a = b and vw is an
/// edge of H_a.
LexiProduct build_product(const Graph& base, const GraphFamily& fam);

/// Product distance by formula: d_G(u_i,u_j) across blocks, d_{H_i,2}(v,w)
/// inside a block. Requires a connected base of order >= 2.
int product_distance(const LexiProduct& lp, const DistanceMatrix& base_dist,
                     std::pair<int, int> a, std::pair<int, int> b);

/// T(u_i, H): |V(H_i)| for a singleton base vertex; over its twin class,
/// min delta(H_j)+delta(H_l)+2 for false twins and
/// min (|V(H_j)|-Delta(H_j))+(|V(H_l)|-Delta(H_l)) for true twins.
int local_T(const Graph& base, const GraphFamily& fam, const TwinPartition& p, int i);

struct GlobalT {
    int value;
    int vertex;  // first base vertex attaining the minimum
};

/// T(G o H) = min_i T(u_i, H).
GlobalT global_T(const Graph& base, const GraphFamily& fam);

/// The value k for which G o H is k-metric dimensional, computed without
/// materializing the product: k = min{T(G o H), C(H)}.
struct DimensionalK {
    int k;
    int T;
    int C_fam;
    int T_vertex;  // argmin base vertex for T
    int C_member;  // argmin family index for C_fam
};

DimensionalK dimensional_k(const Graph& base, const GraphFamily& fam, int threads = 1);

}  // namespace lexidim
