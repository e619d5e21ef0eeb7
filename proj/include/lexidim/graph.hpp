#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lexidim {

/// Sentinel for unreachable vertex pairs. Truncated metrics treat it as 2,
/// everything else must test explicitly.
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

/// Immutable simple undirected graph over dense 0-based vertex indices.
/// Adjacency lists are kept sorted; labels are cosmetic and optional.
class Graph {
public:
    /// Edgeless graph on `order` vertices (order >= 1).
    explicit Graph(int order);

    /// Builds from an explicit edge list. Rejects out-of-range endpoints,
    /// self-loops and duplicate edges.
    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const noexcept { return edges_; }

    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;

    /// delta(G): minimum vertex degree.
    int min_degree() const;
    /// Delta(G): maximum vertex degree.
    int max_degree() const;

    std::vector<std::pair<int, int>> edges() const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::string> labels);

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;  // empty means "use indices"
    std::size_t edges_ = 0;
};

// Named generators. Vertex numbering is the conventional one: paths and
// cycles in walk order, complete bipartite with the r-side first.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int r, int s);
Graph empty_graph(int n);

/// N_G(x); throws on an out-of-range index.
std::vector<int> open_neighborhood(const Graph& g, int x);
/// N_G[x] = N_G(x) together with x itself.
std::vector<int> closed_neighborhood(const Graph& g, int x);

/// Symmetric hop-count matrix with zero diagonal; unreachable pairs hold
/// kInfiniteDistance.
class DistanceMatrix {
public:
    DistanceMatrix(int order, std::vector<int> data);

    int order() const noexcept { return n_; }
    int at(int x, int y) const;
    bool all_finite() const noexcept { return all_finite_; }

private:
    int n_;
    std::vector<int> d_;
    bool all_finite_;
};

/// BFS from every vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

/// d_{G,2}(x,y) = min{d_G(x,y), 2}; the infinity sentinel truncates to 2.
int truncated_distance(const DistanceMatrix& m, int x, int y);

Graph complement(const Graph& g);

/// Join g + h: disjoint union plus all cross edges. Vertices of g keep
/// their indices, h is shifted by |V(g)|.
Graph join(const Graph& g, const Graph& h);

struct ConnectivityReport {
    bool connected;
    std::optional<int> diameter;  // set only when connected
};

ConnectivityReport connectivity_report(const Graph& g);

}  // namespace lexidim
