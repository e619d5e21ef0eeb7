#include "lexidim/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "lexidim/error.hpp"

namespace lexidim {

Graph::Graph(int order) {
    if (order < 1) {
        throw Error("order", "graph order must be >= 1, got " + std::to_string(order));
    }
    adj_.resize(static_cast<std::size_t>(order));
}

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    Graph g(order);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= order || v < 0 || v >= order) {
            throw Error("index", "edge endpoint out of range: " + std::to_string(u) + " " +
                                     std::to_string(v) + " (order " + std::to_string(order) + ")");
        }
        if (u == v) {
            throw Error("parse", "self-loop at vertex " + std::to_string(u));
        }
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            throw Error("parse", "duplicate edge " + std::to_string(key.first) + " " +
                                     std::to_string(key.second));
        }
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
        ++g.edges_;
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order()) {
        throw Error("index", "vertex index " + std::to_string(v) + " out of range [0, " +
                                 std::to_string(order()) + ")");
    }
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

int Graph::min_degree() const {
    int best = order();
    for (const auto& nbrs : adj_) {
        best = std::min(best, static_cast<int>(nbrs.size()));
    }
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adj_) {
        best = std::max(best, static_cast<int>(nbrs.size()));
    }
    return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int u = 0; u < order(); ++u) {
        for (int v : adj_[static_cast<std::size_t>(u)]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != order()) {
        throw Error("parse", "label count does not match graph order");
    }
    labels_ = std::move(labels);
}

Graph path_graph(int n) {
    if (n < 1) {
        throw Error("order", "path:n requires n >= 1");
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) {
        throw Error("order", "cycle:n requires n >= 3");
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    edges.emplace_back(n - 1, 0);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) {
        throw Error("order", "complete:n requires n >= 1");
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(int r, int s) {
    if (r < 1 || s < 1) {
        throw Error("order", "complete_bipartite:r,s requires r,s >= 1");
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < s; ++j) {
            edges.emplace_back(i, r + j);
        }
    }
    return Graph::from_edges(r + s, edges);
}

Graph empty_graph(int n) {
    return Graph(n);
}

std::vector<int> open_neighborhood(const Graph& g, int x) {
    return g.neighbors(x);
}

std::vector<int> closed_neighborhood(const Graph& g, int x) {
    std::vector<int> out = g.neighbors(x);
    out.insert(std::lower_bound(out.begin(), out.end(), x), x);
    return out;
}

DistanceMatrix::DistanceMatrix(int order, std::vector<int> data)
    : n_(order), d_(std::move(data)) {
    all_finite_ = std::none_of(d_.begin(), d_.end(),
                               [](int v) { return v == kInfiniteDistance; });
}

int DistanceMatrix::at(int x, int y) const {
    if (x < 0 || x >= n_ || y < 0 || y >= n_) {
        throw Error("index", "distance lookup out of range");
    }
    return d_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(y)];
}

namespace {

void bfs_fill(const Graph& g, int source, int* row) {
    const int n = g.order();
    std::fill(row, row + n, kInfiniteDistance);
    row[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (row[v] == kInfiniteDistance) {
                row[v] = row[u] + 1;
                queue.push_back(v);
            }
        }
    }
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    std::vector<int> data(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        bfs_fill(g, s, data.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n));
    }
    return DistanceMatrix(n, std::move(data));
}

int truncated_distance(const DistanceMatrix& m, int x, int y) {
    int d = m.at(x, y);
    return d >= 2 ? 2 : d;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.order();
    const int nh = h.order();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : h.edges()) {
        edges.emplace_back(ng + u, ng + v);
    }
    for (int u = 0; u < ng; ++u) {
        for (int v = 0; v < nh; ++v) {
            edges.emplace_back(u, ng + v);
        }
    }
    return Graph::from_edges(ng + nh, edges);
}

ConnectivityReport connectivity_report(const Graph& g) {
    const int n = g.order();
    std::vector<int> row(static_cast<std::size_t>(n));
    bfs_fill(g, 0, row.data());
    bool connected = std::none_of(row.begin(), row.end(),
                                  [](int v) { return v == kInfiniteDistance; });
    if (!connected) {
        return {false, std::nullopt};
    }
    DistanceMatrix m = all_pairs_distances(g);
    int diameter = 0;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            diameter = std::max(diameter, m.at(x, y));
        }
    }
    return {true, diameter};
}

}  // namespace lexidim
