#include "lexidim/twins.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <numeric>
#include <unordered_map>

#include "lexidim/error.hpp"

namespace lexidim {
namespace {

using Row = boost::dynamic_bitset<std::uint64_t>;

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
};

std::size_t row_hash(const Row& row) {
    std::vector<std::uint64_t> blocks(row.num_blocks());
    boost::to_block_range(row, blocks.begin());
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t word : blocks) {
        h = (h ^ word) * 1099511628211ull;
    }
    return h;
}

// Groups indices whose rows compare equal, using the hash only to narrow
// candidates. Calls unite() on each equal pair.
void unite_equal_rows(const std::vector<Row>& rows, DisjointSets& sets) {
    std::unordered_map<std::size_t, std::vector<int>> buckets;
    for (int v = 0; v < static_cast<int>(rows.size()); ++v) {
        buckets[row_hash(rows[static_cast<std::size_t>(v)])].push_back(v);
    }
    for (const auto& [hash, bucket] : buckets) {
        for (std::size_t i = 0; i < bucket.size(); ++i) {
            for (std::size_t j = i + 1; j < bucket.size(); ++j) {
                if (rows[static_cast<std::size_t>(bucket[i])] ==
                    rows[static_cast<std::size_t>(bucket[j])]) {
                    sets.unite(bucket[i], bucket[j]);
                }
            }
        }
    }
}

}  // namespace

const char* to_string(TwinKind kind) {
    switch (kind) {
        case TwinKind::singleton: return "singleton";
        case TwinKind::false_twin: return "false_twin";
        case TwinKind::true_twin: return "true_twin";
    }
    return "?";
}

TwinPartition twin_partition(const Graph& g) {
    const int n = g.order();
    std::vector<Row> open(static_cast<std::size_t>(n), Row(static_cast<std::size_t>(n)));
    std::vector<Row> closed(static_cast<std::size_t>(n), Row(static_cast<std::size_t>(n)));
    for (int v = 0; v < n; ++v) {
        for (int w : g.neighbors(v)) {
            open[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(w));
        }
        closed[static_cast<std::size_t>(v)] = open[static_cast<std::size_t>(v)];
        closed[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(v));
    }

    // u,v with N(u)=N(v) are false twins, N[u]=N[v] are true twins; the twin
    // relation is exactly the union of the two, so two groupings suffice.
    DisjointSets sets(n);
    unite_equal_rows(open, sets);
    unite_equal_rows(closed, sets);

    std::vector<int> root_to_class(static_cast<std::size_t>(n), -1);
    TwinPartition partition;
    partition.class_of.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        int root = sets.find(v);
        if (root_to_class[static_cast<std::size_t>(root)] < 0) {
            root_to_class[static_cast<std::size_t>(root)] =
                static_cast<int>(partition.classes.size());
            partition.classes.push_back(TwinClass{{}, TwinKind::singleton});
        }
        int cls = root_to_class[static_cast<std::size_t>(root)];
        partition.classes[static_cast<std::size_t>(cls)].members.push_back(v);
        partition.class_of[static_cast<std::size_t>(v)] = cls;
    }

    for (auto& cls : partition.classes) {
        if (cls.members.size() == 1) {
            cls.kind = TwinKind::singleton;
            continue;
        }
        bool adjacent = g.adjacent(cls.members[0], cls.members[1]);
        cls.kind = adjacent ? TwinKind::true_twin : TwinKind::false_twin;
        const auto& rows = adjacent ? closed : open;
        const Row& ref = rows[static_cast<std::size_t>(cls.members[0])];
        for (std::size_t i = 0; i < cls.members.size(); ++i) {
            if (rows[static_cast<std::size_t>(cls.members[i])] != ref) {
                throw Error("internal", "mixed adjacency inside a twin class");
            }
            for (std::size_t j = i + 1; j < cls.members.size(); ++j) {
                if (g.adjacent(cls.members[i], cls.members[j]) != adjacent) {
                    throw Error("internal", "mixed adjacency inside a twin class");
                }
            }
        }
    }
    return partition;
}

TwinFreenessReport twin_freeness_report(const TwinPartition& p) {
    TwinFreenessReport report{true, true, true};
    for (const auto& cls : p.classes) {
        switch (cls.kind) {
            case TwinKind::singleton: break;
            case TwinKind::false_twin:
                report.twins_free = false;
                report.false_twins_free = false;
                break;
            case TwinKind::true_twin:
                report.twins_free = false;
                report.true_twins_free = false;
                break;
        }
    }
    return report;
}

}  // namespace lexidim
