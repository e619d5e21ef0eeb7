#include <doctest.h>

#include <random>

#include "lexidim/graph.hpp"
#include "lexidim/twins.hpp"
#include "oracle.hpp"

using namespace lexidim;

namespace {

// Membership test straight from the relation definition.
bool related(const Graph& g, int u, int v) {
    std::vector<bool> nu(static_cast<std::size_t>(g.order()), false);
    std::vector<bool> nv(static_cast<std::size_t>(g.order()), false);
    for (int w : g.neighbors(u)) {
        nu[w] = true;
    }
    for (int w : g.neighbors(v)) {
        nv[w] = true;
    }
    nu[v] = nv[u] = false;
    return nu == nv;
}

}  // namespace

TEST_CASE("twin partition on named graphs") {
    TwinPartition k4 = twin_partition(complete_graph(4));
    REQUIRE(k4.classes.size() == 1);
    CHECK(k4.classes[0].members.size() == 4);
    CHECK(k4.classes[0].kind == TwinKind::true_twin);

    TwinPartition k23 = twin_partition(complete_bipartite_graph(2, 3));
    REQUIRE(k23.classes.size() == 2);
    CHECK(k23.classes[0].members == std::vector<int>{0, 1});
    CHECK(k23.classes[0].kind == TwinKind::false_twin);
    CHECK(k23.classes[1].members == std::vector<int>{2, 3, 4});
    CHECK(k23.classes[1].kind == TwinKind::false_twin);

    TwinPartition p4 = twin_partition(path_graph(4));
    CHECK(p4.classes.size() == 4);
    for (const TwinClass& cls : p4.classes) {
        CHECK(cls.kind == TwinKind::singleton);
    }
}

TEST_CASE("twin freeness report") {
    TwinFreenessReport p4 = twin_freeness_report(twin_partition(path_graph(4)));
    CHECK(p4.twins_free);
    CHECK(p4.true_twins_free);
    CHECK(p4.false_twins_free);

    TwinFreenessReport k4 = twin_freeness_report(twin_partition(complete_graph(4)));
    CHECK_FALSE(k4.twins_free);
    CHECK(k4.false_twins_free);
    CHECK_FALSE(k4.true_twins_free);

    TwinFreenessReport k23 = twin_freeness_report(twin_partition(complete_bipartite_graph(2, 3)));
    CHECK_FALSE(k23.twins_free);
    CHECK(k23.true_twins_free);
    CHECK_FALSE(k23.false_twins_free);
}

TEST_CASE("twin partition matches the relation on random graphs") {
    std::mt19937 rng(31337);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + static_cast<int>(rng() % 10);
        Graph g = testoracle::random_graph(rng, n, 0.45);
        TwinPartition p = twin_partition(g);

        // classes partition V(G)
        std::vector<int> seen(static_cast<std::size_t>(n), 0);
        for (std::size_t c = 0; c < p.classes.size(); ++c) {
            for (int v : p.classes[c].members) {
                ++seen[v];
                CHECK(p.class_of[v] == static_cast<int>(c));
            }
        }
        CHECK(std::count(seen.begin(), seen.end(), 1) == n);

        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                CHECK((p.class_of[u] == p.class_of[v]) == related(g, u, v));
            }
        }
        for (const TwinClass& cls : p.classes) {
            CHECK((cls.members.size() == 1) == (cls.kind == TwinKind::singleton));
        }
    }
}

TEST_CASE("complement swaps twin kinds") {
    std::mt19937 rng(99);
    for (int round = 0; round < 40; ++round) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = testoracle::random_graph(rng, n, 0.5);
        TwinPartition p = twin_partition(g);
        TwinPartition q = twin_partition(complement(g));
        REQUIRE(p.classes.size() == q.classes.size());
        for (std::size_t c = 0; c < p.classes.size(); ++c) {
            CHECK(p.classes[c].members == q.classes[c].members);
            switch (p.classes[c].kind) {
                case TwinKind::singleton:
                    CHECK(q.classes[c].kind == TwinKind::singleton);
                    break;
                case TwinKind::false_twin:
                    CHECK(q.classes[c].kind == TwinKind::true_twin);
                    break;
                case TwinKind::true_twin:
                    CHECK(q.classes[c].kind == TwinKind::false_twin);
                    break;
            }
        }
    }
}
