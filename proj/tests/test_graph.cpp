#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ttone/canonical.hpp"
#include "ttone/catalog.hpp"
#include "ttone/classify.hpp"
#include "ttone/errors.hpp"
#include "ttone/graph.hpp"
#include "ttone/graph_io.hpp"

using namespace ttone;

namespace {

// Independent oracle: explicit line-graph construction plus Floyd-Warshall.
std::vector<std::vector<int>> line_graph_distances(const Multigraph& g) {
    int m = g.edge_count();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m), inf));
    for (int e = 0; e < m; ++e)
        d[static_cast<size_t>(e)][static_cast<size_t>(e)] = 0;
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
            const auto& a = g.edge(e);
            const auto& b = g.edge(f);
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
                d[static_cast<size_t>(e)][static_cast<size_t>(f)] = 1;
                d[static_cast<size_t>(f)][static_cast<size_t>(e)] = 1;
            }
        }
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                d[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    std::min(d[static_cast<size_t>(i)][static_cast<size_t>(j)],
                             d[static_cast<size_t>(i)][static_cast<size_t>(k)] +
                                 d[static_cast<size_t>(k)][static_cast<size_t>(j)]);
    return d;
}

Multigraph random_graph(std::mt19937& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p)
                edges.push_back({i, j});
    return Multigraph::from_edges(n, edges);
}

} // namespace

TEST_CASE("multigraph invariants") {
    CHECK_THROWS_AS(Multigraph::from_edges(3, {{0, 0}}), input_error);
    CHECK_THROWS_AS(Multigraph::from_edges(2, {{0, 2}}), input_error);
    auto g = Multigraph::from_edges(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(1) == 3);
    CHECK(!g.is_simple());
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
}

TEST_CASE("edge distance on paths and parallel edges") {
    auto p4 = catalog("path:4"); // a-b-c-d, edges 0,1,2
    CHECK(edge_distance(p4, 0, 2) == 2);
    CHECK(edge_distance(p4, 0, 0) == 0);
    CHECK(edge_distance(p4, 0, 1) == 1);
    CHECK_THROWS_AS(edge_distance(p4, 0, 7), input_error);

    auto par = Multigraph::from_edges(2, {{0, 1}, {0, 1}});
    CHECK(edge_distance(par, 0, 1) == 1);

    auto two = Multigraph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(!edge_distance(two, 0, 1).has_value());

    // Depth cap hides longer distances.
    auto p6 = catalog("path:6");
    CHECK(!edge_distance(p6, 0, 4, 2).has_value());
    CHECK(edge_distance(p6, 0, 4) == 4);
}

TEST_CASE("edge distance equals the explicit line-graph oracle") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 40; ++iter) {
        auto g = random_graph(rng, 4 + static_cast<int>(rng() % 9), 0.35);
        auto oracle = line_graph_distances(g);
        for (int e = 0; e < g.edge_count(); ++e)
            for (int f = 0; f < g.edge_count(); ++f) {
                auto d = edge_distance(g, e, f);
                int expect = oracle[static_cast<size_t>(e)][static_cast<size_t>(f)];
                if (expect >= (1 << 20))
                    CHECK(!d.has_value());
                else
                    CHECK(d == expect);
            }
    }
}

TEST_CASE("eta") {
    auto k4 = catalog("complete:4");
    for (int e = 0; e < k4.edge_count(); ++e)
        CHECK(eta(k4, e) == 2);
    auto star = catalog("star:3");
    for (int e = 0; e < star.edge_count(); ++e)
        CHECK(eta(star, e) == 2);
    auto p2 = catalog("path:2");
    CHECK(eta(p2, 0) == 0);
}

TEST_CASE("intermediate vertices") {
    auto p4 = catalog("path:4");
    CHECK(intermediate_vertices(p4, 0) == std::vector<int>{2});
    auto p2 = catalog("path:2");
    CHECK(intermediate_vertices(p2, 0).empty());
    auto c5 = catalog("cycle:5");
    for (int e = 0; e < 5; ++e)
        CHECK(intermediate_vertices(c5, e).size() == 2);
}

TEST_CASE("intermediate vertex count never exceeds eta") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 200; ++iter) {
        auto g = random_graph(rng, 4 + static_cast<int>(rng() % 9), 0.3);
        for (int e = 0; e < g.edge_count(); ++e)
            CHECK(static_cast<int>(intermediate_vertices(g, e).size()) <= eta(g, e));
    }
}

TEST_CASE("catalog graphs") {
    auto pet = catalog("petersen");
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    for (int v = 0; v < 10; ++v)
        CHECK(pet.degree(v) == 3);
    // girth 5: no shared neighbors between adjacent vertices, no 4-cycles
    for (int e = 0; e < 15; ++e)
        CHECK(eta(pet, e) == 4);

    auto fig2 = catalog("fig2");
    CHECK(fig2.vertex_count() == 10);
    CHECK(fig2.edge_count() == 15);
    auto cls = classify(fig2);
    CHECK(cls.is_cubic);
    CHECK(cls.is_k4_minus_e_free);
    CHECK(fig2.adjacent(0, 1)); // the drawing's triangle 1-2-3
    CHECK(fig2.adjacent(1, 2));
    CHECK(fig2.adjacent(0, 2));
    CHECK(!is_isomorphic(fig2, pet));

    auto star4 = catalog("star:4");
    CHECK(star4.vertex_count() == 5);
    CHECK(star4.degree(0) == 4);

    CHECK_THROWS_AS(catalog("nope"), input_error);
    CHECK_THROWS_AS(catalog("cycle:2"), input_error);
}

TEST_CASE("classify catalogs") {
    auto pet = classify(catalog("petersen"));
    CHECK(pet.is_cubic);
    CHECK(pet.is_subcubic);
    CHECK(!pet.is_claw_free);
    CHECK(pet.is_k4_free);
    CHECK(!pet.is_tree);
    CHECK(pet.is_outerplanar.has_value());
    CHECK(!*pet.is_outerplanar);

    auto k4 = classify(catalog("complete:4"));
    CHECK(k4.is_cubic);
    CHECK(!k4.is_k4_free);
    CHECK(!k4.is_k4_minus_e_free);
    CHECK(k4.is_claw_free);
    CHECK(!*k4.is_outerplanar);

    auto p5 = classify(catalog("path:5"));
    CHECK(p5.is_tree);
    CHECK(p5.is_2_degenerate);
    CHECK(p5.max_degree == 2);
    CHECK(*p5.is_outerplanar);

    auto c6 = classify(catalog("cycle:6"));
    CHECK(!c6.is_tree);
    CHECK(c6.is_series_parallel_subcubic);
    CHECK(*c6.is_outerplanar);

    // C2: the series-parallel base pair.
    auto c2 = classify(Multigraph::from_edges(2, {{0, 1}, {0, 1}}));
    CHECK(c2.is_series_parallel_subcubic);
    // Parallel edges decline outerplanarity detection.
    CHECK(!c2.is_outerplanar.has_value());

    // Theta graph: series-parallel subcubic, two degree-3 vertices.
    auto theta = Multigraph::from_edges(8, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 7}, {7, 1}});
    auto tc = classify(theta);
    CHECK(tc.is_series_parallel_subcubic);
    CHECK(tc.is_subcubic);

    // K4 is not series-parallel.
    CHECK(!classify(catalog("complete:4")).is_series_parallel_subcubic);
}

TEST_CASE("graph6 round trips") {
    CHECK(is_isomorphic(parse_graph6("C~"), catalog("complete:4")));
    CHECK(to_graph6(catalog("complete:4")) == "C~");

    std::mt19937 rng(2024);
    for (int iter = 0; iter < 60; ++iter) {
        auto g = random_graph(rng, 1 + static_cast<int>(rng() % 14), 0.4);
        auto text = to_graph6(g);
        auto back = parse_graph6(text);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edge_count() == g.edge_count());
        CHECK(to_graph6(back) == text);
    }

    CHECK_THROWS_AS(parse_graph6(""), input_error);
    CHECK_THROWS_AS(parse_graph6("C"), input_error);
    CHECK_THROWS_AS(parse_graph6("C~~"), input_error);
    auto par = Multigraph::from_edges(2, {{0, 1}, {0, 1}});
    CHECK_THROWS_AS(to_graph6(par), unsupported_error);
}

TEST_CASE("edgelist parsing") {
    auto g = parse_edgelist("0 1\n1 2\n1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(!g.is_simple());

    auto with_ids = parse_edgelist("2 0 3\n0 0 1\n1 0 2\n");
    CHECK(with_ids.edge_count() == 3);
    CHECK(with_ids.edge(2).v == 3);

    CHECK_THROWS_AS(parse_edgelist("0 1\n2 0 3\n"), input_error);
    CHECK_THROWS_AS(parse_edgelist("1 0 1\n2 0 2\n"), input_error); // ids not dense
    CHECK_THROWS_AS(parse_edgelist("0 zzz\n"), input_error);
    CHECK_THROWS_AS(parse_edgelist("0 1 2 3\n"), input_error);

    auto round = parse_edgelist(to_edgelist(catalog("petersen")));
    CHECK(is_isomorphic(round, catalog("petersen")));
}

TEST_CASE("canonical form identifies isomorphs") {
    // Same cycle with two different labelings.
    auto c5a = catalog("cycle:5");
    auto c5b = Multigraph::from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
    CHECK(is_isomorphic(c5a, c5b));
    CHECK(!is_isomorphic(c5a, catalog("path:5")));
    CHECK(canonical_graph6(c5a) == canonical_graph6(c5b));

    auto k4 = catalog("complete:4");
    CHECK(is_isomorphic(k4, parse_graph6("C~")));
}

namespace {

// Brute-force 2-degeneracy: every nonempty induced subgraph has a vertex of
// degree at most two (edge subgraphs only lower degrees).
bool brute_2degenerate(const Multigraph& g) {
    int n = g.vertex_count();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        bool ok = false;
        for (int v = 0; v < n && !ok; ++v) {
            if (!(mask & (1u << v)))
                continue;
            int d = 0;
            for (int e : g.incident(v)) {
                const auto& ed = g.edge(e);
                int w = (ed.u == v) ? ed.v : ed.u;
                if (mask & (1u << w))
                    ++d;
            }
            if (d <= 2)
                ok = true;
        }
        if (!ok)
            return false;
    }
    return true;
}

int girth(const Multigraph& g) {
    int best = 1 << 20;
    // shortest cycle through each edge: remove it, BFS between endpoints
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
        std::vector<int> q{ed.u};
        dist[static_cast<size_t>(ed.u)] = 0;
        for (size_t h = 0; h < q.size(); ++h) {
            int v = q[h];
            for (int f : g.incident(v)) {
                if (f == e)
                    continue;
                const auto& fd = g.edge(f);
                int w = (fd.u == v) ? fd.v : fd.u;
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                    q.push_back(w);
                }
            }
        }
        if (dist[static_cast<size_t>(ed.v)] >= 0)
            best = std::min(best, dist[static_cast<size_t>(ed.v)] + 1);
    }
    return best;
}

} // namespace

TEST_CASE("petersen girth is five") {
    CHECK(girth(catalog("petersen")) == 5);
    CHECK(girth(catalog("fig2")) == 3);
}

TEST_CASE("2-degeneracy matches the subgraph definition") {
    std::mt19937 rng(1919);
    for (int iter = 0; iter < 60; ++iter) {
        auto g = random_graph(rng, 4 + static_cast<int>(rng() % 6), 0.45);
        CHECK(classify(g).is_2_degenerate == brute_2degenerate(g));
    }
}

TEST_CASE("series-parallel reduction negatives") {
    // The reduction must not accept a base pair plus an isolated vertex.
    auto lonely = Multigraph::from_edges(3, {{0, 1}, {0, 1}});
    CHECK(!is_series_parallel_subcubic(lonely));
    // Two disjoint base pairs.
    auto twin = Multigraph::from_edges(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}});
    CHECK(!is_series_parallel_subcubic(twin));
    // A triple parallel edge is reachable by a parallel operation.
    auto triple = Multigraph::from_edges(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(is_series_parallel_subcubic(triple));
    // Order < 2 never qualifies.
    auto dot = Multigraph::from_edges(1, {});
    CHECK(!is_series_parallel_subcubic(dot));
}

TEST_CASE("classify hand flags for every catalog entry") {
    struct Row {
        const char* name;
        bool tree, subcubic, cubic, clawfree, degen2, k4free, k4efree, sp;
    };
    const Row rows[] = {
        {"path:5", true, true, false, true, true, true, true, false},
        {"cycle:7", false, true, false, true, true, true, true, true},
        {"star:3", true, true, false, false, true, true, true, false},
        {"star:2", true, true, false, true, true, true, true, false},
        {"complete:4", false, true, true, true, false, false, false, false},
        {"k4_minus_e", false, true, false, true, true, true, false, true},
        {"petersen", false, true, true, false, false, true, true, false},
        {"fig2", false, true, true, false, false, true, true, false},
    };
    for (const auto& r : rows) {
        auto cls = classify(catalog(r.name));
        INFO(r.name);
        CHECK(cls.is_tree == r.tree);
        CHECK(cls.is_subcubic == r.subcubic);
        CHECK(cls.is_cubic == r.cubic);
        CHECK(cls.is_claw_free == r.clawfree);
        CHECK(cls.is_2_degenerate == r.degen2);
        CHECK(cls.is_k4_free == r.k4free);
        CHECK(cls.is_k4_minus_e_free == r.k4efree);
        CHECK(cls.is_series_parallel_subcubic == r.sp);
    }
}

TEST_CASE("graph6 encoding matches externally generated strings") {
    // Goldens produced by an independent graph library on the same labelings.
    struct Row {
        int n;
        const char* g6;
        std::vector<std::pair<int, int>> edges;
    };
    const std::vector<Row> rows = {
        {4, "C~", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
        {3, "B?", {}},
        {3, "Bg", {{0, 1}, {1, 2}}},
        {11, "JG_[CBXCCG?", {{0, 4}, {0, 6}, {0, 7}, {0, 8}, {0, 10}, {1, 2}, {1, 8}, {3, 5}, {3, 8}, {3, 9}, {4, 5}, {4, 8}, {5, 10}, {7, 8}}},
        {13, "LSAR?H?ECqAOCA", {{0, 2}, {0, 3}, {0, 5}, {0, 10}, {1, 6}, {1, 8}, {2, 6}, {3, 5}, {3, 9}, {3, 10}, {3, 11}, {3, 12}, {4, 9}, {4, 10}, {5, 7}, {6, 11}, {7, 10}, {10, 12}}},
        {11, "J`o`L`?QHH?", {{0, 1}, {0, 4}, {0, 7}, {1, 4}, {1, 8}, {1, 9}, {2, 3}, {2, 5}, {2, 6}, {2, 7}, {2, 10}, {3, 7}, {4, 9}, {5, 6}, {5, 10}, {8, 9}, {8, 10}}},
        {14, "MuajV?K_HWuIGQb?_", {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 7}, {0, 9}, {0, 11}, {0, 13}, {1, 3}, {1, 6}, {1, 7}, {2, 5}, {2, 6}, {2, 7}, {2, 10}, {2, 11}, {2, 12}, {3, 11}, {4, 5}, {4, 6}, {4, 8}, {4, 10}, {4, 13}, {5, 8}, {5, 10}, {5, 13}, {7, 11}, {7, 12}, {8, 9}, {9, 10}, {9, 11}, {10, 12}, {12, 13}}},
        {18, "QwqHaYDG?RoIQGqBH[CGK~ecFB?",
         {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {0, 8}, {0, 11}, {0, 13}, {0, 15}, {0, 16}, {1, 2}, {1, 4}, {1, 7}, {1, 12}, {1, 13}, {1, 14}, {1, 16}, {2, 6}, {2, 9}, {2, 16}, {3, 6}, {3, 16}, {4, 5}, {4, 7}, {4, 10}, {4, 12}, {4, 13}, {4, 14}, {4, 16}, {5, 7}, {5, 8}, {5, 15}, {5, 16}, {5, 17}, {6, 14}, {6, 16}, {6, 17}, {7, 8}, {7, 10}, {7, 11}, {7, 14}, {7, 17}, {8, 10}, {8, 12}, {8, 14}, {9, 10}, {9, 11}, {9, 16}, {10, 13}, {10, 16}, {11, 13}, {11, 15}, {12, 15}, {12, 16}, {12, 17}, {13, 17}, {15, 16}}},
    };
    for (const auto& r : rows) {
        auto g = Multigraph::from_edges(r.n, r.edges);
        CHECK(to_graph6(g) == r.g6);
        auto back = parse_graph6(r.g6);
        CHECK(back.vertex_count() == r.n);
        CHECK(back.edge_count() == static_cast<int>(r.edges.size()));
    }
    CHECK(to_graph6(petersen_graph()) == "IheA@GUAo");
    CHECK(to_graph6(catalog("fig2")) == "I{O_w_H@W");
}
