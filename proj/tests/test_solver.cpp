#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_util.hpp"
#include "ttone/catalog.hpp"
#include "ttone/coloring.hpp"
#include "ttone/errors.hpp"
#include "ttone/solver.hpp"

using namespace ttone;
using namespace ttone::testutil;

namespace {

// Independent oracle for the chromatic index: brute-force proper edge
// coloring by backtracking over color assignments (one color per edge).
bool proper_edge_colorable(const Multigraph& g, int k, size_t e, std::vector<int>& col) {
    if (e == static_cast<size_t>(g.edge_count()))
        return true;
    for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (int f : g.adjacent_edges(static_cast<int>(e)))
            if (static_cast<size_t>(f) < e && col[static_cast<size_t>(f)] == c)
                ok = false;
        if (!ok)
            continue;
        col[e] = c;
        if (proper_edge_colorable(g, k, e + 1, col))
            return true;
        col[e] = 0;
    }
    return false;
}

int brute_chromatic_index(const Multigraph& g) {
    if (g.edge_count() == 0)
        return 0;
    for (int k = 1;; ++k) {
        std::vector<int> col(static_cast<size_t>(g.edge_count()), 0);
        if (proper_edge_colorable(g, k, 0, col))
            return k;
    }
}

} // namespace

TEST_CASE("small exact values from direct verification") {
    auto k4 = catalog("complete:4");
    CHECK(is_k_colorable(k4, 2, 9).status == SolveStatus::Yes);
    CHECK(is_k_colorable(k4, 2, 8).status == SolveStatus::No);

    auto k4e = catalog("k4_minus_e");
    CHECK(is_k_colorable(k4e, 2, 8).status == SolveStatus::Yes);
    CHECK(is_k_colorable(k4e, 2, 7).status == SolveStatus::No);

    auto star3 = catalog("star:3");
    CHECK(is_k_colorable(star3, 2, 6).status == SolveStatus::Yes);
    CHECK(is_k_colorable(star3, 2, 5).status == SolveStatus::No);
}

TEST_CASE("witnesses verify") {
    for (const char* name : {"complete:4", "k4_minus_e", "petersen", "cycle:7", "star:4"}) {
        auto g = catalog(name);
        auto res = exact_index(g, 2);
        REQUIRE(res.status == SolveStatus::Yes);
        REQUIRE(res.witness.has_value());
        CHECK(static_cast<int>(res.witness->assignment.size()) == g.edge_count());
        CHECK(verify(g, *res.witness).empty());
        CHECK(res.value >= 2 * g.max_degree());
    }
}

TEST_CASE("exact index headline values") {
    CHECK(exact_index(catalog("petersen"), 2).value == 6);
    CHECK(exact_index(catalog("cycle:7"), 2).value == 6);
    CHECK(exact_index(catalog("path:6"), 2).value == 5);
    CHECK(exact_index(catalog("complete:4"), 2).value == 9);
    CHECK(exact_index(catalog("k4_minus_e"), 2).value == 8);
}

TEST_CASE("empty and tiny graphs") {
    auto empty = Multigraph::from_edges(4, {});
    auto res = exact_index(empty, 2);
    CHECK(res.value == 0);
    auto single = catalog("path:2");
    CHECK(exact_index(single, 2).value == 2);
    CHECK(exact_index(single, 3).value == 3);
    CHECK_THROWS_AS(is_k_colorable(single, 3, 2), input_error);
    CHECK_THROWS_AS(is_k_colorable(single, 2, 70), input_error);
}

TEST_CASE("tone 1 equals the proper chromatic index") {
    Rng rng(1001);
    for (int iter = 0; iter < 30; ++iter) {
        auto g = random_graph(rng, 4 + pick(rng, 0, 4), 0.45);
        auto res = exact_index(g, 1);
        REQUIRE(res.status == SolveStatus::Yes);
        CHECK(res.value == brute_chromatic_index(g));
    }
}

TEST_CASE("monotone under subgraphs") {
    Rng rng(2002);
    for (int iter = 0; iter < 50; ++iter) {
        auto g = random_graph(rng, 4 + pick(rng, 0, 4), 0.5);
        if (g.edge_count() < 2)
            continue;
        // H: drop a random nonempty subset of edges.
        std::vector<std::pair<int, int>> kept;
        for (int e = 0; e < g.edge_count(); ++e)
            if (pick(rng, 0, 3) != 0) {
                const auto& ed = g.edge(e);
                kept.push_back({ed.u, ed.v});
            }
        auto h = Multigraph::from_edges(g.vertex_count(), kept);
        auto rg = exact_index(g, 2);
        auto rh = exact_index(h, 2);
        REQUIRE(rg.status == SolveStatus::Yes);
        REQUIRE(rh.status == SolveStatus::Yes);
        CHECK(rh.value <= rg.value);
    }
}

TEST_CASE("chain inequality between consecutive tones") {
    // Needs a nonempty line graph (two adjacent edges): a bare matching has
    // tau'_2 = 2 < tau'_1 + 2.
    Rng rng(3003);
    int done = 0;
    while (done < 30) {
        auto g = random_graph(rng, 4 + pick(rng, 0, 3), 0.5);
        if (g.edge_count() == 0 || g.max_degree() < 2)
            continue;
        auto r1 = exact_index(g, 1);
        auto r2 = exact_index(g, 2);
        REQUIRE(r1.status == SolveStatus::Yes);
        REQUIRE(r2.status == SolveStatus::Yes);
        CHECK(r2.value >= r1.value + 2);
        ++done;
    }
}

TEST_CASE("determinism") {
    auto g = catalog("petersen");
    auto a = exact_index(g, 2);
    auto b = exact_index(g, 2);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(a.value == b.value);
    CHECK(a.witness->assignment == b.witness->assignment);
}

TEST_CASE("limits produce unknown with a bracket") {
    SolveOptions opts;
    opts.node_limit = 5;
    auto res = is_k_colorable(catalog("petersen"), 2, 6, opts);
    CHECK(res.status == SolveStatus::Unknown);

    auto idx = exact_index(catalog("petersen"), 2, opts);
    CHECK(idx.status == SolveStatus::Unknown);
    CHECK(idx.bracket_lo >= 6);

    SolveOptions time_opts;
    time_opts.time_limit_ms = 10000;
    auto ok = exact_index(catalog("complete:4"), 2, time_opts);
    CHECK(ok.status == SolveStatus::Yes);
    CHECK(ok.value == 9);
}

TEST_CASE("multigraph solving") {
    // Two parallel edges are adjacent: disjoint labels, so k = 4 at t = 2.
    auto par = Multigraph::from_edges(2, {{0, 1}, {0, 1}});
    auto res = exact_index(par, 2);
    REQUIRE(res.status == SolveStatus::Yes);
    CHECK(res.value == 4);
}

TEST_CASE("extend exact") {
    auto g = catalog("complete:4");
    // UNSAT at k = 8 from the empty assignment.
    PartialColoring empty;
    empty.t = 2;
    empty.k = 8;
    CHECK(extend_exact(g, empty).status == SolveStatus::No);

    // Completing a valid partial at k = 9.
    PartialColoring part;
    part.t = 2;
    part.k = 9;
    part.assignment.emplace(0, Label::of(1, 2));
    auto res = extend_exact(g, part);
    REQUIRE(res.status == SolveStatus::Yes);
    CHECK(res.coloring->label(0) == Label::of(1, 2));
    CHECK(verify(g, *res.coloring).empty());
    CHECK(static_cast<int>(res.coloring->assignment.size()) == g.edge_count());

    // Fully colored input comes back unchanged.
    auto full = extend_exact(g, *res.coloring);
    REQUIRE(full.status == SolveStatus::Yes);
    CHECK(full.coloring->assignment == res.coloring->assignment);

    // Invalid input is rejected.
    PartialColoring bad;
    bad.t = 2;
    bad.k = 9;
    bad.assignment.emplace(0, Label::of(1, 2));
    bad.assignment.emplace(1, Label::of(1, 3)); // adjacent, shares color 1
    bool adjacent01 = false;
    for (int f : g.adjacent_edges(0))
        if (f == 1)
            adjacent01 = true;
    if (adjacent01)
        CHECK_THROWS_AS(extend_exact(g, bad), input_error);

    // The known Petersen six-coloring minus one spoke completes.
    auto pet = catalog("petersen");
    PartialColoring fig;
    fig.t = 2;
    fig.k = 6;
    int labels[15][2] = {
        {2, 3}, {4, 5}, {1, 3}, {2, 5}, {1, 4},
        {3, 4}, {1, 5}, {2, 4}, {3, 5}, {1, 2},
        {5, 6}, {1, 6}, {2, 6}, {4, 6}, {3, 6},
    };
    for (int e = 0; e < 14; ++e)
        fig.assignment.emplace(e, Label::of(labels[e][0], labels[e][1]));
    auto done = extend_exact(pet, fig);
    REQUIRE(done.status == SolveStatus::Yes);
    CHECK(verify(pet, *done.coloring).empty());
}

TEST_CASE("every refusal is bracketed by an exhaustive no") {
    // Climbing from the trivial lower bound, each k < value is refuted.
    auto g = catalog("cycle:4");
    auto res = exact_index(g, 2);
    REQUIRE(res.status == SolveStatus::Yes);
    CHECK(res.value == 6);
    CHECK(res.bracket_lo == 6);
    for (int k = 4; k < res.value; ++k)
        CHECK(is_k_colorable(g, 2, k).status == SolveStatus::No);
}

namespace {

// Fully independent dual route on tiny graphs: enumerate every assignment of
// 2-subsets to the edges and test the definition directly.
bool brute_t2(const Multigraph& g, int k, size_t e, std::vector<Label>& labs) {
    if (e == static_cast<size_t>(g.edge_count()))
        return true;
    std::vector<Label> all;
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b)
            all.push_back(Label::of(a, b));
    for (const Label& lab : all) {
        bool ok = true;
        for (size_t f = 0; f < e && ok; ++f) {
            auto d = edge_distance(g, static_cast<int>(e), static_cast<int>(f), 2);
            if (d && lab.intersection_size(labs[f]) >= *d)
                ok = false;
        }
        if (!ok)
            continue;
        labs[e] = lab;
        if (brute_t2(g, k, e + 1, labs))
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("solver agrees with exhaustive label enumeration on tiny graphs") {
    Rng rng(9090);
    for (int iter = 0; iter < 25; ++iter) {
        auto g = random_graph(rng, 3 + pick(rng, 0, 2), 0.6);
        if (g.edge_count() == 0 || g.edge_count() > 4)
            continue;
        for (int k = 2; k <= 8; ++k) {
            std::vector<Label> labs(static_cast<size_t>(g.edge_count()));
            bool brute = brute_t2(g, k, 0, labs);
            auto res = is_k_colorable(g, 2, k);
            REQUIRE(res.status != SolveStatus::Unknown);
            CHECK((res.status == SolveStatus::Yes) == brute);
        }
    }
}
