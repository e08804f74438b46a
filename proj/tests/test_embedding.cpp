#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "ttone/catalog.hpp"
#include "ttone/embedding.hpp"
#include "ttone/errors.hpp"

using namespace ttone;
using namespace ttone::testutil;

namespace {

bool dual_is_forest(const OuterEmbedding& emb) {
    size_t nf = emb.faces.size();
    std::vector<int> comp(nf, -1);
    size_t edges = 0;
    for (size_t f = 0; f < nf; ++f)
        edges += emb.dual_adj[f].size();
    edges /= 2;
    // forest <=> every component has one more vertex than edges; equivalently
    // no cycles, checked by BFS counting.
    size_t comps = 0;
    for (size_t s = 0; s < nf; ++s) {
        if (comp[s] >= 0)
            continue;
        ++comps;
        std::vector<size_t> q{s};
        comp[s] = static_cast<int>(s);
        for (size_t h = 0; h < q.size(); ++h)
            for (int w : emb.dual_adj[q[h]])
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = static_cast<int>(s);
                    q.push_back(static_cast<size_t>(w));
                }
    }
    return edges + comps == nf;
}

bool face_is_cycle(const Multigraph& g, const std::vector<int>& cyc) {
    if (cyc.size() < 3)
        return false;
    std::set<int> uniq(cyc.begin(), cyc.end());
    if (uniq.size() != cyc.size())
        return false;
    for (size_t i = 0; i < cyc.size(); ++i)
        if (!g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]))
            return false;
    return true;
}

} // namespace

TEST_CASE("cycle embeds with one bounded face") {
    auto c6 = catalog("cycle:6");
    auto res = outer_embedding(c6);
    REQUIRE(res.embedding.has_value());
    const auto& emb = *res.embedding;
    REQUIRE(emb.blocks.size() == 1);
    CHECK(emb.blocks[0].outer_cycle.size() == 6);
    CHECK(emb.blocks[0].chords.empty());
    CHECK(emb.bridge_edges.empty());
    REQUIRE(emb.faces.size() == 1);
    CHECK(emb.faces[0].cycle.size() == 6);
    CHECK(dual_is_forest(emb));
}

TEST_CASE("two triangles and a bridge") {
    // triangles 0-1-2 and 3-4-5 joined by edge 0-3
    auto g = Multigraph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
    auto res = outer_embedding(g);
    REQUIRE(res.embedding.has_value());
    const auto& emb = *res.embedding;
    CHECK(emb.blocks.size() == 2);
    REQUIRE(emb.bridge_edges.size() == 1);
    CHECK(emb.bridge_edges[0] == 6);
    REQUIRE(emb.faces.size() == 2);
    for (const auto& f : emb.faces)
        CHECK(face_is_cycle(g, f.cycle));
    // the two faces share no edge, so the weak dual has no edges
    CHECK(emb.dual_adj[0].empty());
    CHECK(emb.dual_adj[1].empty());
    CHECK(dual_is_forest(emb));
}

TEST_CASE("fan has adjacent faces in the weak dual") {
    // 4-cycle with one chord: two triangular faces sharing the chord.
    auto g = Multigraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    auto res = outer_embedding(g);
    REQUIRE(res.embedding.has_value());
    const auto& emb = *res.embedding;
    REQUIRE(emb.faces.size() == 2);
    CHECK(emb.dual_adj[0] == std::vector<int>{1});
    CHECK(emb.dual_adj[1] == std::vector<int>{0});
    REQUIRE(emb.blocks.size() == 1);
    CHECK(emb.blocks[0].chords == std::vector<int>{4});
}

TEST_CASE("non-outerplanar graphs are rejected conclusively") {
    auto k4 = outer_embedding(catalog("complete:4"));
    CHECK(k4.conclusive);
    CHECK(!k4.embedding.has_value());

    auto k23 = Multigraph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    auto res = outer_embedding(k23);
    CHECK(res.conclusive);
    CHECK(!res.embedding.has_value());
}

TEST_CASE("embedder input contract") {
    auto par = Multigraph::from_edges(2, {{0, 1}, {0, 1}});
    CHECK_THROWS_AS(outer_embedding(par), unsupported_error);
    auto disc = Multigraph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(outer_embedding(disc), input_error);
}

TEST_CASE("random maximal outerplanar instances embed") {
    Rng rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 4 + pick(rng, 0, 12);
        auto g = random_maximal_outerplanar(rng, n);
        auto res = outer_embedding(g);
        REQUIRE(res.embedding.has_value());
        const auto& emb = *res.embedding;
        CHECK(dual_is_forest(emb));
        // maximal outerplanar on n vertices: n-2 triangular faces
        CHECK(emb.faces.size() == static_cast<size_t>(n - 2));
        for (const auto& f : emb.faces) {
            CHECK(f.cycle.size() == 3);
            CHECK(face_is_cycle(g, f.cycle));
        }
    }
}

TEST_CASE("random outerplanar subgraphs embed with acyclic duals") {
    Rng rng(8);
    for (int iter = 0; iter < 100; ++iter) {
        auto g = random_outerplanar(rng, 4 + pick(rng, 0, 10), pick(rng, 0, 4));
        if (!g.is_connected())
            continue;
        auto res = outer_embedding(g);
        REQUIRE(res.embedding.has_value());
        CHECK(dual_is_forest(*res.embedding));
        for (const auto& f : res.embedding->faces)
            CHECK(face_is_cycle(g, f.cycle));
    }
}

TEST_CASE("pendant face on the bowtie with a bridge") {
    auto g = Multigraph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
    auto res = outer_embedding(g);
    REQUIRE(res.embedding.has_value());
    auto pf = find_pendant_face(g, *res.embedding);
    REQUIRE(pf.has_value());
    REQUIRE(pf->cycle.size() == 3);
    // v1 is the unique degree-3 vertex of that triangle
    CHECK(g.degree(pf->cycle[0]) == 3);
    CHECK(g.degree(pf->cycle[1]) == 2);
    CHECK(g.degree(pf->cycle[2]) == 2);
}

TEST_CASE("pendant face with two consecutive degree-3 vertices") {
    // 4-cycle plus chord 0-2: face (0,1,2) has degree-3 ends 0 and 2.
    auto g = Multigraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    auto res = outer_embedding(g);
    REQUIRE(res.embedding.has_value());
    auto pf = find_pendant_face(g, *res.embedding);
    REQUIRE(pf.has_value());
    REQUIRE(pf->cycle.size() == 3);
    // rotation contract: v1 and v_l are the degree-3 vertices
    CHECK(g.degree(pf->cycle[0]) == 3);
    CHECK(g.degree(pf->cycle.back()) == 3);
    CHECK(g.degree(pf->cycle[1]) == 2);
}

TEST_CASE("pendant face preconditions") {
    auto c6 = catalog("cycle:6");
    auto res = outer_embedding(c6);
    REQUIRE(res.embedding.has_value());
    // only one bounded face
    CHECK_THROWS_AS(find_pendant_face(c6, *res.embedding), input_error);

    // degree-1 vertices are not allowed
    auto g = Multigraph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    (void)g;
    auto h = Multigraph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    auto hres = outer_embedding(h);
    REQUIRE(hres.embedding.has_value());
    CHECK_THROWS_AS(find_pendant_face(h, *hres.embedding), input_error);
}

TEST_CASE("pendant faces on random chorded polygons") {
    // A polygon with a non-crossing chord matching: every leaf face carries
    // its chord's two endpoints consecutively, so a pendant face exists.
    Rng rng(11);
    int found = 0;
    for (int iter = 0; iter < 60; ++iter) {
        auto g = random_subcubic_outerplanar(rng, 6 + pick(rng, 0, 10), 0);
        bool min2 = true;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) < 2)
                min2 = false;
        if (!min2)
            continue;
        auto res = outer_embedding(g);
        REQUIRE(res.embedding.has_value());
        if (res.embedding->faces.size() < 2)
            continue;
        auto pf = find_pendant_face(g, *res.embedding);
        REQUIRE(pf.has_value());
        ++found;
        // leaf of the weak dual
        CHECK(res.embedding->dual_adj[static_cast<size_t>(pf->face)].size() <= 1);
        // rotation contract
        int len = static_cast<int>(pf->cycle.size());
        int deg3 = 0;
        for (int v : pf->cycle)
            if (g.degree(v) == 3)
                ++deg3;
        REQUIRE(deg3 <= 2);
        CHECK(g.degree(pf->cycle[0]) == 3);
        if (deg3 == 2)
            CHECK(g.degree(pf->cycle[static_cast<size_t>(len - 1)]) == 3);
    }
    CHECK(found >= 20);
}
