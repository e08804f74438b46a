#include "ttone/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ttone/errors.hpp"

namespace ttone {

namespace {

// Biconnected components as edge-id lists (Hopcroft-Tarjan, edge stack).
struct BlockFinder {
    const Multigraph& g;
    std::vector<int> disc, low;
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    explicit BlockFinder(const Multigraph& graph)
        : g(graph),
          disc(static_cast<size_t>(graph.vertex_count()), -1),
          low(static_cast<size_t>(graph.vertex_count()), -1) {}

    void run() {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (disc[static_cast<size_t>(v)] < 0)
                dfs(v, -1);
    }

    void dfs(int v, int parent_edge) {
        disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
        for (int e : g.incident(v)) {
            if (e == parent_edge)
                continue;
            const auto& ed = g.edge(e);
            int w = (ed.u == v) ? ed.v : ed.u;
            if (disc[static_cast<size_t>(w)] < 0) {
                edge_stack.push_back(e);
                dfs(w, e);
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
                if (low[static_cast<size_t>(w)] >= disc[static_cast<size_t>(v)])
                    pop_block(e);
            } else if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(v)]) {
                edge_stack.push_back(e);
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(w)]);
            }
        }
    }

    void pop_block(int root_edge) {
        std::vector<int> block;
        while (!edge_stack.empty()) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == root_edge)
                break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
};

// Hamiltonian-cycle backtracking inside one block. Returns cycles one at a
// time through the visitor; the visitor returns true to stop the search.
struct HamSearch {
    const std::vector<std::vector<int>>& adj; // local adjacency, sorted
    int n;
    long budget; // < 0: unlimited
    bool exhausted = true;

    std::vector<int> path;
    std::vector<bool> used;

    template <typename Visit>
    void run(Visit&& visit) {
        path = {0};
        used.assign(static_cast<size_t>(n), false);
        used[0] = true;
        extend(visit);
    }

    template <typename Visit>
    bool extend(Visit&& visit) {
        if (budget == 0) {
            exhausted = false;
            return true;
        }
        if (budget > 0)
            --budget;
        int cur = path.back();
        if (static_cast<int>(path.size()) == n) {
            bool closes = std::binary_search(adj[static_cast<size_t>(cur)].begin(),
                                             adj[static_cast<size_t>(cur)].end(), 0);
            // Each cycle is seen once: second vertex smaller than the last.
            if (closes && path[1] < path.back())
                return visit(path);
            return false;
        }
        for (int nxt : adj[static_cast<size_t>(cur)]) {
            if (used[static_cast<size_t>(nxt)])
                continue;
            used[static_cast<size_t>(nxt)] = true;
            path.push_back(nxt);
            if (extend(visit))
                return true;
            path.pop_back();
            used[static_cast<size_t>(nxt)] = false;
        }
        return false;
    }
};

bool chords_noncrossing(const std::vector<std::pair<int, int>>& chord_pos, int cycle_len) {
    auto inside = [cycle_len](int a, int b, int x) {
        // strictly between a and b going forward (cyclically)
        int span = (b - a + cycle_len) % cycle_len;
        int off = (x - a + cycle_len) % cycle_len;
        return off > 0 && off < span;
    };
    for (size_t i = 0; i < chord_pos.size(); ++i) {
        for (size_t j = i + 1; j < chord_pos.size(); ++j) {
            auto [a, b] = chord_pos[i];
            auto [c, d] = chord_pos[j];
            if (a == c || a == d || b == c || b == d)
                continue; // chords sharing an endpoint never cross
            if (inside(a, b, c) != inside(a, b, d))
                return false;
        }
    }
    return true;
}

// Recursive face split of a polygon (position list along the outer cycle)
// by non-crossing chords given as position pairs.
void split_faces(const std::vector<int>& poly,
                 std::vector<std::pair<int, int>> chords,
                 std::vector<std::vector<int>>& out) {
    if (chords.empty()) {
        out.push_back(poly);
        return;
    }
    auto [a, b] = chords.front();
    chords.erase(chords.begin());
    size_t ia = 0, ib = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] == a)
            ia = i;
        if (poly[i] == b)
            ib = i;
    }
    if (ia > ib)
        std::swap(ia, ib);
    std::vector<int> left(poly.begin() + static_cast<long>(ia), poly.begin() + static_cast<long>(ib) + 1);
    std::vector<int> right(poly.begin() + static_cast<long>(ib), poly.end());
    right.insert(right.end(), poly.begin(), poly.begin() + static_cast<long>(ia) + 1);

    std::set<int> left_set(left.begin(), left.end());
    std::vector<std::pair<int, int>> lc, rc;
    for (auto ch : chords) {
        bool lu = left_set.count(ch.first) > 0;
        bool lv = left_set.count(ch.second) > 0;
        // Chord endpoints on the split line belong to both sides; prefer the
        // side that contains both strictly.
        bool ru = !lu || ch.first == poly[ia] || ch.first == poly[ib];
        bool rv = !lv || ch.second == poly[ia] || ch.second == poly[ib];
        if (lu && lv)
            lc.push_back(ch);
        else if (ru && rv)
            rc.push_back(ch);
        else
            throw defect_error("crossing chord survived the embedding check");
    }
    split_faces(left, lc, out);
    split_faces(right, rc, out);
}

} // namespace

OuterEmbeddingResult outer_embedding(const Multigraph& g, long budget) {
    if (!g.is_simple())
        throw unsupported_error("outer embedding requires a simple graph");
    if (!g.is_connected())
        throw input_error("outer embedding requires a connected graph");

    BlockFinder bf(g);
    bf.run();

    OuterEmbedding emb;
    bool conclusive = true;

    for (const auto& block_edges : bf.blocks) {
        if (block_edges.size() == 1) {
            emb.bridge_edges.push_back(block_edges[0]);
            continue;
        }
        // Local vertex set of the block.
        std::set<int> vset;
        for (int e : block_edges) {
            vset.insert(g.edge(e).u);
            vset.insert(g.edge(e).v);
        }
        std::vector<int> verts(vset.begin(), vset.end());
        int nb = static_cast<int>(verts.size());
        int mb = static_cast<int>(block_edges.size());
        if (mb > 2 * nb - 3)
            return {std::nullopt, true}; // too dense for any outerplane block

        std::map<int, int> local;
        for (int i = 0; i < nb; ++i)
            local[verts[static_cast<size_t>(i)]] = i;
        std::vector<std::vector<int>> adj(static_cast<size_t>(nb));
        for (int e : block_edges) {
            int lu = local[g.edge(e).u];
            int lv = local[g.edge(e).v];
            adj[static_cast<size_t>(lu)].push_back(lv);
            adj[static_cast<size_t>(lv)].push_back(lu);
        }
        for (auto& a : adj)
            std::sort(a.begin(), a.end());

        long block_budget = (nb <= 12) ? -1 : budget;
        HamSearch hs{adj, nb, block_budget, true, {}, {}};
        std::optional<std::vector<int>> cycle;
        std::vector<int> chord_ids;
        std::vector<std::pair<int, int>> chord_pos;
        hs.run([&](const std::vector<int>& path) {
            std::vector<int> pos(static_cast<size_t>(nb), -1);
            for (int i = 0; i < nb; ++i)
                pos[static_cast<size_t>(path[static_cast<size_t>(i)])] = i;
            std::vector<int> cids;
            std::vector<std::pair<int, int>> cpos;
            for (int e : block_edges) {
                int pu = pos[static_cast<size_t>(local[g.edge(e).u])];
                int pv = pos[static_cast<size_t>(local[g.edge(e).v])];
                int diff = (pu - pv + nb) % nb;
                if (diff == 1 || diff == nb - 1)
                    continue; // cycle edge
                cids.push_back(e);
                cpos.push_back({std::min(pu, pv), std::max(pu, pv)});
            }
            if (!chords_noncrossing(cpos, nb))
                return false; // try another Hamiltonian cycle
            cycle = path;
            chord_ids = cids;
            chord_pos = cpos;
            return true;
        });
        if (!cycle) {
            if (!hs.exhausted)
                return {std::nullopt, false}; // budget ran out, undecided
            return {std::nullopt, true};
        }

        OuterEmbedding::Block blk;
        for (int p : *cycle)
            blk.outer_cycle.push_back(verts[static_cast<size_t>(p)]);
        blk.chords = chord_ids;
        int block_index = static_cast<int>(emb.blocks.size());

        // Bounded faces: split the polygon 0..nb-1 by the chords.
        std::vector<int> poly(static_cast<size_t>(nb));
        for (int i = 0; i < nb; ++i)
            poly[static_cast<size_t>(i)] = i;
        std::sort(chord_pos.begin(), chord_pos.end());
        std::vector<std::vector<int>> face_polys;
        split_faces(poly, chord_pos, face_polys);
        for (auto& fp : face_polys) {
            OuterEmbedding::Face face;
            face.block = block_index;
            for (int p : fp)
                face.cycle.push_back(blk.outer_cycle[static_cast<size_t>(p)]);
            emb.faces.push_back(std::move(face));
        }
        emb.blocks.push_back(std::move(blk));
    }

    // Weak dual: faces are adjacent iff they share an edge (always a chord).
    emb.dual_adj.assign(emb.faces.size(), {});
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (size_t f = 0; f < emb.faces.size(); ++f) {
        const auto& cyc = emb.faces[f].cycle;
        for (size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i];
            int b = cyc[(i + 1) % cyc.size()];
            edge_faces[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(f));
        }
    }
    for (const auto& [key, fs] : edge_faces) {
        if (fs.size() == 2) {
            emb.dual_adj[static_cast<size_t>(fs[0])].push_back(fs[1]);
            emb.dual_adj[static_cast<size_t>(fs[1])].push_back(fs[0]);
        } else if (fs.size() > 2) {
            throw defect_error("edge shared by more than two bounded faces");
        }
    }
    return {std::move(emb), conclusive};
}

std::optional<PendantFace> find_pendant_face(const Multigraph& g, const OuterEmbedding& emb) {
    if (g.max_degree() > 3)
        throw input_error("pendant faces are defined for subcubic graphs");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 2)
            throw input_error("pendant face search requires minimum degree 2");
    if (emb.faces.size() < 2)
        throw input_error("pendant face search requires at least two bounded faces");

    for (size_t f = 0; f < emb.faces.size(); ++f) {
        if (emb.dual_adj[f].size() > 1)
            continue; // not a weak-dual leaf
        const auto& cyc = emb.faces[f].cycle;
        int len = static_cast<int>(cyc.size());
        std::vector<int> deg3;
        for (int i = 0; i < len; ++i)
            if (g.degree(cyc[static_cast<size_t>(i)]) == 3)
                deg3.push_back(i);
        std::vector<int> rotated;
        if (deg3.size() == 1) {
            for (int i = 0; i < len; ++i)
                rotated.push_back(cyc[static_cast<size_t>((deg3[0] + i) % len)]);
        } else if (deg3.size() == 2) {
            int a = deg3[0], b = deg3[1];
            int start; // v1; its cyclic predecessor is the other degree-3 vertex
            if ((a + 1) % len == b)
                start = b;
            else if ((b + 1) % len == a)
                start = a;
            else
                continue; // two degree-3 vertices but not consecutive
            for (int i = 0; i < len; ++i)
                rotated.push_back(cyc[static_cast<size_t>((start + i) % len)]);
        } else {
            continue;
        }
        return PendantFace{static_cast<int>(f), std::move(rotated)};
    }
    return std::nullopt;
}

} // namespace ttone
