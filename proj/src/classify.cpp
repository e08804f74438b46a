#include "ttone/classify.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <vector>

#include "ttone/embedding.hpp"

namespace ttone {

namespace {

std::vector<std::vector<bool>> adjacency_matrix(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<bool>> adj(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (const auto& ed : g.edges()) {
        adj[static_cast<size_t>(ed.u)][static_cast<size_t>(ed.v)] = true;
        adj[static_cast<size_t>(ed.v)][static_cast<size_t>(ed.u)] = true;
    }
    return adj;
}

bool claw_free(const Multigraph& g, const std::vector<std::vector<bool>>& adj) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        int k = static_cast<int>(nb.size());
        if (k < 3)
            continue;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                for (int l = j + 1; l < k; ++l)
                    if (!adj[static_cast<size_t>(nb[static_cast<size_t>(i)])][static_cast<size_t>(nb[static_cast<size_t>(j)])] &&
                        !adj[static_cast<size_t>(nb[static_cast<size_t>(i)])][static_cast<size_t>(nb[static_cast<size_t>(l)])] &&
                        !adj[static_cast<size_t>(nb[static_cast<size_t>(j)])][static_cast<size_t>(nb[static_cast<size_t>(l)])])
                        return false;
    }
    return true;
}

bool two_degenerate(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        deg[static_cast<size_t>(v)] = g.degree(v);
    std::vector<bool> removed(static_cast<size_t>(n), false);
    std::deque<int> q;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] <= 2)
            q.push_back(v);
    int gone = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (removed[static_cast<size_t>(v)] || deg[static_cast<size_t>(v)] > 2)
            continue;
        removed[static_cast<size_t>(v)] = true;
        ++gone;
        for (int e : g.incident(v)) {
            const auto& ed = g.edge(e);
            int w = (ed.u == v) ? ed.v : ed.u;
            if (!removed[static_cast<size_t>(w)] && --deg[static_cast<size_t>(w)] <= 2)
                q.push_back(w);
        }
    }
    return gone == n;
}

// max number of adjacent vertex pairs over 4-subsets; 6 means K4, >= 5 means K4-e.
int densest_quad(const Multigraph& g, const std::vector<std::vector<bool>>& adj) {
    int n = g.vertex_count();
    int best = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!adj[static_cast<size_t>(a)][static_cast<size_t>(b)] && best >= 5)
                continue; // a K4 or K4-e containing a,b needs most pairs present
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int pairs = adj[static_cast<size_t>(a)][static_cast<size_t>(b)] +
                                adj[static_cast<size_t>(a)][static_cast<size_t>(c)] +
                                adj[static_cast<size_t>(a)][static_cast<size_t>(d)] +
                                adj[static_cast<size_t>(b)][static_cast<size_t>(c)] +
                                adj[static_cast<size_t>(b)][static_cast<size_t>(d)] +
                                adj[static_cast<size_t>(c)][static_cast<size_t>(d)];
                    best = std::max(best, pairs);
                    if (best == 6)
                        return 6;
                }
        }
    return best;
}

// Mutable multigraph for the reverse series-parallel reduction.
struct SpState {
    struct E {
        int u, v;
        bool alive;
    };
    std::vector<E> edges;
    std::vector<bool> vertex_alive;
    std::vector<int> degree;

    explicit SpState(const Multigraph& g)
        : vertex_alive(static_cast<size_t>(g.vertex_count()), true),
          degree(static_cast<size_t>(g.vertex_count()), 0) {
        for (const auto& ed : g.edges()) {
            edges.push_back({ed.u, ed.v, true});
            ++degree[static_cast<size_t>(ed.u)];
            ++degree[static_cast<size_t>(ed.v)];
        }
    }

    int alive_vertices() const {
        int c = 0;
        for (bool b : vertex_alive)
            c += b;
        return c;
    }
    int alive_edges() const {
        int c = 0;
        for (const auto& e : edges)
            c += e.alive;
        return c;
    }
};

} // namespace

bool is_series_parallel_subcubic(const Multigraph& g) {
    if (g.vertex_count() < 2 || g.max_degree() > 3)
        return false;
    SpState s(g);
    for (;;) {
        if (s.alive_vertices() == 2 && s.alive_edges() == 2) {
            std::pair<int, int> ends[2];
            int k = 0;
            for (const auto& e : s.edges)
                if (e.alive)
                    ends[k++] = std::minmax(e.u, e.v);
            if (ends[0] == ends[1])
                return true; // single parallel pair: the construction base
            return false;
        }
        // Suppress the lowest-indexed degree-2 vertex with distinct neighbors.
        bool progressed = false;
        for (size_t v = 0; v < s.vertex_alive.size() && !progressed; ++v) {
            if (!s.vertex_alive[v] || s.degree[v] != 2)
                continue;
            int e1 = -1, e2 = -1;
            for (size_t i = 0; i < s.edges.size(); ++i) {
                if (!s.edges[i].alive)
                    continue;
                if (s.edges[i].u == static_cast<int>(v) || s.edges[i].v == static_cast<int>(v))
                    (e1 < 0 ? e1 : e2) = static_cast<int>(i);
            }
            int a = (s.edges[static_cast<size_t>(e1)].u == static_cast<int>(v))
                        ? s.edges[static_cast<size_t>(e1)].v
                        : s.edges[static_cast<size_t>(e1)].u;
            int b = (s.edges[static_cast<size_t>(e2)].u == static_cast<int>(v))
                        ? s.edges[static_cast<size_t>(e2)].v
                        : s.edges[static_cast<size_t>(e2)].u;
            if (a == b)
                continue; // both edges go to the same vertex; not a series vertex
            s.edges[static_cast<size_t>(e1)].alive = false;
            s.edges[static_cast<size_t>(e2)].alive = false;
            s.vertex_alive[v] = false;
            s.degree[v] = 0;
            s.edges.push_back({a, b, true}); // degrees of a and b are unchanged
            progressed = true;
        }
        if (progressed)
            continue;
        // Delete the lowest-indexed parallel duplicate.
        int victim = -1;
        for (size_t i = 0; i < s.edges.size() && victim < 0; ++i) {
            if (!s.edges[i].alive)
                continue;
            auto key_i = std::minmax(s.edges[i].u, s.edges[i].v);
            for (size_t j = 0; j < i; ++j) {
                if (!s.edges[j].alive)
                    continue;
                if (std::minmax(s.edges[j].u, s.edges[j].v) == key_i) {
                    victim = static_cast<int>(i);
                    break;
                }
            }
        }
        if (victim < 0)
            return false; // irreducible and not the base pair
        s.edges[static_cast<size_t>(victim)].alive = false;
        --s.degree[static_cast<size_t>(s.edges[static_cast<size_t>(victim)].u)];
        --s.degree[static_cast<size_t>(s.edges[static_cast<size_t>(victim)].v)];
    }
}

ClassReport classify(const Multigraph& g) {
    ClassReport r;
    int n = g.vertex_count();
    r.max_degree = g.max_degree();
    r.is_tree = g.is_connected() && g.edge_count() == n - 1 && n >= 1;
    r.is_subcubic = r.max_degree <= 3;
    r.is_cubic = n > 0 && r.is_subcubic;
    for (int v = 0; v < n && r.is_cubic; ++v)
        if (g.degree(v) != 3)
            r.is_cubic = false;
    auto adj = adjacency_matrix(g);
    r.is_claw_free = claw_free(g, adj);
    r.is_2_degenerate = two_degenerate(g);
    int dq = densest_quad(g, adj);
    r.is_k4_free = dq < 6;
    r.is_k4_minus_e_free = dq < 5;
    r.is_series_parallel_subcubic = is_series_parallel_subcubic(g);

    if (g.is_simple() && n > 0) {
        bool all = true;
        bool conclusive = true;
        for (const auto& comp : g.components()) {
            // Re-run the embedder on each component.
            std::vector<int> local(static_cast<size_t>(n), -1);
            for (size_t i = 0; i < comp.size(); ++i)
                local[static_cast<size_t>(comp[i])] = static_cast<int>(i);
            std::vector<std::pair<int, int>> edges;
            for (const auto& ed : g.edges())
                if (local[static_cast<size_t>(ed.u)] >= 0 && local[static_cast<size_t>(ed.v)] >= 0)
                    edges.push_back({local[static_cast<size_t>(ed.u)], local[static_cast<size_t>(ed.v)]});
            auto res = outer_embedding(Multigraph::from_edges(static_cast<int>(comp.size()), edges));
            if (!res.conclusive) {
                conclusive = false;
                break;
            }
            if (!res.embedding) {
                all = false;
                break;
            }
        }
        if (conclusive)
            r.is_outerplanar = all;
    }
    return r;
}

std::string classify_to_text(const ClassReport& r) {
    std::ostringstream out;
    auto flag = [&](const char* name, bool v) { out << name << " " << (v ? "true" : "false") << "\n"; };
    flag("tree", r.is_tree);
    flag("subcubic", r.is_subcubic);
    flag("cubic", r.is_cubic);
    flag("claw_free", r.is_claw_free);
    flag("two_degenerate", r.is_2_degenerate);
    flag("k4_free", r.is_k4_free);
    flag("k4_minus_e_free", r.is_k4_minus_e_free);
    flag("series_parallel_subcubic", r.is_series_parallel_subcubic);
    out << "outerplanar " << (r.is_outerplanar ? (*r.is_outerplanar ? "true" : "false") : "unknown") << "\n";
    out << "max_degree " << r.max_degree << "\n";
    return out.str();
}

} // namespace ttone
