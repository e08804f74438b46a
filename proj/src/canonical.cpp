#include "ttone/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ttone/errors.hpp"
#include "ttone/graph_io.hpp"

namespace ttone {

namespace {

// Union-find over vertices, used for orbit pruning.
struct Orbits {
    std::vector<int> parent;
    explicit Orbits(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

struct CanonSearch {
    const Multigraph& g;
    int n;
    std::vector<std::vector<bool>> adj;
    std::vector<std::vector<int>> dist_profile; // invariant seed per vertex

    std::string best;                // smallest adjacency string seen
    std::vector<int> best_perm;      // vertex -> position realizing `best`
    std::vector<std::vector<int>> automorphisms;

    explicit CanonSearch(const Multigraph& graph) : g(graph), n(graph.vertex_count()) {
        adj.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
        for (const auto& ed : g.edges()) {
            adj[static_cast<size_t>(ed.u)][static_cast<size_t>(ed.v)] = true;
            adj[static_cast<size_t>(ed.v)][static_cast<size_t>(ed.u)] = true;
        }
        dist_profile.resize(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> d(static_cast<size_t>(n), -1);
            std::vector<int> q{v};
            d[static_cast<size_t>(v)] = 0;
            for (size_t h = 0; h < q.size(); ++h) {
                int x = q[h];
                for (int w : g.neighbors(x))
                    if (d[static_cast<size_t>(w)] < 0) {
                        d[static_cast<size_t>(w)] = d[static_cast<size_t>(x)] + 1;
                        q.push_back(w);
                    }
            }
            std::sort(d.begin(), d.end());
            dist_profile[static_cast<size_t>(v)] = std::move(d);
        }
    }

    using Partition = std::vector<std::vector<int>>; // ordered cells

    Partition initial_partition() const {
        std::map<std::pair<int, std::vector<int>>, std::vector<int>> groups;
        for (int v = 0; v < n; ++v)
            groups[{g.degree(v), dist_profile[static_cast<size_t>(v)]}].push_back(v);
        Partition p;
        for (auto& [key, cell] : groups)
            p.push_back(std::move(cell));
        return p;
    }

    void refine(Partition& p) const {
        for (;;) {
            std::vector<int> cell_of(static_cast<size_t>(n), 0);
            for (size_t c = 0; c < p.size(); ++c)
                for (int v : p[c])
                    cell_of[static_cast<size_t>(v)] = static_cast<int>(c);
            Partition next;
            bool split = false;
            for (const auto& cell : p) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::map<std::vector<int>, std::vector<int>> groups;
                for (int v : cell) {
                    std::vector<int> sig;
                    for (int w : g.neighbors(v))
                        sig.push_back(cell_of[static_cast<size_t>(w)]);
                    std::sort(sig.begin(), sig.end());
                    groups[sig].push_back(v);
                }
                if (groups.size() > 1)
                    split = true;
                for (auto& [sig, sub] : groups)
                    next.push_back(std::move(sub));
            }
            p = std::move(next);
            if (!split)
                return;
        }
    }

    std::string string_for(const std::vector<int>& perm) const {
        // perm: vertex -> position. Upper triangle in position order.
        std::vector<int> at(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            at[static_cast<size_t>(perm[static_cast<size_t>(v)])] = v;
        std::string s;
        s.reserve(static_cast<size_t>(n * (n - 1) / 2));
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                s.push_back(adj[static_cast<size_t>(at[static_cast<size_t>(i)])]
                               [static_cast<size_t>(at[static_cast<size_t>(j)])]
                                ? '1'
                                : '0');
        return s;
    }

    void leaf(const Partition& p) {
        std::vector<int> perm(static_cast<size_t>(n));
        for (size_t pos = 0; pos < p.size(); ++pos)
            perm[static_cast<size_t>(p[pos][0])] = static_cast<int>(pos);
        std::string s = string_for(perm);
        if (best.empty() || s < best) {
            best = std::move(s);
            best_perm = perm;
            return;
        }
        if (s == best) {
            // Two labelings agree: their composition is an automorphism.
            std::vector<int> pi(static_cast<size_t>(n));
            std::vector<int> at_best(static_cast<size_t>(n)), at_new(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) {
                at_best[static_cast<size_t>(best_perm[static_cast<size_t>(v)])] = v;
                at_new[static_cast<size_t>(perm[static_cast<size_t>(v)])] = v;
            }
            for (int pos = 0; pos < n; ++pos)
                pi[static_cast<size_t>(at_best[static_cast<size_t>(pos)])] = at_new[static_cast<size_t>(pos)];
            for (int v = 0; v < n; ++v)
                for (int w = v + 1; w < n; ++w)
                    if (adj[static_cast<size_t>(v)][static_cast<size_t>(w)] !=
                        adj[static_cast<size_t>(pi[static_cast<size_t>(v)])][static_cast<size_t>(pi[static_cast<size_t>(w)])])
                        return; // not an automorphism after all; ignore
            automorphisms.push_back(std::move(pi));
        }
    }

    void descend(Partition p, std::vector<int>& fixed) {
        refine(p);
        size_t target = p.size();
        for (size_t c = 0; c < p.size(); ++c)
            if (p[c].size() > 1) {
                target = c;
                break;
            }
        if (target == p.size()) {
            leaf(p);
            return;
        }
        // Orbit pruning: among automorphisms fixing the individualized prefix
        // pointwise, equivalent candidates explore identical subtrees.
        Orbits orb(n);
        for (const auto& pi : automorphisms) {
            bool ok = true;
            for (int f : fixed)
                if (pi[static_cast<size_t>(f)] != f) {
                    ok = false;
                    break;
                }
            if (ok)
                for (int v = 0; v < n; ++v)
                    orb.unite(v, pi[static_cast<size_t>(v)]);
        }
        std::vector<int> tried;
        for (int v : p[target]) {
            bool skip = false;
            for (int w : tried)
                if (orb.find(v) == orb.find(w)) {
                    skip = true;
                    break;
                }
            if (skip)
                continue;
            tried.push_back(v);
            Partition child;
            for (size_t c = 0; c < p.size(); ++c) {
                if (c == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int w : p[c])
                        if (w != v)
                            rest.push_back(w);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(p[c]);
                }
            }
            fixed.push_back(v);
            descend(std::move(child), fixed);
            fixed.pop_back();
            // Refresh orbits with any automorphisms found below.
            for (const auto& pi : automorphisms) {
                bool ok = true;
                for (int f : fixed)
                    if (pi[static_cast<size_t>(f)] != f) {
                        ok = false;
                        break;
                    }
                if (ok)
                    for (int x = 0; x < n; ++x)
                        orb.unite(x, pi[static_cast<size_t>(x)]);
            }
        }
    }
};

} // namespace

std::vector<int> canonical_labeling(const Multigraph& g) {
    if (!g.is_simple())
        throw unsupported_error("canonical labeling requires a simple graph");
    int n = g.vertex_count();
    if (n == 0)
        return {};
    CanonSearch cs(g);
    std::vector<int> fixed;
    cs.descend(cs.initial_partition(), fixed);
    return cs.best_perm;
}

std::string canonical_graph6(const Multigraph& g) {
    auto perm = canonical_labeling(g);
    std::vector<std::pair<int, int>> edges;
    for (const auto& ed : g.edges())
        edges.push_back({perm[static_cast<size_t>(ed.u)], perm[static_cast<size_t>(ed.v)]});
    std::sort(edges.begin(), edges.end(), [](auto a, auto b) {
        return std::minmax(a.first, a.second) < std::minmax(b.first, b.second);
    });
    return to_graph6(Multigraph::from_edges(g.vertex_count(), edges));
}

bool is_isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_graph6(a) == canonical_graph6(b);
}

} // namespace ttone
