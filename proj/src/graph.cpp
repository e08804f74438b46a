#include "ttone/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ttone/errors.hpp"

namespace ttone {

Multigraph Multigraph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 0)
        throw input_error("negative vertex count");
    Multigraph g;
    g.vertex_count_ = vertex_count;
    g.edges_.reserve(edges.size());
    g.incident_.assign(static_cast<size_t>(vertex_count), {});
    int id = 0;
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw input_error("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw input_error("loop at vertex " + std::to_string(u));
        g.edges_.push_back({u, v});
        g.incident_[static_cast<size_t>(u)].push_back(id);
        g.incident_[static_cast<size_t>(v)].push_back(id);
        ++id;
    }
    return g;
}

const Multigraph::Edge& Multigraph::edge(int e) const {
    check_edge_id(e);
    return edges_[static_cast<size_t>(e)];
}

const std::vector<int>& Multigraph::incident(int v) const {
    check_vertex_id(v);
    return incident_[static_cast<size_t>(v)];
}

int Multigraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < vertex_count_; ++v)
        d = std::max(d, degree(v));
    return d;
}

std::vector<int> Multigraph::neighbors(int v) const {
    std::set<int> out;
    for (int e : incident(v)) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        out.insert(ed.u == v ? ed.v : ed.u);
    }
    return {out.begin(), out.end()};
}

bool Multigraph::adjacent(int u, int v) const {
    check_vertex_id(v);
    for (int e : incident(u)) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        if (ed.u == v || ed.v == v)
            return true;
    }
    return false;
}

std::vector<int> Multigraph::adjacent_edges(int e) const {
    const Edge& ed = edge(e);
    std::set<int> out;
    for (int f : incident(ed.u))
        if (f != e)
            out.insert(f);
    for (int f : incident(ed.v))
        if (f != e)
            out.insert(f);
    return {out.begin(), out.end()};
}

int Multigraph::edge_degree(int e) const {
    const Edge& ed = edge(e);
    return degree(ed.u) + degree(ed.v) - 2;
}

bool Multigraph::is_simple() const {
    std::set<std::pair<int, int>> seen;
    for (const Edge& ed : edges_) {
        auto key = std::minmax(ed.u, ed.v);
        if (!seen.insert({key.first, key.second}).second)
            return false;
    }
    return true;
}

std::vector<std::vector<int>> Multigraph::components() const {
    std::vector<int> comp(static_cast<size_t>(vertex_count_), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < vertex_count_; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0)
            continue;
        int c = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<int> q{s};
        comp[static_cast<size_t>(s)] = c;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            out[static_cast<size_t>(c)].push_back(v);
            for (int e : incident_[static_cast<size_t>(v)]) {
                const Edge& ed = edges_[static_cast<size_t>(e)];
                int w = (ed.u == v) ? ed.v : ed.u;
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = c;
                    q.push_back(w);
                }
            }
        }
        std::sort(out[static_cast<size_t>(c)].begin(), out[static_cast<size_t>(c)].end());
    }
    return out;
}

bool Multigraph::is_connected() const {
    if (vertex_count_ <= 1)
        return true;
    return components().size() == 1;
}

void Multigraph::check_edge_id(int e) const {
    if (e < 0 || e >= edge_count())
        throw input_error("unknown edge id " + std::to_string(e));
}

void Multigraph::check_vertex_id(int v) const {
    if (v < 0 || v >= vertex_count_)
        throw input_error("unknown vertex id " + std::to_string(v));
}

std::vector<std::pair<int, int>> edge_ball(const Multigraph& g, int e, int radius) {
    g.check_edge_id(e);
    std::vector<int> dist(static_cast<size_t>(g.edge_count()), -1);
    std::deque<int> q{e};
    dist[static_cast<size_t>(e)] = 0;
    std::vector<std::pair<int, int>> out{{e, 0}};
    while (!q.empty()) {
        int cur = q.front();
        q.pop_front();
        int d = dist[static_cast<size_t>(cur)];
        if (radius >= 0 && d >= radius)
            continue;
        for (int nxt : g.adjacent_edges(cur)) {
            if (dist[static_cast<size_t>(nxt)] < 0) {
                dist[static_cast<size_t>(nxt)] = d + 1;
                out.push_back({nxt, d + 1});
                q.push_back(nxt);
            }
        }
    }
    return out;
}

std::optional<int> edge_distance(const Multigraph& g, int e, int e2, int cap) {
    g.check_edge_id(e);
    g.check_edge_id(e2);
    if (e == e2)
        return 0;
    for (auto [f, d] : edge_ball(g, e, cap))
        if (f == e2)
            return d;
    return std::nullopt;
}

int eta(const Multigraph& g, int e) {
    const auto& ed = g.edge(e);
    std::set<int> un;
    for (int w : g.neighbors(ed.u))
        un.insert(w);
    for (int w : g.neighbors(ed.v))
        un.insert(w);
    un.erase(ed.u);
    un.erase(ed.v);
    return static_cast<int>(un.size());
}

std::vector<int> intermediate_vertices(const Multigraph& g, int e) {
    const auto& ed = g.edge(e);
    std::set<int> candidates;
    for (int w : g.neighbors(ed.u))
        candidates.insert(w);
    for (int w : g.neighbors(ed.v))
        candidates.insert(w);
    candidates.erase(ed.u);
    candidates.erase(ed.v);

    std::vector<int> out;
    for (int w : candidates) {
        bool hit = false;
        for (int f : g.incident(w)) {
            auto d = edge_distance(g, e, f, 2);
            if (d && *d == 2) {
                hit = true;
                break;
            }
        }
        if (hit)
            out.push_back(w);
    }
    return out;
}

} // namespace ttone
