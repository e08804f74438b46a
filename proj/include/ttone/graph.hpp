#ifndef TTONE_GRAPH_HPP
#define TTONE_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ttone {

/// Loopless undirected multigraph with dense vertex indices 0..n-1 and
/// dense edge ids 0..m-1. Parallel edges are allowed, loops are not.
/// Immutable after construction.
class Multigraph {
public:
    struct Edge {
        int u;
        int v;
    };

    Multigraph() = default;

    /// Builds a graph, validating the no-loop and index-range invariants.
    static Multigraph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(int e) const;
    const std::vector<Edge>& edges() const { return edges_; }

    /// Edge ids incident to v, ascending.
    const std::vector<int>& incident(int v) const;
    int degree(int v) const { return static_cast<int>(incident(v).size()); }
    int max_degree() const;

    /// Distinct neighbor vertices of v, ascending (parallel edges collapse).
    std::vector<int> neighbors(int v) const;
    bool adjacent(int u, int v) const;

    /// Edge ids sharing an endpoint with e (e itself excluded), ascending.
    std::vector<int> adjacent_edges(int e) const;

    /// d_G(e) = d(u) + d(v) - 2.
    int edge_degree(int e) const;

    bool is_simple() const;
    bool is_connected() const;
    std::vector<std::vector<int>> components() const; // vertex lists

    void check_edge_id(int e) const;
    void check_vertex_id(int v) const;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

/// Distance between edges e and e2 measured in the line graph: 0 for e == e2,
/// 1 for edges sharing an endpoint, BFS beyond that. nullopt when the edges
/// lie in different components. `cap`, when nonnegative, stops the BFS early:
/// distances > cap come back as nullopt.
std::optional<int> edge_distance(const Multigraph& g, int e, int e2, int cap = -1);

/// BFS ball in the line graph: all edge ids within distance `radius` of e,
/// paired with their distance (e itself included at distance 0).
std::vector<std::pair<int, int>> edge_ball(const Multigraph& g, int e, int radius);

/// eta(xy) = |N(x) u N(y)| - 2, neighbors counted as a vertex set.
int eta(const Multigraph& g, int e);

/// Vertices adjacent to an endpoint of e and incident with at least one edge
/// at line-graph distance exactly 2 from e. Ascending.
std::vector<int> intermediate_vertices(const Multigraph& g, int e);

} // namespace ttone

#endif
