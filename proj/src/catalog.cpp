#include "ttone/catalog.hpp"

#include <vector>

#include "ttone/errors.hpp"

namespace ttone {

namespace {

int parse_order(const std::string& name, size_t colon) {
    try {
        size_t used = 0;
        std::string tail = name.substr(colon + 1);
        int n = std::stoi(tail, &used);
        if (used != tail.size())
            throw input_error("bad graph order in '" + name + "'");
        return n;
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("bad graph order in '" + name + "'");
    }
}

} // namespace

Multigraph petersen_graph() {
    // Outer vertices v1..v5 = 0..4, inner u1..u5 = 5..9.
    std::vector<std::pair<int, int>> edges = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},      // outer cycle
        {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},      // inner pentagram u1u3 u3u5 u5u2 u2u4 u4u1
        {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},      // spokes
    };
    return Multigraph::from_edges(10, edges);
}

Multigraph catalog(const std::string& name) {
    size_t colon = name.find(':');
    std::string kind = name.substr(0, colon);

    if (colon != std::string::npos) {
        int n = parse_order(name, colon);
        if (kind == "path") {
            if (n < 1)
                throw input_error("path needs order >= 1");
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i + 1 < n; ++i)
                edges.push_back({i, i + 1});
            return Multigraph::from_edges(n, edges);
        }
        if (kind == "cycle") {
            if (n < 3)
                throw input_error("cycle needs order >= 3");
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < n; ++i)
                edges.push_back({i, (i + 1) % n});
            return Multigraph::from_edges(n, edges);
        }
        if (kind == "star") {
            // star:n is K_{1,n}: center 0 plus n leaves.
            if (n < 1)
                throw input_error("star needs >= 1 leaf");
            std::vector<std::pair<int, int>> edges;
            for (int i = 1; i <= n; ++i)
                edges.push_back({0, i});
            return Multigraph::from_edges(n + 1, edges);
        }
        if (kind == "complete") {
            if (n < 1)
                throw input_error("complete graph needs order >= 1");
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    edges.push_back({i, j});
            return Multigraph::from_edges(n, edges);
        }
        throw input_error("unknown catalog name '" + name + "'");
    }

    if (kind == "k4_minus_e")
        return Multigraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    if (kind == "petersen")
        return petersen_graph();
    if (kind == "fig2") {
        // 10-vertex cubic graph; vertex labels 1..10 renumbered to 0..9.
        std::vector<std::pair<int, int>> labeled = {
            {8, 4}, {4, 1}, {1, 2}, {2, 3}, {3, 1}, {3, 6}, {6, 10}, {10, 8},
            {8, 9}, {9, 10}, {9, 5}, {5, 2}, {5, 7}, {7, 4}, {7, 6},
        };
        std::vector<std::pair<int, int>> edges;
        for (auto [a, b] : labeled)
            edges.push_back({a - 1, b - 1});
        return Multigraph::from_edges(10, edges);
    }
    throw input_error("unknown catalog name '" + name + "'");
}

} // namespace ttone
