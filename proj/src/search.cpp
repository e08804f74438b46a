#include "ttone/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "ttone/canonical.hpp"
#include "ttone/errors.hpp"
#include "ttone/graph_io.hpp"

namespace ttone {

bool contains_subgraph(const Multigraph& g, Pattern p) {
    int n = g.vertex_count();
    if (p == Pattern::ClawInduced) {
        for (int v = 0; v < n; ++v) {
            auto nb = g.neighbors(v);
            int k = static_cast<int>(nb.size());
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    for (int l = j + 1; l < k; ++l)
                        if (!g.adjacent(nb[static_cast<size_t>(i)], nb[static_cast<size_t>(j)]) &&
                            !g.adjacent(nb[static_cast<size_t>(i)], nb[static_cast<size_t>(l)]) &&
                            !g.adjacent(nb[static_cast<size_t>(j)], nb[static_cast<size_t>(l)]))
                            return true;
        }
        return false;
    }
    int need = (p == Pattern::K4) ? 6 : 5;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int pairs = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(a, d) +
                                g.adjacent(b, c) + g.adjacent(b, d) + g.adjacent(c, d);
                    if (pairs >= need)
                        return true;
                }
    return false;
}

namespace {

// DFS over labeled cubic graphs in discovery order (fresh vertices are opened
// in increasing index order, the smallest open vertex is completed first),
// deduplicated through the canonical form.
struct CubicGen {
    int n;
    std::vector<std::vector<bool>> adj;
    std::vector<int> deg;
    int used;
    std::set<std::string> seen;
    std::vector<Multigraph> out;

    explicit CubicGen(int order)
        : n(order),
          adj(static_cast<size_t>(order), std::vector<bool>(static_cast<size_t>(order), false)),
          deg(static_cast<size_t>(order), 0),
          used(1) {}

    void emit() {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (adj[static_cast<size_t>(i)][static_cast<size_t>(j)])
                    edges.push_back({i, j});
        Multigraph g = Multigraph::from_edges(n, edges);
        std::string canon = canonical_graph6(g);
        if (seen.insert(canon).second)
            out.push_back(std::move(g));
    }

    void run() {
        step();
    }

    void step() {
        int target = -1;
        for (int v = 0; v < used; ++v)
            if (deg[static_cast<size_t>(v)] < 3) {
                target = v;
                break;
            }
        if (target < 0) {
            if (used == n)
                emit();
            return; // all opened vertices closed; opening another would disconnect
        }
        int need = 3 - deg[static_cast<size_t>(target)];
        std::vector<int> cands;
        for (int w = target + 1; w < used; ++w)
            if (deg[static_cast<size_t>(w)] < 3 && !adj[static_cast<size_t>(target)][static_cast<size_t>(w)])
                cands.push_back(w);
        int max_fresh = std::min(need, n - used);
        // Choose s partners among open used vertices, the rest fresh.
        std::vector<int> pick;
        for (int fresh = 0; fresh <= max_fresh; ++fresh) {
            int s = need - fresh;
            if (s < 0 || s > static_cast<int>(cands.size()))
                continue;
            pick.assign(static_cast<size_t>(s), 0);
            choose(cands, 0, s, pick, fresh);
        }
    }

    void choose(const std::vector<int>& cands, int start, int remaining, std::vector<int>& pick, int fresh) {
        if (remaining == 0) {
            apply(pick, fresh);
            return;
        }
        for (int i = start; i <= static_cast<int>(cands.size()) - remaining; ++i) {
            pick[static_cast<size_t>(pick.size()) - static_cast<size_t>(remaining)] = cands[static_cast<size_t>(i)];
            choose(cands, i + 1, remaining - 1, pick, fresh);
        }
    }

    void apply(const std::vector<int>& chosen_used, int fresh) {
        int target = -1;
        for (int v = 0; v < used; ++v)
            if (deg[static_cast<size_t>(v)] < 3) {
                target = v;
                break;
            }
        std::vector<int> partners(chosen_used);
        for (int f = 0; f < fresh; ++f)
            partners.push_back(used + f);
        int prev_used = used;
        used += fresh;
        for (int w : partners) {
            adj[static_cast<size_t>(target)][static_cast<size_t>(w)] = true;
            adj[static_cast<size_t>(w)][static_cast<size_t>(target)] = true;
            ++deg[static_cast<size_t>(target)];
            ++deg[static_cast<size_t>(w)];
        }
        step();
        for (int w : partners) {
            adj[static_cast<size_t>(target)][static_cast<size_t>(w)] = false;
            adj[static_cast<size_t>(w)][static_cast<size_t>(target)] = false;
            --deg[static_cast<size_t>(target)];
            --deg[static_cast<size_t>(w)];
        }
        used = prev_used;
    }
};

bool is_connected_cubic(const Multigraph& g) {
    if (!g.is_simple() || !g.is_connected() || g.vertex_count() == 0)
        return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3)
            return false;
    return true;
}

// Rewrites a witness onto the edge ids of parse_graph6(canonical form), so
// that emitted findings verify against their own graph6 string.
PartialColoring witness_on_canonical(const Multigraph& g, const PartialColoring& c) {
    auto perm = canonical_labeling(g);
    int n = g.vertex_count();
    std::map<std::pair<int, int>, int> rank; // (min,max) -> canonical edge id
    {
        std::vector<std::vector<bool>> adj(static_cast<size_t>(n),
                                           std::vector<bool>(static_cast<size_t>(n), false));
        for (const auto& ed : g.edges()) {
            int a = perm[static_cast<size_t>(ed.u)];
            int b = perm[static_cast<size_t>(ed.v)];
            adj[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
            adj[static_cast<size_t>(b)][static_cast<size_t>(a)] = true;
        }
        int next = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (adj[static_cast<size_t>(i)][static_cast<size_t>(j)])
                    rank[{i, j}] = next++;
    }
    PartialColoring out;
    out.t = c.t;
    out.k = c.k;
    for (const auto& [e, lab] : c.assignment) {
        const auto& ed = g.edge(e);
        auto key = std::minmax(perm[static_cast<size_t>(ed.u)], perm[static_cast<size_t>(ed.v)]);
        out.assignment.emplace(rank.at({key.first, key.second}), lab);
    }
    return out;
}

} // namespace

std::vector<Multigraph> enumerate_cubic(int n) {
    if (n < 4 || n > 14 || n % 2 != 0)
        throw input_error("cubic enumeration supports even orders 4..14");
    CubicGen gen(n);
    gen.run();
    return std::move(gen.out);
}

std::vector<SearchFinding> run_search(const SearchTask& task) {
    if (task.t < 1)
        throw input_error("tone must be positive");

    // Collect the candidate graphs.
    std::vector<Multigraph> graphs;
    if (task.graph6_stream) {
        std::istringstream in(*task.graph6_stream);
        std::string line;
        std::set<std::string> seen;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            Multigraph g = parse_graph6(line);
            if (!is_connected_cubic(g))
                continue; // outside the cubic family
            if (seen.insert(canonical_graph6(g)).second)
                graphs.push_back(std::move(g));
        }
    } else {
        if (task.max_n < 4 || task.max_n > 14 || task.max_n % 2 != 0)
            throw input_error("max_n must be even and within 4..14");
        for (int n = 4; n <= task.max_n; n += 2)
            for (auto& g : enumerate_cubic(n))
                graphs.push_back(std::move(g));
    }

    std::vector<const Multigraph*> candidates;
    for (const auto& g : graphs) {
        bool banned = false;
        for (Pattern p : task.forbidden)
            if (contains_subgraph(g, p)) {
                banned = true;
                break;
            }
        if (!banned)
            candidates.push_back(&g);
    }

    std::vector<std::optional<SearchFinding>> slots(candidates.size());
    std::atomic<size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= candidates.size())
                return;
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (first_error)
                    return;
            }
            const Multigraph& g = *candidates[i];
            IndexResult res;
            try {
                res = exact_index(g, task.t, task.solve);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                return;
            }
            SearchFinding f;
            f.n = g.vertex_count();
            f.graph6 = canonical_graph6(g);
            if (res.status == SolveStatus::Yes) {
                f.index = res.value;
                f.status = SolveStatus::Yes;
                f.witness = witness_on_canonical(g, *res.witness);
                if (res.value >= task.report_threshold)
                    slots[i] = std::move(f);
            } else {
                // Unresolved by limits: surface it rather than dropping it.
                f.index = res.bracket_lo;
                f.status = SolveStatus::Unknown;
                slots[i] = std::move(f);
            }
        }
    };
    int jobs = std::max(1, task.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    if (first_error)
        std::rethrow_exception(first_error);

    std::vector<SearchFinding> findings;
    for (auto& s : slots)
        if (s)
            findings.push_back(std::move(*s));
    std::sort(findings.begin(), findings.end(), [](const SearchFinding& a, const SearchFinding& b) {
        return std::tie(a.n, a.graph6) < std::tie(b.n, b.graph6);
    });
    return findings;
}

std::string findings_tsv(const std::vector<SearchFinding>& findings) {
    std::ostringstream out;
    for (const auto& f : findings)
        out << f.n << "\t" << f.graph6 << "\t" << f.index << "\t"
            << (f.status == SolveStatus::Yes ? "exact" : "unknown") << "\n";
    return out.str();
}

} // namespace ttone
