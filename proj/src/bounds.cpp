#include "ttone/bounds.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>

#include "ttone/errors.hpp"

namespace ttone {

int path_index(int n, int t) {
    if (n < 2)
        throw input_error("path formula needs order >= 2");
    if (t < 1)
        throw input_error("tone must be positive");
    long long total = 0;
    for (int i = 0; i <= n - 2; ++i) {
        long long choose2 = static_cast<long long>(i) * (i - 1) / 2;
        total += std::max(0LL, static_cast<long long>(t) - choose2);
    }
    return static_cast<int>(total);
}

int cycle_index_2tone(int n) {
    if (n < 3)
        throw input_error("cycle needs order >= 3");
    if (n == 3 || n == 4 || n == 7)
        return 6;
    return 5;
}

namespace {

std::uint64_t isqrt_floor(std::uint64_t x) {
    std::uint64_t r = 0;
    std::uint64_t bit = 1ULL << 62;
    while (bit > x)
        bit >>= 2;
    while (bit) {
        if (x >= r + bit) {
            x -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

} // namespace

int cc2_bound(int max_degree) {
    if (max_degree < 2)
        throw input_error("bound needs max degree >= 2");
    // ceil((1 + sqrt(D)) / 2) = smallest q with (2q - 1)^2 >= D.
    std::uint64_t delta = static_cast<std::uint64_t>(max_degree);
    std::uint64_t d = 1 + 8 * (2 * delta - 2) * (2 * delta - 3);
    std::uint64_t r = isqrt_floor(d);
    std::uint64_t target = (r * r == d) ? r : r + 1; // ceil(sqrt(D))
    std::uint64_t q = (target + 2) / 2;              // smallest q with 2q-1 >= target
    return 4 * max_degree - 5 + static_cast<int>(q);
}

int chain_lower(int t_minus_1_value) {
    return t_minus_1_value + 2;
}

namespace {

// A star K_{1,n}: one center of degree n >= 1, all other vertices leaves.
bool is_star(const Multigraph& g, const ClassReport& cls, int& leaves) {
    if (!cls.is_tree || g.edge_count() < 1)
        return false;
    int centers = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d > 1) {
            ++centers;
            if (centers > 1)
                return false;
        }
    }
    leaves = g.edge_count();
    return true; // includes K_2 (two degree-1 vertices, n = 1)
}

bool is_single_cycle(const Multigraph& g) {
    if (g.vertex_count() < 3 || !g.is_connected() || !g.is_simple())
        return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2)
            return false;
    return true;
}

} // namespace

BoundReport upper_bounds(const Multigraph& g, int t, const ClassReport& classes) {
    if (t < 1)
        throw input_error("tone must be positive");
    BoundReport r;
    int delta = classes.max_degree;
    r.lower = t * delta;
    if (g.edge_count() == 0) {
        r.exact_known = 0;
        r.exact_source = "empty";
        return r;
    }

    // General-t degree bound; the line graph must be nonempty, i.e. Delta >= 2.
    if (delta >= 2)
        r.uppers["general_t"] = (t * t + t) * (2 * delta - 2);

    if (t == 2 && delta >= 2) {
        r.uppers["cc2"] = cc2_bound(delta);
        r.uppers["t1_6d4"] = 6 * delta - 4;
    }

    bool known_planar = classes.is_tree || classes.is_series_parallel_subcubic ||
                        (classes.is_outerplanar && *classes.is_outerplanar);
    if (t == 2) {
        if (known_planar)
            r.uppers["planar"] = std::max(41, 3 * delta + 5);
        if (classes.is_outerplanar && *classes.is_outerplanar)
            r.uppers["outerplanar"] = std::max(14, 3 * delta);
        if (classes.is_claw_free && classes.is_subcubic)
            r.uppers["clawfree_subcubic"] = 11;
        if (classes.is_2_degenerate && classes.is_subcubic)
            r.uppers["degen2_subcubic"] = 10;
        if (classes.is_series_parallel_subcubic)
            r.uppers["sp_subcubic"] = 9;
        if (classes.is_subcubic && classes.is_outerplanar && *classes.is_outerplanar)
            r.uppers["subcubic_outerplanar"] = 8;
        if (classes.is_tree && delta >= 3) {
            r.uppers["tree_exact"] = 2 * delta;
            r.exact_known = 2 * delta;
            r.exact_source = "tree";
        }
    }

    int star_leaves = 0;
    if (is_star(g, classes, star_leaves)) {
        r.exact_known = t * star_leaves;
        r.exact_source = "star";
    } else if (classes.is_tree && delta <= 2 && g.vertex_count() >= 2) {
        r.exact_known = path_index(g.vertex_count(), t); // the graph is a path
        r.exact_source = "path";
    } else if (t == 2 && is_single_cycle(g)) {
        r.exact_known = cycle_index_2tone(g.vertex_count());
        r.exact_source = "cycle";
    } else if (delta == 1) {
        r.exact_known = t; // a nonempty matching
        r.exact_source = "matching";
    }
    return r;
}

std::string bound_report_table(const BoundReport& r) {
    std::ostringstream out;
    out << std::left << std::setw(22) << "lower_tdelta" << r.lower << "\n";
    for (const auto& [name, v] : r.uppers)
        out << std::left << std::setw(22) << name << v << "\n";
    if (r.exact_known)
        out << std::left << std::setw(22) << "exact" << *r.exact_known << "  (" << r.exact_source << ")\n";
    return out.str();
}

std::string bound_report_kv(const BoundReport& r) {
    std::ostringstream out;
    out << "lower_tdelta " << r.lower << "\n";
    for (const auto& [name, v] : r.uppers)
        out << name << " " << v << "\n";
    if (r.exact_known)
        out << "exact " << *r.exact_known << " " << r.exact_source << "\n";
    return out.str();
}

} // namespace ttone
