#ifndef TTONE_BOUNDS_HPP
#define TTONE_BOUNDS_HPP

#include <map>
#include <optional>
#include <string>

#include "ttone/classify.hpp"
#include "ttone/graph.hpp"

namespace ttone {

/// Consolidated bound report: the universal lower bound t*Delta, every
/// applicable named upper bound, and the exact value when a closed form
/// covers the graph.
struct BoundReport {
    int lower = 0;                         // t * max degree
    std::map<std::string, int> uppers;     // bound name -> value
    std::optional<int> exact_known;
    std::string exact_source;              // provenance of exact_known
};

/// Exact t-tone chromatic index of the path P_n, n >= 2:
/// sum over i = 0..n-2 of max(0, t - C(i,2)).
int path_index(int n, int t);

/// Exact 2-tone chromatic index of the cycle C_n: 6 for n in {3,4,7}, else 5.
int cycle_index_2tone(int n);

/// Ceiling term of the 4*Delta-5 bound, evaluated in exact integer arithmetic.
int cc2_bound(int max_degree);

/// The report for graph g at tone t given its detected classes.
BoundReport upper_bounds(const Multigraph& g, int t, const ClassReport& classes);

/// tau'_t >= tau'_{t-1} + 2 whenever the line graph is nonempty (two
/// adjacent edges). The matching upper chain tau'_t <= tau'_{t-1} + chi'_t
/// needs a distance-t chromatic index solver and is deliberately not
/// computed here.
int chain_lower(int t_minus_1_value);

std::string bound_report_table(const BoundReport& r);
std::string bound_report_kv(const BoundReport& r);

} // namespace ttone

#endif
