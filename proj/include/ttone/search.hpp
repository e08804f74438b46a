#ifndef TTONE_SEARCH_HPP
#define TTONE_SEARCH_HPP

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ttone/graph.hpp"
#include "ttone/solver.hpp"

namespace ttone {

enum class Pattern { K4, K4MinusE, ClawInduced };

/// K4 and K4-e as plain subgraphs, the claw as an induced one.
bool contains_subgraph(const Multigraph& g, Pattern p);

/// All connected simple cubic graphs on n vertices, one per isomorphism
/// class, in a deterministic order. 4 <= n <= 14, n even.
std::vector<Multigraph> enumerate_cubic(int n);

struct SearchTask {
    int max_n = 8;                  // even, 4..14; scans orders 4, 6, ..., max_n
    std::set<Pattern> forbidden;
    int t = 2;
    int report_threshold = 8;
    SolveOptions solve;
    int jobs = 1;
    std::optional<std::string> graph6_stream; // replaces enumeration when set
};

struct SearchFinding {
    int n = 0;
    std::string graph6; // canonical
    int index = -1;     // exact value, or refuted lower bound when unknown
    SolveStatus status = SolveStatus::Unknown;
    std::optional<PartialColoring> witness;
};

/// Exact index of every family member passing the forbidden-subgraph filter;
/// emits a finding per graph with index >= threshold (or unresolved by
/// limits). Sorted by (n, canonical graph6); independent of the worker count.
std::vector<SearchFinding> run_search(const SearchTask& task);

std::string findings_tsv(const std::vector<SearchFinding>& findings);

} // namespace ttone

#endif
