#ifndef TTONE_SOLVER_HPP
#define TTONE_SOLVER_HPP

#include <optional>

#include "ttone/coloring.hpp"
#include "ttone/graph.hpp"

namespace ttone {

struct SolveOptions {
    std::optional<long long> node_limit;
    std::optional<long long> time_limit_ms;
    std::optional<int> initial_upper; // cap for the k search in exact_index
    bool symmetry_breaking = true;
};

enum class SolveStatus { Yes, No, Unknown };

struct SolveResult {
    SolveStatus status = SolveStatus::Unknown;
    std::optional<PartialColoring> witness; // set when Yes
    long long nodes = 0;
};

/// Backtracking with per-edge feasible-label sets; No is exhaustive,
/// Unknown only when a limit fired.
SolveResult is_k_colorable(const Multigraph& g, int t, int k, const SolveOptions& opts = {});

struct IndexResult {
    SolveStatus status = SolveStatus::Unknown; // Yes: value is exact
    int value = -1;
    std::optional<PartialColoring> witness;
    int bracket_lo = 0; // every k < bracket_lo is exhaustively refuted
    int bracket_hi = -1; // smallest k known colorable, -1 when none
    long long nodes = 0;
};

/// Minimum k admitting a t-tone edge k-coloring; linear scan upward from
/// t * Delta, each refusal an exhaustive certificate.
IndexResult exact_index(const Multigraph& g, int t, const SolveOptions& opts = {});

struct ExtendResult {
    SolveStatus status = SolveStatus::Unknown; // Yes: completed, No: UNSAT
    std::optional<PartialColoring> coloring;
    long long nodes = 0;
};

/// Completes a valid partial coloring to all edges within its own k.
ExtendResult extend_exact(const Multigraph& g, const PartialColoring& c, const SolveOptions& opts = {});

} // namespace ttone

#endif
