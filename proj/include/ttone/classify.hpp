#ifndef TTONE_CLASSIFY_HPP
#define TTONE_CLASSIFY_HPP

#include <optional>
#include <string>

#include "ttone/graph.hpp"

namespace ttone {

/// Structural classes driving colorer dispatch and bound applicability.
struct ClassReport {
    bool is_tree = false;
    bool is_subcubic = false;
    bool is_cubic = false;
    bool is_claw_free = false;
    bool is_2_degenerate = false;
    bool is_k4_free = false;
    bool is_k4_minus_e_free = false;
    bool is_series_parallel_subcubic = false;
    std::optional<bool> is_outerplanar; // absent when detection declined
    int max_degree = 0;
};

ClassReport classify(const Multigraph& g);

/// The reverse-operation test on its own: repeatedly suppress the
/// lowest-indexed degree-2 vertex with distinct neighbors, else delete the
/// lowest-indexed parallel duplicate, until a single parallel pair remains.
bool is_series_parallel_subcubic(const Multigraph& g);

std::string classify_to_text(const ClassReport& r);

} // namespace ttone

#endif
