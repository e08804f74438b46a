#ifndef TTONE_COLORING_HPP
#define TTONE_COLORING_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ttone/graph.hpp"

namespace ttone {

/// A set of exactly t distinct colors from {1..k}, kept sorted.
class Label {
public:
    Label() = default;
    explicit Label(std::vector<int> colors);
    static Label of(int a, int b) { return Label({a, b}); }

    const std::vector<int>& colors() const { return colors_; }
    int size() const { return static_cast<int>(colors_.size()); }
    bool contains(int c) const;
    int intersection_size(const Label& other) const;
    int max_color() const { return colors_.empty() ? 0 : colors_.back(); }

    bool operator==(const Label& o) const { return colors_ == o.colors_; }
    bool operator!=(const Label& o) const { return colors_ != o.colors_; }
    bool operator<(const Label& o) const { return colors_ < o.colors_; } // lexicographic

    std::string str() const;

private:
    std::vector<int> colors_;
};

/// Edge -> Label map over a subset of edges, with tone t and palette size k.
/// Value semantics: extensions return new objects.
struct PartialColoring {
    int t = 2;
    int k = 0;
    std::map<int, Label> assignment;

    bool colored(int e) const { return assignment.count(e) > 0; }
    const Label& label(int e) const;
    std::vector<int> colored_edges() const;
};

/// A violating pair: colored edges sharing at least their line-graph distance.
struct Violation {
    int e;
    int e2;
    int distance;
    std::vector<int> shared;
    std::string str() const;
};

/// All violating pairs among colored edges, each pair once, ordered by
/// (e, e2). Labels are validated against t and the palette first.
std::vector<Violation> verify(const Multigraph& g, const PartialColoring& c);

/// Violations that the label `lab` on uncolored edge `e` would create.
std::vector<Violation> violations_if_assigned(const Multigraph& g, const PartialColoring& c, int e,
                                              const Label& lab);

/// Colors from {1..k} absent from every edge adjacent to e. e must be uncolored.
std::vector<int> free_colors(const Multigraph& g, const PartialColoring& c, int e);

/// Largest family of pairwise intersecting 2-subsets of `free`: all three
/// pairs when |free| = 3, otherwise the smallest color paired with every
/// other one. Requires |free| >= 3 and t = 2.
std::vector<Label> max_intersecting_family(const std::vector<int>& free, int t = 2);

/// The subset of `family` whose assignment to e creates no violation.
/// Family labels must consist of colors free at e.
std::vector<Label> valid_labels(const Multigraph& g, const PartialColoring& c, int e,
                                const std::vector<Label>& family);

/// c plus (e -> lab); throws input_error carrying the induced violation
/// when the label is not valid.
PartialColoring extend(const Multigraph& g, const PartialColoring& c, int e, const Label& lab);

/// Greedy coloring in the given edge order, one max-intersecting family per
/// edge, first valid label wins. Returns the stuck edge on failure.
struct GreedyResult {
    std::optional<PartialColoring> coloring; // set on success
    int failed_edge = -1;
};
GreedyResult greedy_color(const Multigraph& g, int t, int k, const std::vector<int>& order);

/// Text document with fields t, k and the edge -> colors map; bit-exact
/// round-trip. Lines: "t <t>", "k <k>", then "e <id> <c1> ... <ct>".
std::string coloring_to_text(const PartialColoring& c);
PartialColoring coloring_from_text(const std::string& text);

} // namespace ttone

#endif
