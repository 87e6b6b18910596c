#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omega/condition.hpp"
#include "omega/sample.hpp"

namespace omega {

/// Directed graph on vertices 1..n without self-loops.
struct DiGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// `n <count>` followed by one `i j` edge per line; `#` starts a comment.
DiGraph parse_graph(std::string_view text);
std::string format_graph(const DiGraph& g);

/// Star over symbols 1..n: 0 -i-> i and i -i-> 0.
TransitionSystem star_ts(std::size_t n);

/// Transitions (0,i) and (i,i) of the star.
TransitionSet star_spoke(const TransitionSystem& star, std::size_t i);

struct ReductionInstance {
    TransitionSystem ts;
    Sample sample;
};

/// Positives (iijj)^ω per edge, negatives i^ω per vertex.
ReductionInstance coloring_to_genbuchi_instance(const DiGraph& g);

/// Positives i^ω per vertex, negatives (iijj)^ω per edge.
ReductionInstance coloring_to_rabin_instance(const DiGraph& g);

/// Colors (0-based component or pair index) read off a condition on the star
/// of g; throws InvalidCondition if a vertex gets no color or an edge is
/// monochromatic.
std::vector<std::size_t> decode_coloring(const AcceptanceCondition& c, const DiGraph& g);

/// No edge joins two vertices of the same color.
bool valid_coloring(const DiGraph& g, const std::vector<std::size_t>& colors);

}  // namespace omega
