#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "venn/matching.hpp"

namespace venn {

using VertexSequence = std::vector<std::uint32_t>;

// Exact backtracking with degree-2 forcing, connectivity and colour-balance pruning.
std::optional<VertexSequence> find_hamilton_cycle(const Graph& g);
// Over all endpoint pairs.
std::optional<VertexSequence> find_hamilton_path(const Graph& g);

// Calls sink once per undirected Hamilton cycle (starting at vertex 0, second vertex smaller than
// the last). The sink returns false to stop. Returns the number of cycles reported.
std::uint64_t for_each_hamilton_cycle(const Graph& g, const std::function<bool(const VertexSequence&)>& sink);

bool is_hamilton_cycle(const Graph& g, const VertexSequence& c);
bool is_hamilton_path(const Graph& g, const VertexSequence& p);

}  // namespace venn
