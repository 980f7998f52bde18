#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace venn {

// Simple undirected graph on vertices 0..V-1 (each edge listed at both ends).
using Graph = std::vector<std::vector<std::uint32_t>>;

struct Matching {
    std::vector<int> mate;  // -1 when unmatched
    std::size_t size = 0;
};

// Two-colouring; throws NotBipartite.
std::vector<int> bipartition(const Graph& g);

// Hopcroft-Karp on a bipartite graph; throws NotBipartite.
Matching bipartite_max_matching(const Graph& g);

// Edmonds' blossom algorithm for arbitrary graphs.
Matching general_max_matching(const Graph& g);

bool is_matching(const Graph& g, const Matching& m);

struct HallViolator {
    std::vector<std::uint32_t> S;  // one bipartition class
    std::vector<std::uint32_t> N;  // N(S)
};

// Alternating reachability from all unmatched vertices of a deficient side; of the two sides the
// smaller S is returned. Throws HasPerfectMatching, NotBipartite.
HallViolator hall_violator(const Graph& g);

// Violator with S inside `candidates` (one colour class) and N the full neighbourhood in g.
std::optional<HallViolator> hall_violator_within(const Graph& g, const std::vector<std::uint32_t>& candidates);

// |N(S)| < |S|, S inside one colour class, N exactly the neighbourhood.
bool verify_violator(const Graph& g, const HallViolator& h);

}  // namespace venn
