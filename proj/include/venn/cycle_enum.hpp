#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "venn/hypercube.hpp"

namespace venn {

struct LengthWindow {
    int dim = 0;  // m = n - 1
    int min_len = 0;
    int max_len = 0;
};

// ceil((2^{n+1} - 4) / n), rounded up to the next even integer. Throws DimensionTooSmall for n < 3.
int min_boundary_length(int n);

// Boundary-length window for splitting n-Venn quadrangulations: cycles of Q_{n-1}.
LengthWindow length_window(int n);

// Restricts the search to the subtrees below selected prefixes of a fixed depth.
// Prefixes are numbered in DFS order; prefix k is searched iff k % num_tasks == task.
struct PrefixPartition {
    int depth = 0;
    std::uint64_t task = 0;
    std::uint64_t num_tasks = 1;
};

struct CycleEnumStats {
    std::uint64_t nodes = 0;
    std::uint64_t emitted = 0;
    std::uint64_t prefixes = 0;  // prefixes seen at the partition depth
};

using CycleSink = std::function<void(const TypeSequence&)>;

// Emits the canonical type sequences (see is_canonical_cycle) of all simple cycles of Q_m
// whose length lies in [min_len, max_len], in lexicographic order. m <= 6.
CycleEnumStats enumerate_cycles(int m, int min_len, int max_len, const CycleSink& sink,
                                std::optional<PrefixPartition> partition = std::nullopt);

inline CycleEnumStats enumerate_cycles(int m, int len, const CycleSink& sink,
                                       std::optional<PrefixPartition> partition = std::nullopt) {
    return enumerate_cycles(m, len, len, sink, partition);
}

}  // namespace venn
