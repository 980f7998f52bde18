#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "venn/cquad_fill.hpp"
#include "venn/quadrangulation.hpp"

namespace venn {

// H = P1 + P'0 + rungs (x0, x1) for x on the common boundary cycle. P' is embedded mirrored.
PlaneGraph glue(const CQuadrangulation& p, const CQuadrangulation& q);

// Chunks of each half-space class {x_i = b} of a filling, as seen from its boundary.
struct Prescreen {
    int dim = 0;
    bool discard = false;  // some class has a component that misses the boundary
    // chunk[(i-1)*2+b][pos] = component id of boundary[pos] in class (i,b), or -1 if not in it
    std::vector<std::vector<std::int8_t>> chunk;
    std::vector<int> chunks;  // number of components per class
};

Prescreen prescreen(const CQuadrangulation& p);

// Whether the glue of two halves with these summaries has connected half-spaces.
bool prescreen_compatible(const Prescreen& a, const Prescreen& b);

std::optional<VennQuadrangulation> compatible(const CQuadrangulation& p, const CQuadrangulation& q);

}  // namespace venn
