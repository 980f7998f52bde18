#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "venn/quadrangulation.hpp"

namespace testutil {

// Random hypercube automorphism, optional mirror, and random starting points of every rotation.
inline venn::VennQuadrangulation scramble(const venn::VennQuadrangulation& q, std::mt19937& rng) {
    using namespace venn;
    const int n = q.dim();
    CubeAutomorphism a = CubeAutomorphism::identity(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int k = 1; k <= n; ++k) a.image[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(perm[static_cast<std::size_t>(k - 1)]);
    a.mask = static_cast<Label>(rng() % q.graph().slots());
    VennQuadrangulation r = q.relabeled(a);
    if (rng() % 2) r = r.mirrored();
    PlaneGraph g(n);
    for (Label x = 0; x < r.graph().slots(); ++x) {
        auto rot = r.graph().rotation(x);
        std::rotate(rot.begin(), rot.begin() + static_cast<long>(rng() % rot.size()), rot.end());
        g.add_vertex(x);
        for (Label y : rot) g.push_neighbor(x, y);
    }
    return validate(std::move(g));
}

inline oracle::Rot rotation_of(const venn::VennQuadrangulation& q) {
    oracle::Rot r(q.graph().slots());
    for (venn::Label x = 0; x < q.graph().slots(); ++x) r[x] = q.graph().rotation(x);
    return r;
}

}  // namespace testutil
