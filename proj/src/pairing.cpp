#include "venn/pairing.hpp"

#include <numeric>

#include "venn/error.hpp"

namespace venn {

namespace {

void check_same_boundary(const CQuadrangulation& p, const CQuadrangulation& q) {
    if (p.dim != q.dim || p.boundary != q.boundary) {
        throw VennError(ErrorKind::BoundaryMismatch, "the two halves have different boundary cycles");
    }
}

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
    std::vector<std::size_t> parent;
};

}  // namespace

PlaneGraph glue(const CQuadrangulation& p, const CQuadrangulation& q) {
    check_same_boundary(p, q);
    const int n = p.dim + 1;
    std::vector<Face> faces;
    faces.reserve(p.faces.size() + q.faces.size() + p.boundary.size());
    for (const auto& f : p.faces) {
        Face g;
        for (Label x : f) g.push_back(x * 2 + 1);
        faces.push_back(std::move(g));
    }
    for (const auto& f : q.faces) {
        Face g;
        for (auto it = f.rbegin(); it != f.rend(); ++it) g.push_back(*it * 2);
        faces.push_back(std::move(g));
    }
    const std::size_t len = p.boundary.size();
    for (std::size_t i = 0; i < len; ++i) {
        const Label a = p.boundary[i], b = p.boundary[(i + 1) % len];
        faces.push_back(Face{b * 2 + 1, a * 2 + 1, a * 2, b * 2});
    }
    return PlaneGraph::from_faces(n, faces);
}

Prescreen prescreen(const CQuadrangulation& p) {
    const int m = p.dim;
    const std::size_t size = std::size_t{1} << m;
    const auto adj = p.adjacency();
    Prescreen out;
    out.dim = m;
    out.chunk.assign(static_cast<std::size_t>(2 * m), std::vector<std::int8_t>(p.boundary.size(), -1));
    out.chunks.assign(static_cast<std::size_t>(2 * m), 0);
    std::vector<int> comp(size);
    std::vector<Label> stack;
    for (int i = 1; i <= m; ++i) {
        for (int b = 0; b <= 1; ++b) {
            const std::size_t cls = static_cast<std::size_t>((i - 1) * 2 + b);
            std::fill(comp.begin(), comp.end(), -1);
            int count = 0;
            for (Label s = 0; s < size; ++s) {
                if (bit_at(s, m, i) != b || comp[s] >= 0) continue;
                comp[s] = count;
                stack.assign(1, s);
                while (!stack.empty()) {
                    const Label x = stack.back();
                    stack.pop_back();
                    for (int k = 1; k <= m; ++k) {
                        if (k == i || !((adj[x] >> (k - 1)) & 1U)) continue;
                        const Label y = flip(x, m, k);
                        if (comp[y] < 0) {
                            comp[y] = count;
                            stack.push_back(y);
                        }
                    }
                }
                ++count;
            }
            std::vector<bool> seen(static_cast<std::size_t>(count), false);
            for (std::size_t pos = 0; pos < p.boundary.size(); ++pos) {
                const Label x = p.boundary[pos];
                if (bit_at(x, m, i) != b) continue;
                out.chunk[cls][pos] = static_cast<std::int8_t>(comp[x]);
                seen[static_cast<std::size_t>(comp[x])] = true;
            }
            for (bool s : seen) {
                if (!s) out.discard = true;
            }
            out.chunks[cls] = count;
        }
    }
    return out;
}

bool prescreen_compatible(const Prescreen& a, const Prescreen& b) {
    if (a.discard || b.discard) return false;
    for (std::size_t cls = 0; cls < a.chunk.size(); ++cls) {
        const std::size_t ka = static_cast<std::size_t>(a.chunks[cls]);
        const std::size_t kb = static_cast<std::size_t>(b.chunks[cls]);
        UnionFind uf(ka + kb);
        std::size_t groups = ka + kb;
        const auto& ca = a.chunk[cls];
        const auto& cb = b.chunk[cls];
        for (std::size_t pos = 0; pos < ca.size(); ++pos) {
            if (ca[pos] < 0) continue;
            if (uf.unite(static_cast<std::size_t>(ca[pos]), ka + static_cast<std::size_t>(cb[pos]))) --groups;
        }
        if (groups != 1) return false;
    }
    return true;
}

std::optional<VennQuadrangulation> compatible(const CQuadrangulation& p, const CQuadrangulation& q) {
    PlaneGraph h = glue(p, q);
    if (halfspace_violation(h)) return std::nullopt;
    return validate(std::move(h));
}

}  // namespace venn
