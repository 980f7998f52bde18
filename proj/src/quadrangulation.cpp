#include "venn/quadrangulation.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "venn/error.hpp"

namespace venn {

namespace {

bool connected_subset(const PlaneGraph& g, const std::vector<bool>& keep) {
    Label start = 0;
    std::size_t total = 0;
    bool found = false;
    for (Label x = 0; x < g.slots(); ++x) {
        if (!keep[x]) continue;
        ++total;
        if (!found) {
            start = x;
            found = true;
        }
    }
    if (total == 0) return true;
    std::vector<bool> seen(g.slots(), false);
    std::vector<Label> stack{start};
    seen[start] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Label x = stack.back();
        stack.pop_back();
        for (Label y : g.rotation(x)) {
            if (keep[y] && !seen[y]) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == total;
}

}  // namespace

std::optional<std::pair<int, int>> halfspace_violation(const PlaneGraph& g) {
    const int n = g.dim();
    std::vector<bool> keep(g.slots());
    for (int i = 1; i <= n; ++i) {
        for (int b = 0; b <= 1; ++b) {
            for (Label x = 0; x < g.slots(); ++x) keep[x] = g.present(x) && bit_at(x, n, i) == b;
            if (!connected_subset(g, keep)) return std::make_pair(i, b);
        }
    }
    return std::nullopt;
}

VennQuadrangulation validate(PlaneGraph g, std::optional<Label> marked) {
    const int n = g.dim();
    if (n < 2 || n > kMaxDim || g.slots() != (std::size_t{1} << n)) {
        throw VennError(ErrorKind::BadLabelLength, "dimension " + std::to_string(n));
    }
    for (Label x = 0; x < g.slots(); ++x) {
        const auto& r = g.rotation(x);
        std::set<Label> distinct;
        for (Label y : r) {
            if (y >= g.slots()) throw VennError(ErrorKind::BadLabelLength, "neighbour label out of range");
            edge_type(x, y, n);
            if (!distinct.insert(y).second) {
                throw VennError(ErrorKind::MultiEdge, "parallel edges at " + label_to_string(x, n));
            }
            if (!g.has_edge(y, x)) {
                throw VennError(ErrorKind::InvalidEmbedding, "asymmetric adjacency at " + label_to_string(x, n));
            }
        }
    }
    const std::size_t v = g.vertex_count();
    if (v != g.slots()) {
        throw VennError(ErrorKind::NotSpanning, std::to_string(v) + " of " + std::to_string(g.slots()) + " vertices");
    }
    std::vector<bool> all(g.slots(), true);
    for (Label x = 0; x < g.slots(); ++x) {
        if (g.rotation(x).empty()) throw VennError(ErrorKind::NotConnected, "isolated vertex " + label_to_string(x, n));
    }
    if (!connected_subset(g, all)) throw VennError(ErrorKind::NotConnected, "graph is disconnected");
    const auto faces = g.faces();
    for (const auto& f : faces) {
        if (f.size() != 4) {
            std::string s;
            for (Label x : f) s += label_to_string(x, n) + " ";
            throw VennError(ErrorKind::NonQuadFace, "face of length " + std::to_string(f.size()) + ": " + s);
        }
    }
    const std::size_t e = g.edge_count();
    if (v + faces.size() != e + 2) throw VennError(ErrorKind::InvalidEmbedding, "Euler characteristic is not 2");
    if (auto bad = halfspace_violation(g)) {
        throw VennError(ErrorKind::HalfspaceDisconnected,
                        "i=" + std::to_string(bad->first) + " b=" + std::to_string(bad->second));
    }
    // With all faces quadrilateral these are implied by Euler's formula; kept as a guard.
    if (e != (std::size_t{1} << (n + 1)) - 4 || faces.size() != (std::size_t{1} << n) - 2) {
        throw VennError(ErrorKind::InvalidEmbedding, "unexpected edge or face count");
    }
    if (marked && *marked >= g.slots()) throw VennError(ErrorKind::BadLabelLength, "marked label out of range");
    VennQuadrangulation q;
    q.graph_ = std::move(g);
    q.marked = marked;
    return q;
}

VennQuadrangulation assume_valid(PlaneGraph g) {
    VennQuadrangulation q;
    q.graph_ = std::move(g);
    return q;
}

VennQuadrangulation VennQuadrangulation::marked_at(Label outer) const {
    CubeAutomorphism a = CubeAutomorphism::identity(dim());
    a.mask = outer;
    VennQuadrangulation q = relabeled(a);
    q.marked = 0;
    return q;
}

VennQuadrangulation VennQuadrangulation::relabeled(const CubeAutomorphism& a) const {
    VennQuadrangulation q;
    q.graph_ = graph_.relabeled(a);
    if (marked) q.marked = a.apply(*marked);
    return q;
}

VennQuadrangulation VennQuadrangulation::mirrored() const {
    VennQuadrangulation q;
    q.graph_ = graph_.mirrored();
    q.marked = marked;
    return q;
}

bool is_monotone(const VennQuadrangulation& q, Label marking) {
    const auto& g = q.graph();
    const int n = g.dim();
    for (Label x = 0; x < g.slots(); ++x) {
        const int w = weight(x ^ marking);
        if (w == 0 || w == n) continue;
        bool down = false, up = false;
        for (Label y : g.rotation(x)) {
            const int wy = weight(y ^ marking);
            down |= (wy == w - 1);
            up |= (wy == w + 1);
        }
        if (!down || !up) return false;
    }
    return true;
}

bool is_exposed(const VennQuadrangulation& q, Label marking) { return q.graph().degree(marking) == q.dim(); }

std::vector<std::size_t> matching_sizes(const VennQuadrangulation& q) {
    const auto& g = q.graph();
    const int n = g.dim();
    std::vector<std::size_t> sizes(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [x, y] : g.edges()) ++sizes[static_cast<std::size_t>(edge_type(x, y, n))];
    return sizes;
}

std::optional<EdgeType> is_reducible(const VennQuadrangulation& q) {
    const auto sizes = matching_sizes(q);
    const std::size_t half = std::size_t{1} << (q.dim() - 1);
    for (int i = 1; i <= q.dim(); ++i) {
        if (sizes[static_cast<std::size_t>(i)] == half) return i;
    }
    return std::nullopt;
}

std::vector<Edge> type_matching(const VennQuadrangulation& q, EdgeType i) {
    const auto& g = q.graph();
    std::vector<Edge> out;
    std::vector<bool> used(g.slots(), false);
    for (const auto& [x, y] : g.edges()) {
        if (edge_type(x, y, g.dim()) != i) continue;
        if (used[x] || used[y]) throw VennError(ErrorKind::InvalidEmbedding, "type edges do not form a matching");
        used[x] = used[y] = true;
        out.emplace_back(x, y);
    }
    return out;
}

PlaneGraph contract_type(const VennQuadrangulation& q, EdgeType i) {
    const auto& g = q.graph();
    const int n = g.dim();
    auto drop = [&](Label x) {
        // remove position i from x
        const int low_bits = n - i;
        const Label low = x & ((Label{1} << low_bits) - 1);
        const Label high = x >> (low_bits + 1);
        return (high << low_bits) | low;
    };
    PlaneGraph out(n - 1);
    for (Label x = 0; x < g.slots(); ++x) {
        if (bit_at(x, n, i) != 0) continue;
        const Label mate = flip(x, n, i);
        if (!g.has_edge(x, mate)) throw VennError(ErrorKind::InvalidEmbedding, "type matching is not perfect");
        // Rotation of the merged vertex: x's neighbours after mate, then mate's neighbours after x.
        std::vector<Label> merged;
        for (Label y = g.cw_next(x, mate); y != mate; y = g.cw_next(x, y)) merged.push_back(drop(y & ~position_mask(n, i)));
        for (Label y = g.cw_next(mate, x); y != x; y = g.cw_next(mate, y)) merged.push_back(drop(y & ~position_mask(n, i)));
        // Collapsed digons leave cyclically adjacent duplicates.
        std::vector<Label> dedup;
        for (std::size_t k = 0; k < merged.size(); ++k) {
            if (merged[k] != merged[(k + 1) % merged.size()]) dedup.push_back(merged[k]);
        }
        if (dedup.empty() && !merged.empty()) dedup.push_back(merged.front());
        const Label cx = drop(x);
        out.add_vertex(cx);
        for (Label y : dedup) out.push_neighbor(cx, y);
    }
    return out;
}

bool every_four_cycle_is_face(const PlaneGraph& g) {
    std::set<std::vector<Label>> face_sets;
    for (auto f : g.faces()) {
        std::sort(f.begin(), f.end());
        face_sets.insert(f);
    }
    for (Label a = 0; a < g.slots(); ++a) {
        for (Label b : g.rotation(a)) {
            for (Label c : g.rotation(b)) {
                if (c == a) continue;
                for (Label d : g.rotation(c)) {
                    if (d == b || d == a || !g.has_edge(d, a)) continue;
                    std::vector<Label> cyc{a, b, c, d};
                    std::sort(cyc.begin(), cyc.end());
                    if (!face_sets.count(cyc)) return false;
                }
            }
        }
    }
    return true;
}

bool faces_have_opposite_types(const PlaneGraph& g) {
    const int n = g.dim();
    for (const auto& f : g.faces()) {
        if (f.size() != 4) return false;
        const int t0 = edge_type(f[0], f[1], n), t1 = edge_type(f[1], f[2], n);
        const int t2 = edge_type(f[2], f[3], n), t3 = edge_type(f[3], f[0], n);
        if (t0 != t2 || t1 != t3 || t0 == t1) return false;
    }
    return true;
}

VennQuadrangulation two_venn() {
    const std::vector<Face> faces{{0b00, 0b01, 0b11, 0b10}, {0b00, 0b01, 0b11, 0b10}};
    return validate(PlaneGraph::from_faces(2, faces));
}

VennQuadrangulation cube_venn() {
    const std::vector<Face> faces{{0, 1, 3, 2}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 3, 7, 5}};
    return validate(PlaneGraph::from_faces(3, faces));
}

}  // namespace venn
