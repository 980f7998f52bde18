#include "venn/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "venn/error.hpp"

namespace venn {

PlaneGraph::PlaneGraph(int dim)
    : dim_(dim), rotation_(std::size_t{1} << dim), present_(std::size_t{1} << dim, false) {}

void PlaneGraph::add_vertex(Label x) { present_[x] = true; }

void PlaneGraph::push_neighbor(Label x, Label y) {
    present_[x] = true;
    rotation_[x].push_back(y);
}

std::size_t PlaneGraph::vertex_count() const {
    return static_cast<std::size_t>(std::count(present_.begin(), present_.end(), true));
}

std::size_t PlaneGraph::edge_count() const {
    std::size_t darts = 0;
    for (const auto& r : rotation_) darts += r.size();
    return darts / 2;
}

bool PlaneGraph::has_edge(Label x, Label y) const {
    const auto& r = rotation_[x];
    return std::find(r.begin(), r.end(), y) != r.end();
}

std::vector<Label> PlaneGraph::vertices() const {
    std::vector<Label> out;
    for (Label x = 0; x < rotation_.size(); ++x) {
        if (present_[x]) out.push_back(x);
    }
    return out;
}

std::vector<Edge> PlaneGraph::edges() const {
    std::vector<Edge> out;
    for (Label x = 0; x < rotation_.size(); ++x) {
        for (Label y : rotation_[x]) {
            if (x < y) out.emplace_back(x, y);
        }
    }
    return out;
}

Label PlaneGraph::cw_next(Label x, Label from) const {
    const auto& r = rotation_[x];
    auto it = std::find(r.begin(), r.end(), from);
    if (it == r.end()) {
        throw VennError(ErrorKind::InvalidEmbedding, "rotation of " + label_to_string(x, dim_) + " lacks a neighbour");
    }
    ++it;
    return it == r.end() ? r.front() : *it;
}

Face PlaneGraph::face_of_dart(Label u, Label w) const {
    Face f;
    const Label u0 = u, w0 = w;
    do {
        f.push_back(u);
        const Label x = cw_next(w, u);
        u = w;
        w = x;
        if (f.size() > 4 * rotation_.size() + 4) {
            throw VennError(ErrorKind::InvalidEmbedding, "face tracing does not close");
        }
    } while (u != u0 || w != w0);
    return f;
}

std::vector<Face> PlaneGraph::faces() const {
    std::map<Edge, bool> seen;
    std::vector<Face> out;
    for (Label x = 0; x < rotation_.size(); ++x) {
        for (Label y : rotation_[x]) {
            if (seen[{x, y}]) continue;
            Face f = face_of_dart(x, y);
            for (std::size_t i = 0; i < f.size(); ++i) seen[{f[i], f[(i + 1) % f.size()]}] = true;
            out.push_back(std::move(f));
        }
    }
    return out;
}

PlaneGraph PlaneGraph::mirrored() const {
    PlaneGraph g = *this;
    for (auto& r : g.rotation_) std::reverse(r.begin(), r.end());
    if (outer_dart) g.outer_dart = Edge{outer_dart->second, outer_dart->first};
    return g;
}

PlaneGraph PlaneGraph::relabeled(const CubeAutomorphism& a) const {
    PlaneGraph g(dim_);
    for (Label x = 0; x < rotation_.size(); ++x) {
        if (!present_[x]) continue;
        const Label y = a.apply(x);
        g.present_[y] = true;
        auto& r = g.rotation_[y];
        for (Label z : rotation_[x]) r.push_back(a.apply(z));
    }
    if (outer_dart) g.outer_dart = Edge{a.apply(outer_dart->first), a.apply(outer_dart->second)};
    return g;
}

PlaneGraph PlaneGraph::from_faces(int dim, std::span<const Face> faces) {
    PlaneGraph g(dim);
    if (faces.empty()) return g;
    // Coherent orientation: adjacent faces must traverse a shared edge in opposite directions.
    std::map<Edge, std::vector<std::pair<std::size_t, bool>>> by_edge;  // edge -> (face, forward)
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& face = faces[f];
        for (std::size_t i = 0; i < face.size(); ++i) {
            const Label a = face[i], b = face[(i + 1) % face.size()];
            by_edge[{std::min(a, b), std::max(a, b)}].emplace_back(f, a < b);
        }
    }
    std::vector<int> orient(faces.size(), 0);  // +1 keep, -1 reverse
    std::deque<std::size_t> queue;
    for (std::size_t start = 0; start < faces.size(); ++start) {
        if (orient[start] != 0) continue;
        orient[start] = 1;
        queue.push_back(start);
        while (!queue.empty()) {
            const std::size_t f = queue.front();
            queue.pop_front();
            const auto& face = faces[f];
            for (std::size_t i = 0; i < face.size(); ++i) {
                const Label a = face[i], b = face[(i + 1) % face.size()];
                const auto& users = by_edge[{std::min(a, b), std::max(a, b)}];
                if (users.size() != 2) {
                    throw VennError(ErrorKind::InvalidEmbedding, "edge " + label_to_string(a, dim) + "-" +
                                                                     label_to_string(b, dim) + " lies on " +
                                                                     std::to_string(users.size()) + " face sides");
                }
                const bool fwd = ((a < b) == true) == (orient[f] > 0);
                for (const auto& [h, hfwd] : users) {
                    if (h == f) continue;
                    const int want = (hfwd == fwd) ? -1 : 1;
                    if (orient[h] == 0) {
                        orient[h] = want;
                        queue.push_back(h);
                    } else if (orient[h] != want) {
                        throw VennError(ErrorKind::InvalidEmbedding, "faces cannot be oriented coherently");
                    }
                }
            }
        }
    }
    // cw successor maps per vertex: for oriented face (..., u, w, x, ...) set succ[w][u] = x.
    std::vector<std::map<Label, Label>> succ(std::size_t{1} << dim);
    for (std::size_t f = 0; f < faces.size(); ++f) {
        Face face = faces[f];
        if (orient[f] < 0) std::reverse(face.begin(), face.end());
        const std::size_t len = face.size();
        for (std::size_t i = 0; i < len; ++i) {
            const Label u = face[i], w = face[(i + 1) % len], x = face[(i + 2) % len];
            if (!succ[w].emplace(u, x).second) {
                throw VennError(ErrorKind::InvalidEmbedding, "corner at " + label_to_string(w, dim) + " used twice");
            }
        }
    }
    for (Label w = 0; w < succ.size(); ++w) {
        const auto& s = succ[w];
        if (s.empty()) continue;
        g.present_[w] = true;
        auto& rot = g.rotation_[w];
        Label cur = s.begin()->first;
        do {
            rot.push_back(cur);
            auto it = s.find(cur);
            if (it == s.end()) throw VennError(ErrorKind::InvalidEmbedding, "open vertex link");
            cur = it->second;
        } while (cur != s.begin()->first && rot.size() <= s.size());
        if (rot.size() != s.size()) {
            throw VennError(ErrorKind::InvalidEmbedding, "vertex link of " + label_to_string(w, dim) + " is not a single cycle");
        }
    }
    return g;
}

std::vector<std::uint32_t> type_masks(const PlaneGraph& g) {
    std::vector<std::uint32_t> m(g.slots(), 0);
    const int n = g.dim();
    for (Label x = 0; x < g.slots(); ++x) {
        for (Label y : g.rotation(x)) m[x] |= std::uint32_t{1} << (edge_type(x, y, n) - 1);
    }
    return m;
}

}  // namespace venn
