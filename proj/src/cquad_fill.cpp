#include "venn/cquad_fill.hpp"

#include <algorithm>
#include <bit>

#include "venn/error.hpp"

namespace venn {

PlaneGraph CQuadrangulation::graph() const {
    std::vector<Face> all;
    all.reserve(faces.size() + 1);
    Face outer(boundary.rbegin(), boundary.rend());
    all.push_back(outer);
    for (const auto& f : faces) all.emplace_back(f.begin(), f.end());
    PlaneGraph g = PlaneGraph::from_faces(dim, all);
    if (g.face_of_dart(boundary[1], boundary[0]).size() != boundary.size()) {
        g = g.mirrored();
    }
    g.outer_dart = Edge{boundary[1], boundary[0]};
    return g;
}

std::vector<std::uint32_t> CQuadrangulation::adjacency() const {
    std::vector<std::uint32_t> mask(std::size_t{1} << dim, 0);
    auto add = [&](Label x, Label y) {
        const int t = dim - 1 - std::countr_zero(x ^ y);
        mask[x] |= std::uint32_t{1} << t;
        mask[y] |= std::uint32_t{1} << t;
    };
    for (std::size_t i = 0; i < boundary.size(); ++i) add(boundary[i], boundary[(i + 1) % boundary.size()]);
    for (const auto& f : faces) {
        for (int k = 0; k < 4; ++k) add(f[static_cast<std::size_t>(k)], f[static_cast<std::size_t>((k + 1) % 4)]);
    }
    return mask;
}

FillState::FillState(int m, const std::vector<Label>& cycle) : m_(m) {
    if (m < 2 || m > kMaxDim) throw VennError(ErrorKind::DimensionTooSmall, "fill supports 2 <= m <= 6");
    const std::size_t len = cycle.size();
    for (std::size_t i = 0; i < len; ++i) {
        const Label a = cycle[i], b = cycle[(i + 1) % len];
        edge_type(a, b, m);
        if (placed(a)) throw VennError(ErrorKind::InvalidEmbedding, "boundary cycle repeats a vertex");
        placed_ |= std::uint64_t{1} << a;
        next_[a] = b;
        prev_[b] = a;
        adj_[a] |= std::uint64_t{1} << b;
        adj_[b] |= std::uint64_t{1} << a;
    }
    on_hole_ = placed_;
    hole_len_ = len;
}

std::vector<Label> FillState::hole() const {
    std::vector<Label> out;
    if (hole_len_ == 0) return out;
    Label start = static_cast<Label>(std::countr_zero(on_hole_));
    Label x = start;
    do {
        out.push_back(x);
        x = next_[x];
    } while (x != start);
    return out;
}

std::size_t FillState::square_id(Label a, Label b, int j) const {
    const Label base = std::min({a, b, a ^ bit(j), b ^ bit(j)});
    const int k = m_ - std::countr_zero(a ^ b);
    const int lo = std::min(j, k), hi = std::max(j, k);
    return static_cast<std::size_t>(base) * 64 + static_cast<std::size_t>(lo * 8 + hi);
}

bool FillState::wrong_order(Label b, Label u, Label v) const {
    // Walking forward from b, the correct order meets u before v.
    for (Label x = next_[b];; x = next_[x]) {
        if (x == u) return false;
        if (x == v) return true;
    }
}

FaceClass FillState::classify(Label a, Label b, int j) const {
    if (excluded_[square_id(a, b, j)]) return FaceClass::Excluded;
    const Label u = b ^ bit(j), v = a ^ bit(j);
    const bool pu = placed(u), pv = placed(v);
    const bool hu = on_hole(u), hv = on_hole(v);
    if ((pu && !hu) || (pv && !hv)) return FaceClass::Excluded;
    if (!pu && !pv) return FaceClass::Eligible;
    const bool u_adj = hu && next_[b] == u;
    const bool v_adj = hv && prev_[a] == v;
    if (hu && hv) {
        if (u_adj && v_adj) {
            if (hole_len_ == 4) return FaceClass::Eligible;
            return has_edge(u, v) ? FaceClass::Excluded : FaceClass::Eligible;
        }
        if (wrong_order(b, u, v)) return FaceClass::Excluded;
        return FaceClass::Ignored;
    }
    if (hu) return u_adj ? FaceClass::Eligible : FaceClass::Ignored;
    return v_adj ? FaceClass::Eligible : FaceClass::Ignored;
}

FaceClass classify_face(const FillState& state, Label a, Label b, int j) { return state.classify(a, b, j); }

FillState::Undo FillState::include(Label a, Label b, int j) {
    const Label u = b ^ bit(j), v = a ^ bit(j);
    const bool pu = placed(u), pv = placed(v);
    faces_.push_back(Quad{a, b, u, v});
    auto link = [&](Label x, Label y) {
        adj_[x] |= std::uint64_t{1} << y;
        adj_[y] |= std::uint64_t{1} << x;
    };
    Undo rec{a, b, u, v, 0};
    if (!pu && !pv) {
        rec.kind = 0;  // a -> v -> u -> b
        placed_ |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        on_hole_ |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        link(a, v);
        link(v, u);
        link(u, b);
        next_[a] = v;
        prev_[v] = a;
        next_[v] = u;
        prev_[u] = v;
        next_[u] = b;
        prev_[b] = u;
        hole_len_ += 2;
    } else if (pu && !pv) {
        rec.kind = 1;  // a -> v -> u, b leaves the hole
        placed_ |= std::uint64_t{1} << v;
        on_hole_ |= std::uint64_t{1} << v;
        on_hole_ &= ~(std::uint64_t{1} << b);
        link(a, v);
        link(v, u);
        next_[a] = v;
        prev_[v] = a;
        next_[v] = u;
        prev_[u] = v;
    } else if (!pu && pv) {
        rec.kind = 2;  // v -> u -> b, a leaves the hole
        placed_ |= std::uint64_t{1} << u;
        on_hole_ |= std::uint64_t{1} << u;
        on_hole_ &= ~(std::uint64_t{1} << a);
        link(v, u);
        link(u, b);
        next_[v] = u;
        prev_[u] = v;
        next_[u] = b;
        prev_[b] = u;
    } else if (hole_len_ == 4) {
        rec.kind = 4;  // the hole is closed
        on_hole_ = 0;
        hole_len_ = 0;
    } else {
        rec.kind = 3;  // v -> u, a and b leave the hole
        on_hole_ &= ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
        link(v, u);
        next_[v] = u;
        prev_[u] = v;
        hole_len_ -= 2;
    }
    return rec;
}

void FillState::undo(const Undo& r) {
    faces_.pop_back();
    auto unlink = [&](Label x, Label y) {
        adj_[x] &= ~(std::uint64_t{1} << y);
        adj_[y] &= ~(std::uint64_t{1} << x);
    };
    const Label a = r.a, b = r.b, u = r.u, v = r.v;
    switch (r.kind) {
        case 0:
            placed_ &= ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
            on_hole_ &= ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
            unlink(a, v);
            unlink(v, u);
            unlink(u, b);
            next_[a] = b;
            prev_[b] = a;
            hole_len_ -= 2;
            break;
        case 1:
            placed_ &= ~(std::uint64_t{1} << v);
            on_hole_ &= ~(std::uint64_t{1} << v);
            on_hole_ |= std::uint64_t{1} << b;
            unlink(a, v);
            unlink(v, u);
            next_[a] = b;
            prev_[b] = a;
            next_[b] = u;
            prev_[u] = b;
            break;
        case 2:
            placed_ &= ~(std::uint64_t{1} << u);
            on_hole_ &= ~(std::uint64_t{1} << u);
            on_hole_ |= std::uint64_t{1} << a;
            unlink(v, u);
            unlink(u, b);
            next_[v] = a;
            prev_[a] = v;
            next_[a] = b;
            prev_[b] = a;
            break;
        case 3:
            on_hole_ |= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
            unlink(v, u);
            next_[v] = a;
            prev_[a] = v;
            next_[a] = b;
            prev_[b] = a;
            next_[b] = u;
            prev_[u] = b;
            hole_len_ += 2;
            break;
        case 4:
            on_hole_ = (std::uint64_t{1} << a) | (std::uint64_t{1} << b) | (std::uint64_t{1} << u) |
                       (std::uint64_t{1} << v);
            hole_len_ = 4;
            break;
        default:
            break;
    }
}

CQuadrangulation FillState::snapshot(const std::vector<Label>& boundary) const {
    CQuadrangulation c;
    c.dim = m_;
    c.boundary = boundary;
    c.faces = faces_;
    return c;
}

bool detect_dead_end(const FillState& s) {
    if (s.complete()) return false;
    const int m = s.dim();
    for (Label a : s.hole()) {
        const Label b = s.hole_next(a);
        const int k = m - std::countr_zero(a ^ b);
        bool possible = false;
        for (int j = 1; j <= m && !possible; ++j) {
            if (j != k && s.classify(a, b, j) != FaceClass::Excluded) possible = true;
        }
        if (!possible) return true;
    }
    return false;
}

namespace {

class Filler {
public:
    Filler(int m, const std::vector<Label>& cycle, const FillSink& sink)
        : state_(m, cycle), boundary_(cycle), sink_(sink), all_((m == 6) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1 << m)) - 1)) {
        for (Label y = 0; y < (Label{1} << m); ++y) {
            std::uint64_t nb = 0;
            for (int t = 0; t < m; ++t) nb |= std::uint64_t{1} << (y ^ (Label{1} << t));
            cube_nbrs_[y] = nb;
        }
    }

    FillStats run() {
        recurse();
        return stats_;
    }

private:
    bool unreachable_vertex() const {
        const std::uint64_t unplaced = all_ & ~state_.placed_mask();
        const std::uint64_t open_to = unplaced | state_.hole_mask();
        for (std::uint64_t rest = unplaced; rest; rest &= rest - 1) {
            const auto z = static_cast<std::size_t>(std::countr_zero(rest));
            if ((cube_nbrs_[z] & open_to) == 0) return true;
        }
        return false;
    }

    void recurse() {
        ++stats_.nodes;
        if (state_.complete()) {
            if (state_.placed_mask() == all_) {
                ++stats_.emitted;
                sink_(state_.snapshot(boundary_));
            }
            return;
        }
        const int m = state_.dim();
        // Pick the boundary edge with the fewest non-excluded squares that has an eligible one.
        hole_cache_ = state_.hole();
        int best_count = 1 << 20;
        Label best_a = 0, best_b = 0;
        int best_j = 0;
        for (Label a : hole_cache_) {
            const Label b = state_.hole_next(a);
            const int k = m - std::countr_zero(a ^ b);
            int count = 0;
            int first_eligible = 0;
            for (int j = 1; j <= m; ++j) {
                if (j == k) continue;
                const FaceClass c = state_.classify(a, b, j);
                if (c == FaceClass::Excluded) continue;
                ++count;
                if (c == FaceClass::Eligible && first_eligible == 0) first_eligible = j;
            }
            if (count == 0) return;  // dead end
            if (first_eligible != 0 && count < best_count) {
                best_count = count;
                best_a = a;
                best_b = b;
                best_j = first_eligible;
            }
        }
        if (best_j == 0) return;
        if (unreachable_vertex()) return;

        const auto rec = state_.include(best_a, best_b, best_j);
        recurse();
        state_.undo(rec);
        if (best_count > 1) {
            state_.set_excluded(best_a, best_b, best_j, true);
            recurse();
            state_.set_excluded(best_a, best_b, best_j, false);
        }
    }

    FillState state_;
    std::vector<Label> boundary_;
    const FillSink& sink_;
    std::uint64_t all_;
    std::array<std::uint64_t, 64> cube_nbrs_{};
    std::vector<Label> hole_cache_;
    FillStats stats_;
};

}  // namespace

FillStats fill(int m, const std::vector<Label>& cycle, const FillSink& sink) {
    Filler f(m, cycle, sink);
    return f.run();
}

}  // namespace venn
