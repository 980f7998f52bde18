#include "venn/ladder.hpp"

#include <algorithm>
#include <set>

#include "venn/analysis.hpp"
#include "venn/error.hpp"

namespace venn {

std::vector<Label> Ladder::vertices() const {
    std::vector<Label> v = x;
    v.insert(v.end(), y.begin(), y.end());
    std::sort(v.begin(), v.end());
    return v;
}

namespace {

// True iff the 4-cycle a-b-c-d is the boundary of a face.
bool bounds_face(const PlaneGraph& g, Label a, Label b, Label c, Label d) {
    if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(c, d) || !g.has_edge(d, a)) return false;
    for (auto [u, w] : {Edge{a, b}, Edge{b, a}}) {
        const auto f = g.face_of_dart(u, w);
        if (f.size() != 4) continue;
        std::set<Label> s(f.begin(), f.end());
        if (s == std::set<Label>{a, b, c, d}) return true;
    }
    return false;
}

}  // namespace

std::string ladder_problem(const VennQuadrangulation& q, const Ladder& l) {
    const auto& g = q.graph();
    const int n = q.dim();
    if (static_cast<int>(l.x.size()) != n || static_cast<int>(l.y.size()) != n) return "rails must have n vertices";
    if (l.rung_type < 1 || l.rung_type > n) return "bad rung type";
    if (l.x.front() != 0 || l.y.back() != all_ones(n)) return "rails must run from 0^n to 1^n";
    const auto v = l.vertices();
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) return "ladder vertices are not distinct";
    for (int i = 0; i < n; ++i) {
        const Label xi = l.x[static_cast<std::size_t>(i)], yi = l.y[static_cast<std::size_t>(i)];
        if (xi >= g.slots() || yi >= g.slots() || !g.has_edge(xi, yi) || (xi ^ yi) != position_mask(n, l.rung_type)) {
            return "rung is not an edge of the rung type";
        }
        if (i + 1 < n) {
            const Label xn = l.x[static_cast<std::size_t>(i + 1)], yn = l.y[static_cast<std::size_t>(i + 1)];
            if (!g.has_edge(xi, xn) || !g.has_edge(yi, yn)) return "rail pair is not an edge";
            if (!bounds_face(g, xi, xn, yn, yi)) return "ladder square is not a face";
        }
    }
    return "";
}

void find_ladders(const VennQuadrangulation& q, const std::function<bool(const Ladder&)>& sink) {
    const auto& g = q.graph();
    const int n = q.dim();
    bool stop = false;
    for (int k = 1; k <= n && !stop; ++k) {
        Ladder l;
        l.rung_type = k;
        l.x.assign(1, 0);
        l.y.assign(1, position_mask(n, k));
        if (!g.has_edge(0, l.y[0])) continue;
        auto dfs = [&](auto&& self, Label used) -> void {
            if (stop) return;
            if (static_cast<int>(l.x.size()) == n) {
                if (!sink(l)) stop = true;
                return;
            }
            const Label xi = l.x.back(), yi = l.y.back();
            std::vector<Label> next(g.rotation(xi));
            std::sort(next.begin(), next.end());
            for (Label xn : next) {
                const Label diff = xn ^ xi;
                if (diff == position_mask(n, k) || (diff & used) || (xn & diff) == 0) continue;
                const Label yn = yi ^ diff;
                if (!g.has_edge(xn, yn) || !g.has_edge(yi, yn) || !bounds_face(g, xi, xn, yn, yi)) continue;
                l.x.push_back(xn);
                l.y.push_back(yn);
                self(self, used | diff);
                l.x.pop_back();
                l.y.pop_back();
                if (stop) return;
            }
        };
        dfs(dfs, position_mask(n, k));
    }
}

std::vector<Ladder> find_ladders(const VennQuadrangulation& q) {
    std::vector<Ladder> out;
    find_ladders(q, [&](const Ladder& l) {
        out.push_back(l);
        return true;
    });
    return out;
}

std::optional<Ladder> find_disjoint_ladder(const VennQuadrangulation& q, const std::vector<Label>& avoid) {
    std::set<Label> bad(avoid.begin(), avoid.end());
    std::optional<Ladder> out;
    find_ladders(q, [&](const Ladder& l) {
        for (Label v : l.vertices()) {
            if (bad.count(v)) return true;
        }
        out = l;
        return false;
    });
    return out;
}

std::optional<RelabeledLadder> find_relabeled_ladder(const VennQuadrangulation& q, const std::vector<Label>& h) {
    for (Label m = 0; m < q.graph().slots(); ++m) {
        CubeAutomorphism a = CubeAutomorphism::identity(q.dim());
        a.mask = m;
        RelabeledLadder r{m, q.relabeled(a), {}, {}};
        for (Label x : h) r.h.push_back(x ^ m);
        std::sort(r.h.begin(), r.h.end());
        if (auto l = find_disjoint_ladder(r.q, r.h)) {
            r.ladder = *l;
            return r;
        }
    }
    return std::nullopt;
}

LadderExtension extend(const VennQuadrangulation& q, const Ladder& l, const std::vector<Label>& h) {
    if (auto why = ladder_problem(q, l); !why.empty()) throw VennError(ErrorKind::NotALadder, why);
    const auto lv = l.vertices();
    for (Label v : h) {
        if (std::binary_search(lv.begin(), lv.end(), v)) throw VennError(ErrorKind::NotDisjoint, "H meets the ladder");
    }
    const int n = q.dim();
    const auto& g = q.graph();
    const std::size_t len = l.x.size();
    // faces of P minus the ladder squares
    std::set<std::set<Label>> ladder_faces;
    for (std::size_t i = 0; i + 1 < len; ++i) ladder_faces.insert({l.x[i], l.x[i + 1], l.y[i + 1], l.y[i]});
    std::vector<Face> faces;
    for (const auto& f : g.faces()) {
        if (ladder_faces.erase(std::set<Label>(f.begin(), f.end()))) continue;
        for (Label bit : {Label{0}, Label{1}}) {
            Face c;
            for (Label x : f) c.push_back(x * 2 + bit);
            faces.push_back(std::move(c));
        }
    }
    // the outer cycle of the ladder: x_1..x_n, y_n..y_1
    std::vector<Label> cyc(l.x.begin(), l.x.end());
    cyc.insert(cyc.end(), l.y.rbegin(), l.y.rend());
    for (std::size_t j = 0; j < cyc.size(); ++j) {
        const Label a = cyc[j], b = cyc[(j + 1) % cyc.size()];
        faces.push_back(Face{a * 2, b * 2, b * 2 + 1, a * 2 + 1});
    }
    PlaneGraph pg = PlaneGraph::from_faces(n + 1, faces);
    LadderExtension out{validate(std::move(pg)), Ladder{}, {}};
    for (std::size_t i = 0; i < len; ++i) out.ladder.x.push_back(l.x[i] * 2);
    out.ladder.x.push_back(l.y.back() * 2);
    for (std::size_t i = 0; i < len; ++i) out.ladder.y.push_back(l.x[i] * 2 + 1);
    out.ladder.y.push_back(l.y.back() * 2 + 1);
    out.ladder.rung_type = n + 1;
    for (Label v : h) out.h.push_back(v * 2);
    return out;
}

HallViolator certify_counterexample(const VennQuadrangulation& q, const std::vector<Label>& h) {
    const Graph g = to_graph(q.graph());
    std::vector<char> in_h(g.size(), 0);
    for (Label v : h) in_h[v] = 1;
    std::vector<std::uint32_t> inner;
    for (Label v : h) {
        if (std::all_of(g[v].begin(), g[v].end(), [&](std::uint32_t w) { return in_h[w] != 0; })) inner.push_back(v);
    }
    bool found = false;
    HallViolator best;
    for (int parity = 0; parity <= 1; ++parity) {
        std::vector<std::uint32_t> cand;
        for (auto v : inner) {
            if (weight(v) % 2 == parity) cand.push_back(v);
        }
        if (auto v = hall_violator_within(g, cand)) {
            if (!found || v->S.size() < best.S.size()) {
                best = std::move(*v);
                found = true;
            }
        }
    }
    if (!found || !verify_violator(g, best)) throw VennError(ErrorKind::NoViolatorFound, "no Hall violator inside H");
    return best;
}

}  // namespace venn
