#include "venn/primal.hpp"

#include <algorithm>
#include <set>

#include "venn/error.hpp"

namespace venn {

std::vector<int> WireDiagram::final_order() const {
    std::vector<int> perm(static_cast<std::size_t>(n) + 1);
    for (int h = 0; h <= n; ++h) perm[static_cast<std::size_t>(h)] = h;
    for (const auto& e : events) {
        auto first = perm.begin() + e.lo, last = perm.begin() + e.hi + 1;
        if (e.upward) {
            std::rotate(first, first + 1, last);
        } else {
            std::rotate(first, last - 1, last);
        }
    }
    return perm;
}

WireDiagram WireDiagram::mirrored() const {
    WireDiagram out{n, {}};
    for (auto it = events.rbegin(); it != events.rend(); ++it) out.events.push_back({it->lo, it->hi, !it->upward});
    return out;
}

std::vector<int> EmbeddedMultigraph::curve_word(int v) const {
    std::vector<int> out;
    for (int h : rotation(v)) out.push_back(half(h).curve);
    return out;
}

EmbeddedMultigraph EmbeddedMultigraph::from_wires(const WireDiagram& d) {
    const int n = d.n;
    EmbeddedMultigraph g;
    g.curves_ = n;
    std::vector<int> perm(static_cast<std::size_t>(n) + 1), pending(static_cast<std::size_t>(n) + 1, -1),
        wrap(static_cast<std::size_t>(n) + 1, -1);
    for (int h = 0; h <= n; ++h) perm[static_cast<std::size_t>(h)] = h;
    std::vector<int> edge_height;
    auto join = [&](int a, int b, int height) {
        const int e = static_cast<int>(edge_height.size());
        edge_height.push_back(height);
        g.half_[static_cast<std::size_t>(a)].edge = e;
        g.half_[static_cast<std::size_t>(a)].twin = b;
        g.half_[static_cast<std::size_t>(b)].edge = e;
        g.half_[static_cast<std::size_t>(b)].twin = a;
    };
    for (const auto& ev : d.events) {
        if (ev.lo < 1 || ev.hi > n || ev.lo >= ev.hi) throw VennError(ErrorKind::InconsistentSignature, "bad wire event");
        auto after = perm;
        auto first = after.begin() + ev.lo, last = after.begin() + ev.hi + 1;
        if (ev.upward) {
            std::rotate(first, first + 1, last);
        } else {
            std::rotate(first, last - 1, last);
        }
        const int v = static_cast<int>(g.rotation_.size());
        g.rotation_.emplace_back();
        auto& rot = g.rotation_.back();
        // clockwise from the top: right ends downwards, then left ends upwards
        std::vector<int> right(static_cast<std::size_t>(n) + 1, -1);
        for (int h = ev.hi; h >= ev.lo; --h) {
            const int id = static_cast<int>(g.half_.size());
            g.half_.push_back({v, after[static_cast<std::size_t>(h)], -1, -1});
            rot.push_back(id);
            right[static_cast<std::size_t>(h)] = id;
        }
        for (int h = ev.lo; h <= ev.hi; ++h) {
            const int id = static_cast<int>(g.half_.size());
            g.half_.push_back({v, perm[static_cast<std::size_t>(h)], -1, -1});
            rot.push_back(id);
            if (pending[static_cast<std::size_t>(h)] >= 0) {
                join(pending[static_cast<std::size_t>(h)], id, h);
            } else {
                wrap[static_cast<std::size_t>(h)] = id;
            }
        }
        for (int h = ev.lo; h <= ev.hi; ++h) pending[static_cast<std::size_t>(h)] = right[static_cast<std::size_t>(h)];
        perm = after;
    }
    for (int h = 1; h <= n; ++h) {
        if (perm[static_cast<std::size_t>(h)] != h) throw VennError(ErrorKind::InconsistentSignature, "wires do not return to their start");
        if (pending[static_cast<std::size_t>(h)] < 0) throw VennError(ErrorKind::InconsistentSignature, "a wire meets no crossing");
        join(pending[static_cast<std::size_t>(h)], wrap[static_cast<std::size_t>(h)], h);
    }
    // the outer face runs along the top wire only
    const auto fs = g.faces();
    g.outer_face_ = -1;
    for (std::size_t f = 0; f < fs.size(); ++f) {
        const bool top = std::all_of(fs[f].begin(), fs[f].end(), [&](int h) {
            return edge_height[static_cast<std::size_t>(g.half(h).edge)] == n;
        });
        if (top) {
            if (g.outer_face_ >= 0) throw VennError(ErrorKind::InconsistentSignature, "two candidate outer faces");
            g.outer_face_ = static_cast<int>(f);
        }
    }
    if (g.outer_face_ < 0) throw VennError(ErrorKind::InconsistentSignature, "no outer face found");
    g.check();
    return g;
}

std::vector<std::vector<int>> EmbeddedMultigraph::faces() const {
    std::vector<char> used(half_.size(), 0);
    std::vector<std::vector<int>> out;
    for (std::size_t s = 0; s < half_.size(); ++s) {
        if (used[s]) continue;
        std::vector<int> face;
        int h = static_cast<int>(s);
        while (!used[static_cast<std::size_t>(h)]) {
            used[static_cast<std::size_t>(h)] = 1;
            face.push_back(h);
            const int t = half(h).twin;
            const auto& rot = rotation(half(t).vertex);
            const auto pos = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), t) - rot.begin());
            h = rot[(pos + 1) % rot.size()];
        }
        if (h != static_cast<int>(s)) throw VennError(ErrorKind::InconsistentSignature, "face tracing does not close");
        out.push_back(std::move(face));
    }
    return out;
}

void EmbeddedMultigraph::check() const {
    for (const auto& h : half_) {
        if (h.twin < 0 || half(h.twin).twin < 0 || half(h.twin).curve != h.curve) {
            throw VennError(ErrorKind::InconsistentSignature, "edge joins different curves");
        }
    }
    for (int c = 1; c <= curves_; ++c) {
        std::size_t total = 0;
        int start = -1;
        for (std::size_t v = 0; v < rotation_.size(); ++v) {
            int ends = 0;
            for (int h : rotation_[v]) {
                if (half(h).curve == c) {
                    ++ends;
                    start = h;
                }
            }
            if (ends != 0 && ends != 2) throw VennError(ErrorKind::InconsistentSignature, "curve passes a crossing oddly");
            total += static_cast<std::size_t>(ends);
        }
        if (start < 0) throw VennError(ErrorKind::InconsistentSignature, "curve without crossings");
        // walk the curve
        std::size_t steps = 0;
        int h = start;
        do {
            const int t = half(h).twin;
            const auto& rot = rotation(half(t).vertex);
            int other = -1;
            for (int k : rot) {
                if (k != t && half(k).curve == c) other = k;
            }
            h = other;
            ++steps;
        } while (h != start && steps <= total);
        if (2 * steps != total) throw VennError(ErrorKind::InconsistentSignature, "curve is not a single closed walk");
    }
    const long long euler = static_cast<long long>(vertex_count()) - static_cast<long long>(edge_count()) +
                            static_cast<long long>(faces().size());
    if (euler != 2) throw VennError(ErrorKind::InconsistentSignature, "Euler characteristic is not 2");
}

Graph EmbeddedMultigraph::simple_graph() const {
    Graph out(vertex_count());
    std::set<std::pair<int, int>> seen;
    for (const auto& h : half_) {
        const int a = h.vertex, b = half(h.twin).vertex;
        if (a == b || seen.count({a, b})) continue;
        seen.insert({a, b});
        out[static_cast<std::size_t>(a)].push_back(static_cast<std::uint32_t>(b));
    }
    return out;
}

int EmbeddedMultigraph::multiplicity(int u, int v) const {
    int k = 0;
    for (int h : rotation(u)) {
        if (half(half(h).twin).vertex == v) ++k;
    }
    return u == v ? k / 2 : k;
}

std::vector<Label> region_signatures(const EmbeddedMultigraph& g) {
    const int n = g.curves();
    const auto fs = g.faces();
    std::vector<int> face_of(2 * g.edge_count(), -1);
    for (std::size_t f = 0; f < fs.size(); ++f) {
        for (int h : fs[f]) face_of[static_cast<std::size_t>(h)] = static_cast<int>(f);
    }
    std::vector<Label> sig(fs.size(), 0);
    std::vector<char> seen(fs.size(), 0);
    std::vector<int> queue{g.outer_face()};
    seen[static_cast<std::size_t>(g.outer_face())] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int f = queue[qi];
        for (int h : fs[static_cast<std::size_t>(f)]) {
            const auto& he = g.half(h);
            const int other = face_of[static_cast<std::size_t>(he.twin)];
            const Label s = sig[static_cast<std::size_t>(f)] ^ position_mask(n, he.curve);
            if (!seen[static_cast<std::size_t>(other)]) {
                seen[static_cast<std::size_t>(other)] = 1;
                sig[static_cast<std::size_t>(other)] = s;
                queue.push_back(other);
            } else if (sig[static_cast<std::size_t>(other)] != s) {
                throw VennError(ErrorKind::InconsistentSignature, "region signature depends on the path");
            }
        }
    }
    return sig;
}

bool is_venn(const EmbeddedMultigraph& g) {
    const auto sig = region_signatures(g);
    std::set<Label> distinct(sig.begin(), sig.end());
    return sig.size() == (std::size_t{1} << g.curves()) && distinct.size() == sig.size();
}

bool is_monotone_diagram(const EmbeddedMultigraph& g) {
    const int n = g.curves();
    const auto fs = g.faces();
    const auto sig = region_signatures(g);
    std::vector<int> face_of(2 * g.edge_count(), -1);
    for (std::size_t f = 0; f < fs.size(); ++f) {
        for (int h : fs[f]) face_of[static_cast<std::size_t>(h)] = static_cast<int>(f);
    }
    for (std::size_t f = 0; f < fs.size(); ++f) {
        const int w = weight(sig[f]);
        if (w == 0 || w == n) continue;
        bool down = false, up = false;
        for (int h : fs[f]) {
            const int wo = weight(sig[static_cast<std::size_t>(face_of[static_cast<std::size_t>(g.half(h).twin)])]);
            down |= wo == w - 1;
            up |= wo == w + 1;
        }
        if (!down || !up) return false;
    }
    return true;
}

WireDiagram wires_D(int n) {
    if (n < 2) throw VennError(ErrorKind::DimensionTooSmall, "D_n needs n >= 2");
    WireDiagram d{2, {{1, 2, true}, {1, 2, true}}};
    for (int k = 2; k < n; ++k) {
        WireDiagram minus = d;
        minus.events.pop_back();
        WireDiagram next{k + 1, minus.events};
        next.events.push_back({1, k + 1, false});
        for (auto e : minus.mirrored().events) next.events.push_back({e.lo + 1, e.hi + 1, e.upward});
        next.events.push_back({1, k + 1, true});
        d = std::move(next);
    }
    return d;
}

WireDiagram wires_D_star(int n) {
    if (n < 4) throw VennError(ErrorKind::DimensionTooSmall, "D_n* needs n >= 4");
    const WireDiagram d = wires_D(n);
    WireDiagram out{n, {}};
    for (const auto& e : d.events) {
        if (e.lo == 1 && e.hi == n && !e.upward) {
            // the bottom wire is taken out of the crossing and met separately below it
            out.events.push_back({2, n, false});
            out.events.push_back({1, 2, false});
        } else if (e.lo == 1 && e.hi == n && e.upward) {
            out.events.push_back({1, n - 1, true});
            out.events.push_back({n - 1, n, true});
        } else {
            out.events.push_back(e);
        }
    }
    return out;
}

EmbeddedMultigraph build_D(int n) { return EmbeddedMultigraph::from_wires(wires_D(n)); }
EmbeddedMultigraph build_D_star(int n) { return EmbeddedMultigraph::from_wires(wires_D_star(n)); }

std::vector<int> independent_set_of_degree4(const EmbeddedMultigraph& g) {
    std::vector<int> u;
    for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
        if (g.degree(v) == 4) u.push_back(v);
    }
    for (int a : u) {
        for (int h : g.rotation(a)) {
            const int b = g.half(g.half(h).twin).vertex;
            if (g.degree(b) == 4) throw VennError(ErrorKind::NotIndependent, "two degree-4 crossings are adjacent");
        }
    }
    return u;
}

MatchingRefutation refute_matching(const EmbeddedMultigraph& g) {
    MatchingRefutation r;
    r.independent = independent_set_of_degree4(g);
    for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
        if (!std::binary_search(r.independent.begin(), r.independent.end(), v)) r.rest.push_back(v);
    }
    if (r.independent.size() <= r.rest.size()) {
        throw VennError(ErrorKind::HasPerfectMatching, "independent set is not larger than its complement");
    }
    return r;
}

Matching primal_max_matching(const EmbeddedMultigraph& g) { return general_max_matching(g.simple_graph()); }

std::optional<VertexSequence> primal_hamilton_cycle(const EmbeddedMultigraph& g) {
    if (g.vertex_count() == 2) {
        if (g.multiplicity(0, 1) >= 2) return VertexSequence{0, 1};
        return std::nullopt;
    }
    return find_hamilton_cycle(g.simple_graph());
}

bool same_cyclic_word(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    const std::size_t len = a.size();
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t s = 0; s < len; ++s) {
            bool eq = true;
            for (std::size_t i = 0; i < len && eq; ++i) {
                const std::size_t j = dir == 0 ? (s + i) % len : (s + len - i) % len;
                eq = a[i] == b[j];
            }
            if (eq) return true;
        }
    }
    return len == 0;
}

}  // namespace venn
