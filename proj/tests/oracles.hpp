#pragma once

// Brute-force reference implementations used only by tests.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Rot = std::vector<std::vector<std::uint32_t>>;  // clockwise neighbour lists
using Square = std::array<std::uint32_t, 4>;

inline std::uint32_t pbit(int n, int k) { return 1u << (n - k); }

// All 4-cycles of Q_n as (x, x^i, x^i^j, x^j).
inline std::vector<Square> squares(int n) {
    std::vector<Square> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (std::uint32_t x = 0; x < (1u << n); ++x) {
                if (x & (pbit(n, i) | pbit(n, j))) continue;
                out.push_back({x, x ^ pbit(n, i), x ^ pbit(n, i) ^ pbit(n, j), x ^ pbit(n, j)});
            }
        }
    }
    return out;
}

// Type sequences (1-based positions) of all simple cycles of Q_m of the given length through 0.
inline std::vector<std::vector<int>> cycles_through_zero(int m, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> seq;
    std::vector<bool> seen(1u << m, false);
    seen[0] = true;
    std::function<void(std::uint32_t)> go = [&](std::uint32_t x) {
        if (static_cast<int>(seq.size()) == len - 1) {
            for (int k = 1; k <= m; ++k) {
                if ((x ^ pbit(m, k)) == 0) {
                    seq.push_back(k);
                    out.push_back(seq);
                    seq.pop_back();
                }
            }
            return;
        }
        for (int k = 1; k <= m; ++k) {
            const std::uint32_t y = x ^ pbit(m, k);
            if (seen[y]) continue;
            seen[y] = true;
            seq.push_back(k);
            go(y);
            seq.pop_back();
            seen[y] = false;
        }
    };
    go(0);
    return out;
}

// Orbit key: minimum over type permutations, rotations and reversal.
inline std::vector<int> orbit_key(const std::vector<int>& s, int m) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> best;
    const std::size_t len = s.size();
    do {
        for (int rev = 0; rev < 2; ++rev) {
            for (std::size_t r = 0; r < len; ++r) {
                std::vector<int> t(len);
                for (std::size_t k = 0; k < len; ++k) {
                    const std::size_t idx = rev ? (r + len - k) % len : (r + k) % len;
                    t[k] = perm[s[idx] - 1];
                }
                if (best.empty() || t < best) best = t;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline std::size_t cycle_orbits(int m, int len) {
    std::set<std::vector<int>> keys;
    for (const auto& s : cycles_through_zero(m, len)) keys.insert(orbit_key(s, m));
    return keys.size();
}

// Link of vertex x in a face set: faces at x give edges between the two neighbours of x.
// Returns the number of link components and whether every link vertex has degree `want`
// (2 everywhere, or 1 at the two boundary neighbours).
struct LinkInfo {
    int components = 0;
    bool degrees_ok = true;
};

inline LinkInfo link_info(std::uint32_t x, const std::vector<Square>& faces, const std::set<std::uint32_t>& boundary_nbrs) {
    std::map<std::uint32_t, std::vector<std::uint32_t>> adj;
    for (const auto& f : faces) {
        for (int k = 0; k < 4; ++k) {
            if (f[k] != x) continue;
            const auto a = f[(k + 1) % 4], b = f[(k + 3) % 4];
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    LinkInfo info;
    for (const auto& [v, ns] : adj) {
        const std::size_t want = boundary_nbrs.count(v) ? 1 : 2;
        if (ns.size() != want) info.degrees_ok = false;
    }
    std::set<std::uint32_t> seen;
    for (const auto& [v, ns] : adj) {
        if (seen.count(v)) continue;
        ++info.components;
        std::vector<std::uint32_t> stack{v};
        seen.insert(v);
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            for (auto w : adj[u]) {
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
    }
    return info;
}

inline bool connected(int n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                      const std::function<bool(std::uint32_t)>& keep) {
    std::vector<std::vector<std::uint32_t>> adj(1u << n);
    for (auto [a, b] : edges) {
        if (keep(a) && keep(b)) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    std::vector<std::uint32_t> vs;
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
        if (keep(x)) vs.push_back(x);
    }
    if (vs.empty()) return true;
    std::vector<bool> seen(1u << n, false);
    std::vector<std::uint32_t> stack{vs[0]};
    seen[vs[0]] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (auto w : adj[u]) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == vs.size();
}

inline std::vector<std::pair<std::uint32_t, std::uint32_t>> face_edges(const std::vector<Square>& faces) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> es;
    for (const auto& f : faces) {
        for (int k = 0; k < 4; ++k) es.insert({std::min(f[k], f[(k + 1) % 4]), std::max(f[k], f[(k + 1) % 4])});
    }
    return {es.begin(), es.end()};
}

// Subset search over 4-cycles of Q_n: all face sets forming a sphere quadrangulation that spans
// Q_n and has connected half-spaces.
inline std::vector<std::vector<Square>> venn_face_sets(int n) {
    const auto sq = squares(n);
    const std::size_t target = (1u << n) - 2;
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> count;
    std::vector<Square> chosen;
    std::vector<std::vector<Square>> out;
    auto edge_of = [](const Square& s, int k) {
        return std::make_pair(std::min(s[k], s[(k + 1) % 4]), std::max(s[k], s[(k + 1) % 4]));
    };
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (chosen.size() == target) {
            for (const auto& [e, c] : count) {
                if (c != 0 && c != 2) return;
            }
            std::vector<bool> covered(1u << n, false);
            for (const auto& f : chosen) {
                for (auto x : f) covered[x] = true;
            }
            if (std::find(covered.begin(), covered.end(), false) != covered.end()) return;
            for (std::uint32_t x = 0; x < (1u << n); ++x) {
                const auto li = link_info(x, chosen, {});
                if (li.components != 1 || !li.degrees_ok) return;
            }
            const auto es = face_edges(chosen);
            if (!connected(n, es, [](std::uint32_t) { return true; })) return;
            for (int k = 1; k <= n; ++k) {
                for (std::uint32_t b = 0; b < 2; ++b) {
                    if (!connected(n, es, [&](std::uint32_t x) { return ((x & pbit(n, k)) != 0) == (b == 1); })) return;
                }
            }
            out.push_back(chosen);
            return;
        }
        if (i == sq.size() || sq.size() - i < target - chosen.size()) return;
        bool ok = true;
        for (int k = 0; k < 4; ++k) ok &= count[edge_of(sq[i], k)] < 2;
        if (ok) {
            for (int k = 0; k < 4; ++k) ++count[edge_of(sq[i], k)];
            chosen.push_back(sq[i]);
            go(i + 1);
            chosen.pop_back();
            for (int k = 0; k < 4; ++k) --count[edge_of(sq[i], k)];
        }
        go(i + 1);
    };
    go(0);
    return out;
}

// Subset search for fillings of a cycle in Q_m: face sets forming a disk bounded by the cycle
// that covers every vertex of Q_m.
inline std::set<std::set<std::set<std::uint32_t>>> disk_face_sets(int m, const std::vector<std::uint32_t>& cycle) {
    const auto sq = squares(m);
    const std::size_t len = cycle.size();
    const std::size_t target = ((1u << m) * 2 - 2 - len) / 2;
    std::set<std::pair<std::uint32_t, std::uint32_t>> bedges;
    std::map<std::uint32_t, std::set<std::uint32_t>> bnbr;
    for (std::size_t k = 0; k < len; ++k) {
        const auto a = cycle[k], b = cycle[(k + 1) % len];
        bedges.insert({std::min(a, b), std::max(a, b)});
        bnbr[a].insert(b);
        bnbr[b].insert(a);
    }
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> count;
    std::vector<Square> chosen;
    std::set<std::set<std::set<std::uint32_t>>> out;
    auto edge_of = [](const Square& s, int k) {
        return std::make_pair(std::min(s[k], s[(k + 1) % 4]), std::max(s[k], s[(k + 1) % 4]));
    };
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (chosen.size() == target) {
            for (const auto& e : bedges) {
                if (count[e] != 1) return;
            }
            for (const auto& [e, c] : count) {
                if (!bedges.count(e) && c != 0 && c != 2) return;
            }
            std::vector<bool> covered(1u << m, false);
            for (const auto& f : chosen) {
                for (auto x : f) covered[x] = true;
            }
            if (std::find(covered.begin(), covered.end(), false) != covered.end()) return;
            for (std::uint32_t x = 0; x < (1u << m); ++x) {
                const auto it = bnbr.find(x);
                const auto li = link_info(x, chosen, it == bnbr.end() ? std::set<std::uint32_t>{} : it->second);
                if (li.components != 1 || !li.degrees_ok) return;
            }
            std::set<std::set<std::uint32_t>> key;
            for (const auto& f : chosen) key.insert(std::set<std::uint32_t>(f.begin(), f.end()));
            out.insert(key);
            return;
        }
        if (i == sq.size() || sq.size() - i < target - chosen.size()) return;
        bool ok = true;
        for (int k = 0; k < 4; ++k) {
            const auto e = edge_of(sq[i], k);
            ok &= count[e] < (bedges.count(e) ? 1 : 2);
        }
        if (ok) {
            for (int k = 0; k < 4; ++k) ++count[edge_of(sq[i], k)];
            chosen.push_back(sq[i]);
            go(i + 1);
            chosen.pop_back();
            for (int k = 0; k < 4; ++k) --count[edge_of(sq[i], k)];
        }
        go(i + 1);
    };
    go(0);
    return out;
}

// Rotation system from a coherently orientable set of faces on the sphere.
inline Rot rotation_from_faces(int n, std::vector<Square> faces) {
    const std::size_t nf = faces.size();
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> dart_face;
    std::vector<int> orient(nf, 0);
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::size_t>> users;
    for (std::size_t f = 0; f < nf; ++f) {
        for (int k = 0; k < 4; ++k) {
            const auto a = faces[f][k], b = faces[f][(k + 1) % 4];
            users[{std::min(a, b), std::max(a, b)}].push_back(f);
        }
    }
    auto has_dart = [&](std::size_t f, std::uint32_t a, std::uint32_t b) {
        for (int k = 0; k < 4; ++k) {
            if (faces[f][k] == a && faces[f][(k + 1) % 4] == b) return true;
        }
        return false;
    };
    std::vector<std::size_t> queue{0};
    orient[0] = 1;
    while (!queue.empty()) {
        const auto f = queue.back();
        queue.pop_back();
        for (int k = 0; k < 4; ++k) {
            const auto a = faces[f][k], b = faces[f][(k + 1) % 4];
            for (auto g : users[{std::min(a, b), std::max(a, b)}]) {
                if (g == f || orient[g]) continue;
                if (has_dart(g, a, b)) std::reverse(faces[g].begin(), faces[g].end());
                orient[g] = 1;
                queue.push_back(g);
            }
        }
    }
    // next[x][u] = w when face has ..., u, x, w, ...: walking around x
    std::vector<std::map<std::uint32_t, std::uint32_t>> next(1u << n);
    for (const auto& f : faces) {
        for (int k = 0; k < 4; ++k) next[f[(k + 1) % 4]][f[k]] = f[(k + 2) % 4];
    }
    Rot rot(1u << n);
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
        if (next[x].empty()) continue;
        const auto start = next[x].begin()->first;
        auto u = start;
        do {
            rot[x].push_back(u);
            u = next[x].at(u);
        } while (u != start);
    }
    return rot;
}

// Extends a partial map along rotations; fails on conflicts.
inline std::optional<std::vector<std::uint32_t>> extend_map(const Rot& a, const Rot& b, std::uint32_t v0, std::uint32_t w0,
                                                           std::size_t shift, bool reverse) {
    const std::size_t n = a.size();
    std::vector<std::int64_t> phi(n, -1), inv(n, -1);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;
    // anchor: a[v0][0] maps to b[w0][shift]
    phi[v0] = w0;
    inv[w0] = v0;
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::size_t>> work{{v0, w0, shift}};
    while (!work.empty()) {
        auto [v, w, s] = work.back();
        work.pop_back();
        const std::size_t d = a[v].size();
        if (b[w].size() != d) return std::nullopt;
        for (std::size_t k = 0; k < d; ++k) {
            const std::uint32_t va = a[v][k];
            const std::uint32_t wb = reverse ? b[w][(s + d - k) % d] : b[w][(s + k) % d];
            if (phi[va] == -1 && inv[wb] == -1) {
                phi[va] = wb;
                inv[wb] = va;
                // align neighbour rotation so that v maps to w
                const auto& ra = a[va];
                const auto& rb = b[wb];
                if (ra.size() != rb.size()) return std::nullopt;
                const std::size_t ia = std::find(ra.begin(), ra.end(), v) - ra.begin();
                const std::size_t ib = std::find(rb.begin(), rb.end(), w) - rb.begin();
                if (ia == ra.size() || ib == rb.size()) return std::nullopt;
                // position ia in a corresponds to position ib in b
                const std::size_t dd = ra.size();
                const std::size_t s2 = reverse ? (ib + ia) % dd : (ib + dd - ia) % dd;
                work.emplace_back(va, wb, s2);
            } else if (phi[va] != static_cast<std::int64_t>(wb) || inv[wb] != static_cast<std::int64_t>(va)) {
                return std::nullopt;
            }
        }
    }
    std::vector<std::uint32_t> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (phi[k] < 0) return std::nullopt;
        out[k] = static_cast<std::uint32_t>(phi[k]);
    }
    return out;
}

// All plane isomorphisms a -> b, both orientations. Both graphs connected, same vertex count.
inline std::vector<std::vector<std::uint32_t>> plane_isomorphisms(const Rot& a, const Rot& b, bool first_only = false) {
    std::vector<std::vector<std::uint32_t>> out;
    if (a.size() != b.size()) return out;
    const std::uint32_t v0 = 0;
    for (std::uint32_t w = 0; w < b.size(); ++w) {
        if (b[w].size() != a[v0].size()) continue;
        for (std::size_t s = 0; s < b[w].size(); ++s) {
            for (int rev = 0; rev < 2; ++rev) {
                auto phi = extend_map(a, b, v0, w, s, rev == 1);
                if (!phi) continue;
                // verify every rotation maps onto a rotation of b with one global orientation
                bool ok = true;
                for (std::uint32_t v = 0; v < a.size() && ok; ++v) {
                    std::vector<std::uint32_t> img;
                    for (auto u : a[v]) img.push_back((*phi)[u]);
                    if (rev) std::reverse(img.begin(), img.end());
                    const auto& r = b[(*phi)[v]];
                    if (img.size() != r.size()) {
                        ok = false;
                        break;
                    }
                    bool found = false;
                    for (std::size_t t = 0; t < r.size() && !found; ++t) {
                        bool eq = true;
                        for (std::size_t k = 0; k < r.size() && eq; ++k) eq = img[k] == r[(t + k) % r.size()];
                        found = eq;
                    }
                    ok = found;
                }
                if (!ok) continue;
                out.push_back(*phi);
                if (first_only) return out;
            }
        }
    }
    return out;
}

inline bool plane_isomorphic(const Rot& a, const Rot& b) { return !plane_isomorphisms(a, b, true).empty(); }

// Orbits of vertices under all plane automorphisms (including reflections).
inline std::size_t vertex_orbit_count(const Rot& a) {
    std::vector<std::uint32_t> parent(a.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& phi : plane_isomorphisms(a, a)) {
        for (std::uint32_t v = 0; v < a.size(); ++v) parent[find(v)] = find(phi[v]);
    }
    std::size_t orbits = 0;
    for (std::uint32_t v = 0; v < a.size(); ++v) orbits += find(v) == v;
    return orbits;
}

// Maximum matching size by exhaustive recursion (small graphs).
inline std::size_t max_matching_size(const std::vector<std::vector<std::uint32_t>>& g) {
    const std::size_t n = g.size();
    std::map<std::uint64_t, std::size_t> memo;
    std::function<std::size_t(std::uint64_t)> go = [&](std::uint64_t used) -> std::size_t {
        std::size_t v = 0;
        while (v < n && ((used >> v) & 1)) ++v;
        if (v == n) return 0;
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        std::size_t best = go(used | (1ULL << v));
        for (auto w : g[v]) {
            if (!((used >> w) & 1) && w != v) best = std::max(best, 1 + go(used | (1ULL << v) | (1ULL << w)));
        }
        return memo[used] = best;
    };
    return go(0);
}

// Held-Karp style reachability for Hamilton paths/cycles (n <= 20).
inline bool has_hamilton(const std::vector<std::vector<std::uint32_t>>& g, bool cycle) {
    const std::size_t n = g.size();
    if (n == 0) return false;
    if (n == 1) return !cycle;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v) {
        for (auto w : g[v]) adj[v][w] = true;
    }
    if (cycle && n == 2) return false;
    const std::size_t full = (std::size_t{1} << n) - 1;
    // dp[mask][v]: path covering mask ending at v (starting at 0 for cycles, anywhere for paths)
    std::vector<std::vector<bool>> dp(full + 1, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v) {
        if (!cycle || v == 0) dp[std::size_t{1} << v][v] = true;
    }
    for (std::size_t mask = 1; mask <= full; ++mask) {
        for (std::size_t v = 0; v < n; ++v) {
            if (!dp[mask][v]) continue;
            for (std::size_t w = 0; w < n; ++w) {
                if (adj[v][w] && !((mask >> w) & 1)) dp[mask | (std::size_t{1} << w)][w] = true;
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (dp[full][v] && (!cycle || adj[v][0])) return true;
    }
    return false;
}

}  // namespace oracle
