#include "venn/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "venn/error.hpp"

namespace venn {

std::vector<int> bipartition(const Graph& g) {
    std::vector<int> color(g.size(), -1);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < g.size(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        stack.assign(1, s);
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (auto w : g[v]) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    throw VennError(ErrorKind::NotBipartite, "graph has an odd cycle");
                }
            }
        }
    }
    return color;
}

Matching bipartite_max_matching(const Graph& g) {
    const auto color = bipartition(g);
    const std::size_t n = g.size();
    constexpr int kInf = std::numeric_limits<int>::max();
    Matching m;
    m.mate.assign(n, -1);
    std::vector<int> dist(n);
    std::vector<std::uint32_t> left;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (color[v] == 0) left.push_back(v);
    }
    auto bfs = [&]() {
        std::queue<std::uint32_t> q;
        bool found = false;
        for (auto u : left) {
            if (m.mate[u] < 0) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = kInf;
            }
        }
        while (!q.empty()) {
            const auto u = q.front();
            q.pop();
            for (auto w : g[u]) {
                const int next = m.mate[w];
                if (next < 0) {
                    found = true;
                } else if (dist[static_cast<std::size_t>(next)] == kInf) {
                    dist[static_cast<std::size_t>(next)] = dist[u] + 1;
                    q.push(static_cast<std::uint32_t>(next));
                }
            }
        }
        return found;
    };
    std::vector<std::size_t> it(n);
    auto dfs = [&](auto&& self, std::uint32_t u) -> bool {
        for (; it[u] < g[u].size(); ++it[u]) {
            const auto w = g[u][it[u]];
            const int next = m.mate[w];
            if (next < 0 || (dist[static_cast<std::size_t>(next)] == dist[u] + 1 &&
                             self(self, static_cast<std::uint32_t>(next)))) {
                m.mate[u] = static_cast<int>(w);
                m.mate[w] = static_cast<int>(u);
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    };
    while (bfs()) {
        std::fill(it.begin(), it.end(), 0);
        for (auto u : left) {
            if (m.mate[u] < 0 && dfs(dfs, u)) ++m.size;
        }
    }
    return m;
}

Matching general_max_matching(const Graph& g) {
    const int n = static_cast<int>(g.size());
    std::vector<int> match(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n)),
        base(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n)), blossom(static_cast<std::size_t>(n));
    std::vector<int> q;
    auto lca = [&](int a, int b) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        while (true) {
            a = base[static_cast<std::size_t>(a)];
            seen[static_cast<std::size_t>(a)] = 1;
            if (match[static_cast<std::size_t>(a)] == -1) break;
            a = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(a)])];
        }
        while (true) {
            b = base[static_cast<std::size_t>(b)];
            if (seen[static_cast<std::size_t>(b)]) return b;
            b = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(b)])];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[static_cast<std::size_t>(v)] != b) {
            const int mv = match[static_cast<std::size_t>(v)];
            blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = 1;
            blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(mv)])] = 1;
            parent[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent[static_cast<std::size_t>(mv)];
        }
    };
    auto find_path = [&](int root) -> int {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i;
        used[static_cast<std::size_t>(root)] = 1;
        q.assign(1, root);
        for (std::size_t qh = 0; qh < q.size(); ++qh) {
            const int v = q[qh];
            for (auto wu : g[static_cast<std::size_t>(v)]) {
                const int to = static_cast<int>(wu);
                if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(to)] ||
                    match[static_cast<std::size_t>(v)] == to) {
                    continue;
                }
                if (to == root || (match[static_cast<std::size_t>(to)] != -1 &&
                                   parent[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] != -1)) {
                    const int cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) {
                            base[static_cast<std::size_t>(i)] = cur;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = 1;
                                q.push_back(i);
                            }
                        }
                    }
                } else if (parent[static_cast<std::size_t>(to)] == -1) {
                    parent[static_cast<std::size_t>(to)] = v;
                    if (match[static_cast<std::size_t>(to)] == -1) return to;
                    used[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] = 1;
                    q.push_back(match[static_cast<std::size_t>(to)]);
                }
            }
        }
        return -1;
    };
    // greedy start
    for (int v = 0; v < n; ++v) {
        if (match[static_cast<std::size_t>(v)] != -1) continue;
        for (auto wu : g[static_cast<std::size_t>(v)]) {
            const int w = static_cast<int>(wu);
            if (w != v && match[static_cast<std::size_t>(w)] == -1) {
                match[static_cast<std::size_t>(v)] = w;
                match[static_cast<std::size_t>(w)] = v;
                break;
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (match[static_cast<std::size_t>(v)] != -1) continue;
        int u = find_path(v);
        while (u != -1) {
            const int pv = parent[static_cast<std::size_t>(u)];
            const int ppv = match[static_cast<std::size_t>(pv)];
            match[static_cast<std::size_t>(u)] = pv;
            match[static_cast<std::size_t>(pv)] = u;
            u = ppv;
        }
    }
    Matching m;
    m.mate = match;
    for (int v = 0; v < n; ++v) {
        if (match[static_cast<std::size_t>(v)] > v) ++m.size;
    }
    return m;
}

bool is_matching(const Graph& g, const Matching& m) {
    if (m.mate.size() != g.size()) return false;
    std::size_t count = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        const int w = m.mate[v];
        if (w < 0) continue;
        if (static_cast<std::size_t>(w) >= g.size() || m.mate[static_cast<std::size_t>(w)] != static_cast<int>(v) ||
            static_cast<std::size_t>(w) == v) {
            return false;
        }
        if (std::find(g[v].begin(), g[v].end(), static_cast<std::uint32_t>(w)) == g[v].end()) return false;
        if (static_cast<std::size_t>(w) > v) ++count;
    }
    return count == m.size;
}

HallViolator hall_violator(const Graph& g) {
    const auto color = bipartition(g);
    const Matching m = bipartite_max_matching(g);
    std::size_t side_size[2] = {0, 0};
    for (int c : color) ++side_size[c];
    bool found = false;
    HallViolator best;
    for (int side = 0; side <= 1; ++side) {
        if (m.size == side_size[side]) continue;
        std::vector<char> in(g.size(), 0);
        std::vector<std::uint32_t> q;
        for (std::uint32_t u = 0; u < g.size(); ++u) {
            if (color[u] == side && m.mate[u] < 0) {
                in[u] = 1;
                q.push_back(u);
            }
        }
        for (std::size_t qh = 0; qh < q.size(); ++qh) {
            for (auto w : g[q[qh]]) {
                if (in[w]) continue;
                in[w] = 1;
                const int next = m.mate[w];
                if (next >= 0 && !in[static_cast<std::size_t>(next)]) {
                    in[static_cast<std::size_t>(next)] = 1;
                    q.push_back(static_cast<std::uint32_t>(next));
                }
            }
        }
        HallViolator h;
        for (std::uint32_t v = 0; v < g.size(); ++v) {
            if (!in[v]) continue;
            (color[v] == side ? h.S : h.N).push_back(v);
        }
        if (!found || h.S.size() < best.S.size()) {
            best = std::move(h);
            found = true;
        }
    }
    if (!found) throw VennError(ErrorKind::HasPerfectMatching, "graph has a perfect matching");
    return best;
}

std::optional<HallViolator> hall_violator_within(const Graph& g, const std::vector<std::uint32_t>& candidates) {
    // bipartite graph: candidates on one side, their neighbours on the other
    std::vector<int> index(g.size(), -1);
    std::vector<std::uint32_t> verts;
    auto add = [&](std::uint32_t v) {
        if (index[v] < 0) {
            index[v] = static_cast<int>(verts.size());
            verts.push_back(v);
        }
    };
    for (auto c : candidates) add(c);
    const std::size_t k = verts.size();
    for (auto c : candidates) {
        for (auto w : g[c]) add(w);
    }
    for (std::size_t i = k; i < verts.size(); ++i) {
        if (index[verts[i]] < static_cast<int>(k)) {
            throw VennError(ErrorKind::NotBipartite, "candidates are not independent");
        }
    }
    Graph b(verts.size());
    for (auto c : candidates) {
        for (auto w : g[c]) {
            b[static_cast<std::size_t>(index[c])].push_back(static_cast<std::uint32_t>(index[w]));
            b[static_cast<std::size_t>(index[w])].push_back(static_cast<std::uint32_t>(index[c]));
        }
    }
    const Matching m = bipartite_max_matching(b);
    std::optional<HallViolator> best;
    for (std::uint32_t u = 0; u < k; ++u) {
        if (m.mate[u] >= 0) continue;
        std::vector<char> in(b.size(), 0);
        std::vector<std::uint32_t> q{u};
        in[u] = 1;
        for (std::size_t qh = 0; qh < q.size(); ++qh) {
            for (auto w : b[q[qh]]) {
                if (in[w]) continue;
                in[w] = 1;
                const int next = m.mate[w];
                if (next >= 0 && !in[static_cast<std::size_t>(next)]) {
                    in[static_cast<std::size_t>(next)] = 1;
                    q.push_back(static_cast<std::uint32_t>(next));
                }
            }
        }
        HallViolator h;
        for (std::uint32_t v = 0; v < b.size(); ++v) {
            if (in[v]) (v < k ? h.S : h.N).push_back(verts[v]);
        }
        std::sort(h.S.begin(), h.S.end());
        std::sort(h.N.begin(), h.N.end());
        if (!best || h.S.size() < best->S.size()) best = std::move(h);
    }
    return best;
}

bool verify_violator(const Graph& g, const HallViolator& h) {
    if (h.S.empty() || h.N.size() >= h.S.size()) return false;
    const auto color = bipartition(g);
    std::vector<char> neigh(g.size(), 0);
    for (auto s : h.S) {
        if (s >= g.size() || color[s] != color[h.S.front()]) return false;
        for (auto w : g[s]) neigh[w] = 1;
    }
    std::vector<std::uint32_t> n;
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        if (neigh[v]) n.push_back(v);
    }
    auto sorted = h.N;
    std::sort(sorted.begin(), sorted.end());
    return sorted == n;
}

}  // namespace venn
