#include "venn/hamilton.hpp"

#include <algorithm>

namespace venn {

namespace {

bool adjacent(const Graph& g, std::uint32_t a, std::uint32_t b) {
    return std::find(g[a].begin(), g[a].end(), b) != g[a].end();
}

class Search {
public:
    // closed: search cycles through `start`; otherwise paths beginning at `start`.
    Search(const Graph& g, bool closed, const std::vector<int>* color)
        : g_(g), closed_(closed), color_(color), visited_(g.size(), 0) {}

    // Returns false when the sink asked to stop.
    bool run(std::uint32_t start, const std::function<bool(const VertexSequence&)>& sink) {
        start_ = start;
        sink_ = &sink;
        std::fill(visited_.begin(), visited_.end(), 0);
        path_.assign(1, start);
        visited_[start] = 1;
        remaining_[0] = remaining_[1] = 0;
        if (color_) {
            for (std::size_t v = 0; v < g_.size(); ++v) {
                if (v != start) ++remaining_[(*color_)[v]];
            }
        }
        stopped_ = false;
        extend(start);
        return !stopped_;
    }

private:
    // Usable edges of an unvisited vertex: to unvisited vertices, to the head, and (cycles) to start.
    int usable(std::uint32_t v, std::uint32_t head) const {
        int k = 0;
        for (auto w : g_[v]) {
            if (!visited_[w] || w == head || (closed_ && w == start_)) ++k;
        }
        return k;
    }

    bool feasible(std::uint32_t head) {
        const std::size_t left = g_.size() - path_.size();
        if (left == 0) return true;
        if (color_ && closed_) {
            // the rest alternates colours starting opposite to head and ends opposite to start
            const int c = (*color_)[head];
            const std::size_t want_other = (left + 1) / 2, want_same = left / 2;
            if (remaining_[1 - c] != want_other || remaining_[c] != want_same) return false;
        }
        int low = 0;
        std::uint32_t any = 0;
        for (std::uint32_t v = 0; v < g_.size(); ++v) {
            if (visited_[v]) continue;
            any = v;
            const int u = usable(v, head);
            if (u < 1) return false;
            if (u < 2) {
                if (closed_) return false;
                if (++low > 1) return false;
            }
        }
        // unvisited vertices must be connected and reachable from head
        std::vector<char>& seen = scratch_;
        seen.assign(g_.size(), 0);
        std::vector<std::uint32_t>& stack = stack_;
        stack.assign(1, any);
        seen[any] = 1;
        std::size_t reached = 1;
        bool touches_head = false, touches_start = !closed_;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (auto w : g_[v]) {
                if (w == head) touches_head = true;
                if (w == start_) touches_start = true;
                if (!visited_[w] && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached == left && touches_head && touches_start;
    }

    void extend(std::uint32_t head) {
        if (stopped_) return;
        if (path_.size() == g_.size()) {
            if (!closed_ || adjacent(g_, head, start_)) {
                if (!(*sink_)(path_)) stopped_ = true;
            }
            return;
        }
        if (!feasible(head)) return;
        // on cycles, a neighbour with two usable edges must be entered from head now
        std::vector<std::pair<int, std::uint32_t>> options;
        int forced = 0;
        std::uint32_t forced_v = 0;
        for (auto w : g_[head]) {
            if (visited_[w]) continue;
            const int u = usable(w, head);
            if (closed_ && u == 2 && !(path_.size() == 1 && adjacent(g_, w, start_))) {
                ++forced;
                forced_v = w;
            }
            options.emplace_back(u, w);
        }
        if (forced > 1) return;
        if (forced == 1) {
            options.assign(1, {0, forced_v});
        } else {
            std::sort(options.begin(), options.end());
        }
        for (const auto& [u, w] : options) {
            (void)u;
            visited_[w] = 1;
            path_.push_back(w);
            if (color_) --remaining_[(*color_)[w]];
            extend(w);
            if (color_) ++remaining_[(*color_)[w]];
            path_.pop_back();
            visited_[w] = 0;
            if (stopped_) return;
        }
    }

    const Graph& g_;
    bool closed_;
    const std::vector<int>* color_;
    std::vector<char> visited_;
    std::vector<char> scratch_;
    std::vector<std::uint32_t> stack_;
    VertexSequence path_;
    std::uint32_t start_ = 0;
    std::size_t remaining_[2] = {0, 0};
    const std::function<bool(const VertexSequence&)>* sink_ = nullptr;
    bool stopped_ = false;
};

std::optional<std::vector<int>> try_bipartition(const Graph& g) {
    try {
        return bipartition(g);
    } catch (...) {
        return std::nullopt;
    }
}

}  // namespace

// A spanning path or cycle contains a matching of size floor(V/2).
bool matching_too_small(const Graph& g) { return general_max_matching(g).size < g.size() / 2; }

std::optional<VertexSequence> find_hamilton_cycle(const Graph& g) {
    if (g.size() < 3 || matching_too_small(g)) return std::nullopt;
    const auto color = try_bipartition(g);
    std::uint32_t start = 0;
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        if (g[v].size() < g[start].size()) start = v;
    }
    if (g[start].size() < 2) return std::nullopt;
    Search s(g, true, color ? &*color : nullptr);
    std::optional<VertexSequence> out;
    s.run(start, [&](const VertexSequence& c) {
        out = c;
        return false;
    });
    return out;
}

std::optional<VertexSequence> find_hamilton_path(const Graph& g) {
    if (g.empty()) return std::nullopt;
    if (g.size() == 1) return VertexSequence{0};
    if (matching_too_small(g)) return std::nullopt;
    if (auto c = find_hamilton_cycle(g)) return c;
    const auto color = try_bipartition(g);
    std::optional<VertexSequence> out;
    Search s(g, false, nullptr);
    for (std::uint32_t start = 0; start < g.size() && !out; ++start) {
        if (color) {
            // in a bipartite graph an endpoint of a spanning path lies in a class of maximal size
            std::size_t count[2] = {0, 0};
            for (int c : *color) ++count[c];
            const int cls = (*color)[start];
            if (count[cls] < count[1 - cls]) continue;
        }
        s.run(start, [&](const VertexSequence& p) {
            out = p;
            return false;
        });
    }
    return out;
}

std::uint64_t for_each_hamilton_cycle(const Graph& g, const std::function<bool(const VertexSequence&)>& sink) {
    if (g.size() < 3 || matching_too_small(g)) return 0;
    const auto color = try_bipartition(g);
    Search s(g, true, color ? &*color : nullptr);
    std::uint64_t count = 0;
    s.run(0, [&](const VertexSequence& c) {
        if (c[1] > c.back()) return true;
        ++count;
        return sink(c);
    });
    return count;
}

bool is_hamilton_path(const Graph& g, const VertexSequence& p) {
    if (p.size() != g.size()) return false;
    std::vector<char> seen(g.size(), 0);
    for (auto v : p) {
        if (v >= g.size() || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!adjacent(g, p[i], p[i + 1])) return false;
    }
    return true;
}

bool is_hamilton_cycle(const Graph& g, const VertexSequence& c) {
    return g.size() >= 3 && is_hamilton_path(g, c) && adjacent(g, c.back(), c.front());
}

}  // namespace venn
