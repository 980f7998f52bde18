#include "venn/cycle_enum.hpp"

#include <array>
#include <bit>
#include <vector>

#include "venn/error.hpp"

namespace venn {

int min_boundary_length(int n) {
    if (n < 3) throw VennError(ErrorKind::DimensionTooSmall, "boundary window needs n >= 3");
    const long edges = (1L << (n + 1)) - 4;
    long bound = (edges + n - 1) / n;
    if (bound % 2 != 0) ++bound;
    return static_cast<int>(bound);
}

LengthWindow length_window(int n) {
    return LengthWindow{n - 1, min_boundary_length(n), 1 << (n - 1)};
}

namespace {

constexpr int kMaxCycleDim = 6;

// A cyclic shift that starts inside the current prefix and still agrees with the prefix
// after first-appearance relabeling.
struct TiedShift {
    std::uint8_t start;
    std::uint8_t next;
    std::array<std::uint8_t, kMaxCycleDim + 1> map;
};

class CycleSearch {
public:
    CycleSearch(int m, int min_len, int max_len, const CycleSink& sink, std::optional<PrefixPartition> partition)
        : m_(m), min_len_(min_len), max_len_(max_len), sink_(sink), partition_(partition) {
        tau_.reserve(static_cast<std::size_t>(max_len));
        tied_.resize(static_cast<std::size_t>(max_len) + 1);
    }

    CycleEnumStats run() {
        // tau_1 = 1 and tau_2 = 2 in every first-appearance sequence of a cycle.
        if (m_ < 2 || max_len_ < 4) return stats_;
        const Label v1 = bit(1);
        const Label v2 = v1 | bit(2);
        tau_ = {1, 2};
        // The shift starting at index 1 reads (2, ...), relabeled (1, ...): tied with the prefix.
        tied_[2] = {TiedShift{1, 2, {0, 0, 1, 0, 0, 0, 0}}};
        search(v2, 2, visited_of(v1, v2));
        return stats_;
    }

private:
    Label bit(int t) const { return Label{1} << (m_ - t); }

    static std::uint64_t visited_of(Label a, Label b) {
        return (std::uint64_t{1} << 0) | (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    }

    // Reversal starting at the current end vertex: tau[p-1], tau[p-2], ..., tau[0].
    bool reversal_smaller(std::size_t p) const {
        std::array<std::uint8_t, kMaxCycleDim + 1> map{};
        std::uint8_t next = 1;
        for (std::size_t i = 0; i < p; ++i) {
            auto& img = map[tau_[p - 1 - i]];
            if (img == 0) img = next++;
            if (img != tau_[i]) return img < tau_[i];
        }
        return false;
    }

    void search(Label cur, int max_type, std::uint64_t visited) {
        ++stats_.nodes;
        const std::size_t p = tau_.size();
        if (partition_ && static_cast<int>(p) == partition_->depth) {
            const std::uint64_t k = stats_.prefixes++;
            if (k % partition_->num_tasks != partition_->task) return;
        }
        const int remaining = max_len_ - static_cast<int>(p);
        if (std::popcount(cur) > remaining) return;

        const int limit = std::min(max_type + 1, m_);
        for (int t = 1; t <= limit; ++t) {
            const Label nxt = cur ^ bit(t);
            if (nxt == 0) {
                const int len = static_cast<int>(p) + 1;
                if (len >= min_len_ && len <= max_len_) {
                    tau_.push_back(static_cast<std::uint8_t>(t));
                    if (is_canonical_cycle(tau_)) {
                        ++stats_.emitted;
                        sink_(tau_);
                    }
                    tau_.pop_back();
                }
                continue;
            }
            if (static_cast<int>(p) + 1 >= max_len_) continue;
            if (visited & (std::uint64_t{1} << nxt)) continue;
            if (!extend_shifts(p, static_cast<std::uint8_t>(t))) continue;
            tau_.push_back(static_cast<std::uint8_t>(t));
            if (!reversal_smaller(p + 1)) {
                search(nxt, std::max(max_type, t), visited | (std::uint64_t{1} << nxt));
            }
            tau_.pop_back();
        }
    }

    // Computes tied_[p+1] from tied_[p] when appending type t at index p.
    // Returns false if some shift becomes lexicographically smaller than the prefix.
    bool extend_shifts(std::size_t p, std::uint8_t t) {
        auto& out = tied_[p + 1];
        out.clear();
        for (const auto& sh : tied_[p]) {
            TiedShift s = sh;
            auto& img = s.map[t];
            if (img == 0) img = s.next++;
            const std::uint8_t want = tau_[p - s.start];
            if (img < want) return false;
            if (img == want) out.push_back(s);
        }
        // The shift starting at index p begins with t, which relabels to 1 = tau_1.
        TiedShift s{static_cast<std::uint8_t>(p), 2, {}};
        s.map[t] = 1;
        out.push_back(s);
        return true;
    }

    int m_;
    int min_len_;
    int max_len_;
    const CycleSink& sink_;
    std::optional<PrefixPartition> partition_;
    TypeSequence tau_;
    std::vector<std::vector<TiedShift>> tied_;
    CycleEnumStats stats_;
};

}  // namespace

CycleEnumStats enumerate_cycles(int m, int min_len, int max_len, const CycleSink& sink,
                                std::optional<PrefixPartition> partition) {
    if (m < 2 || m > kMaxCycleDim) throw VennError(ErrorKind::DimensionTooSmall, "cycle enumeration supports 2 <= m <= 6");
    if (min_len % 2) ++min_len;
    max_len = std::min(max_len, 1 << m);
    if (min_len < 4) min_len = 4;
    if (min_len > max_len) return {};
    CycleSearch search(m, min_len, max_len, sink, partition);
    return search.run();
}

}  // namespace venn
