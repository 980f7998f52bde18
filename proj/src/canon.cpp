#include "venn/canon.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <memory>
#include <numeric>
#include <queue>

#include "venn/error.hpp"

namespace venn {

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

namespace {

struct Dense {
    std::vector<Label> label;                   // index -> label
    std::vector<std::vector<std::uint32_t>> rot;  // clockwise, dense indices
    std::vector<std::vector<std::uint32_t>> back; // back[v][p] = position of v in rot[rot[v][p]]
    std::size_t darts = 0;
};

Dense densify(const PlaneGraph& g) {
    Dense d;
    std::vector<std::uint32_t> index(g.slots(), 0);
    for (Label x = 0; x < g.slots(); ++x) {
        if (!g.present(x)) continue;
        index[x] = static_cast<std::uint32_t>(d.label.size());
        d.label.push_back(x);
    }
    d.rot.resize(d.label.size());
    d.back.resize(d.label.size());
    for (std::size_t v = 0; v < d.label.size(); ++v) {
        for (Label y : g.rotation(d.label[v])) d.rot[v].push_back(index[y]);
        d.darts += d.rot[v].size();
    }
    for (std::size_t v = 0; v < d.label.size(); ++v) {
        for (std::uint32_t w : d.rot[v]) {
            const auto& r = d.rot[w];
            const auto it = std::find(r.begin(), r.end(), static_cast<std::uint32_t>(v));
            d.back[v].push_back(static_cast<std::uint32_t>(it - r.begin()));
        }
    }
    return d;
}

class CodeSearch {
public:
    explicit CodeSearch(const Dense& d) : d_(d), num_(d.label.size()), first_(d.label.size()) {
        queue_.reserve(d.label.size());
        best_.reserve(d.darts + d.label.size());
    }

    // Returns -1 if the code from this start is smaller than the best so far (it becomes the
    // new best), 0 if equal, 1 if larger (aborted early).
    int run(std::uint32_t v0, std::uint32_t p0, bool clockwise) {
        std::fill(num_.begin(), num_.end(), 0);
        queue_.clear();
        std::uint32_t count = 1;
        num_[v0] = 1;
        first_[v0] = p0;
        queue_.push_back(v0);
        std::size_t pos = 0;
        int state = have_best_ ? 0 : -1;
        if (state < 0) best_.clear();
        auto emit = [&](std::uint32_t value) -> bool {
            if (state < 0) {
                best_.push_back(value);
                return true;
            }
            if (value < best_[pos]) {
                state = -1;
                best_.resize(pos);
                best_.push_back(value);
            } else if (value > best_[pos]) {
                return false;
            }
            ++pos;
            return true;
        };
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            const std::uint32_t v = queue_[qi];
            const auto& r = d_.rot[v];
            const std::size_t deg = r.size();
            const std::size_t start = first_[v];
            for (std::size_t t = 0; t < deg; ++t) {
                const std::size_t p = clockwise ? (start + t) % deg : (start + deg - t) % deg;
                const std::uint32_t w = r[p];
                if (num_[w] == 0) {
                    num_[w] = ++count;
                    first_[w] = d_.back[v][p];
                    queue_.push_back(w);
                }
                if (!emit(num_[w])) return 1;
            }
            if (!emit(0)) return 1;
        }
        if (state < 0) {
            have_best_ = true;
            return -1;
        }
        return 0;
    }

    const std::vector<std::uint32_t>& best() const { return best_; }
    const std::vector<std::uint32_t>& numbering() const { return num_; }
    std::size_t reached() const { return queue_.size(); }

private:
    const Dense& d_;
    std::vector<std::uint32_t> num_;
    std::vector<std::uint32_t> first_;
    std::vector<std::uint32_t> queue_;
    std::vector<std::uint32_t> best_;
    bool have_best_ = false;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

CanonicalForm canonical_form(const PlaneGraph& g) {
    const Dense d = densify(g);
    const std::size_t size = d.label.size();
    CodeSearch search(d);
    std::vector<std::vector<std::uint32_t>> minimal;  // numberings achieving the best code
    for (std::uint32_t v = 0; v < size; ++v) {
        for (std::uint32_t p = 0; p < d.rot[v].size(); ++p) {
            for (bool cw : {true, false}) {
                const int r = search.run(v, p, cw);
                if (search.reached() != size && r <= 0) {
                    throw VennError(ErrorKind::NotConnected, "graph is not connected");
                }
                if (r < 0) minimal.clear();
                if (r <= 0) minimal.push_back(search.numbering());
            }
        }
    }
    CanonicalForm out;
    const auto& best = search.best();
    out.code.bytes.reserve(2 * best.size() + 2);
    auto put = [&](std::uint32_t value) {
        out.code.bytes.push_back(static_cast<std::uint8_t>(value >> 8));
        out.code.bytes.push_back(static_cast<std::uint8_t>(value & 255));
    };
    put(static_cast<std::uint32_t>(size));
    for (auto value : best) put(value);

    const auto& ref = minimal.front();
    out.order.assign(size, 0);
    for (std::size_t v = 0; v < size; ++v) out.order[ref[v] - 1] = d.label[v];
    std::vector<std::size_t> parent(size);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::uint32_t> by_number(size + 1);
    for (std::size_t v = 0; v < size; ++v) by_number[ref[v]] = static_cast<std::uint32_t>(v);
    for (const auto& numbering : minimal) {
        for (std::size_t v = 0; v < size; ++v) {
            const std::size_t a = find_root(parent, v), b = find_root(parent, by_number[numbering[v]]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::vector<Label>> groups(size);
    for (std::size_t v = 0; v < size; ++v) groups[find_root(parent, v)].push_back(d.label[v]);
    for (auto& grp : groups) {
        if (!grp.empty()) out.orbits.push_back(std::move(grp));
    }
    std::sort(out.orbits.begin(), out.orbits.end());
    out.automorphisms = minimal.size();
    return out;
}

CanonicalCode canonical_code(const PlaneGraph& g) { return canonical_form(g).code; }
CanonicalCode canonical_code(const VennQuadrangulation& q) { return canonical_form(q.graph()).code; }
std::vector<std::vector<Label>> vertex_orbits(const VennQuadrangulation& q) { return canonical_form(q.graph()).orbits; }

// graph6

std::string to_graph6_adjacency(const std::vector<std::vector<bool>>& adj) {
    const std::size_t n = adj.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw VennError(ErrorKind::MalformedGraph6, "too many vertices for graph6");
    }
    int acc = 0, nbits = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (adj[i][j] ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

std::vector<std::vector<bool>> parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    std::size_t skipped = 0;
    if (text.starts_with(">>graph6<<")) skipped = 10;
    text.remove_prefix(skipped);
    auto bad = [&](const char* what, std::size_t at) {
        return VennError(ErrorKind::MalformedGraph6, std::string(what) + " at byte " + std::to_string(at + skipped));
    };
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] < 63 || text[k] > 126) throw bad("byte outside the graph6 range", k);
    }
    if (text.empty()) throw bad("empty graph6 string", 0);
    std::size_t n = 0, pos = 0;
    if (text[0] != 126) {
        n = static_cast<std::size_t>(text[0] - 63);
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == 126) throw bad("unsupported graph6 size header", 0);
        n = (static_cast<std::size_t>(text[1] - 63) << 12) | (static_cast<std::size_t>(text[2] - 63) << 6) |
            static_cast<std::size_t>(text[3] - 63);
        pos = 4;
    }
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (text.size() - pos != need) throw bad("graph6 body has the wrong length", std::min(text.size(), pos + need));
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) adj[i][j] = adj[j][i] = true;
        }
    }
    if (k % 6 != 0) {
        const int byte = text[pos + k / 6] - 63;
        if (byte & ((1 << (6 - k % 6)) - 1)) throw bad("nonzero padding bits", pos + k / 6);
    }
    return adj;
}

std::string to_graph6(const VennQuadrangulation& q) {
    const auto form = canonical_form(q.graph());
    const std::size_t n = form.order.size();
    std::vector<std::size_t> index(q.graph().slots());
    for (std::size_t k = 0; k < n; ++k) index[form.order[k]] = k;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& [x, y] : q.graph().edges()) adj[index[x]][index[y]] = adj[index[y]][index[x]] = true;
    return to_graph6_adjacency(adj);
}

VennQuadrangulation from_graph6(std::string_view text) {
    const auto adj = parse_graph6(text);
    const std::size_t size = adj.size();
    auto fail = [](const char* what) { return VennError(ErrorKind::LabelRecoveryFailed, what); };
    if (size < 4 || !std::has_single_bit(size)) throw fail("vertex count is not a power of two >= 4");
    const int n = std::countr_zero(size);
    std::vector<std::vector<std::size_t>> nb(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (adj[i][j]) nb[i].push_back(j);
        }
    }
    // Faces are the 4-cycles whose removal keeps the graph connected.
    std::vector<std::array<std::size_t, 4>> quads;
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b : nb[a]) {
            if (b <= a) continue;
            for (std::size_t d : nb[a]) {
                if (d <= b) continue;
                for (std::size_t c : nb[b]) {
                    if (c <= a || c == d || !adj[c][d]) continue;
                    quads.push_back({a, b, c, d});
                }
            }
        }
    }
    auto nonseparating = [&](const std::array<std::size_t, 4>& f) {
        std::vector<bool> gone(size, false);
        for (auto v : f) gone[v] = true;
        std::size_t start = 0;
        while (gone[start]) ++start;
        std::vector<bool> seen(size, false);
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (auto w : nb[v]) {
                if (!gone[w] && !seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached + 4 == size;
    };
    std::vector<std::array<std::size_t, 4>> faces;
    if (size == 4) {
        if (quads.size() != 1) throw fail("not a 4-cycle");
        faces = {quads[0], {quads[0][3], quads[0][2], quads[0][1], quads[0][0]}};
    } else {
        for (const auto& f : quads) {
            if (nonseparating(f)) faces.push_back(f);
        }
    }
    // Edge classes under the opposite-edge rule.
    std::vector<std::size_t> edge_id(size * size, 0);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < size; ++i) {
        for (auto j : nb[i]) {
            if (i < j) edge_id[i * size + j] = edge_id[j * size + i] = edges++;
        }
    }
    std::vector<std::size_t> parent(edges);
    std::iota(parent.begin(), parent.end(), 0);
    auto eid = [&](std::size_t x, std::size_t y) { return edge_id[x * size + y]; };
    for (const auto& f : faces) {
        for (int k = 0; k < 2; ++k) {
            const std::size_t a = find_root(parent, eid(f[static_cast<std::size_t>(k)], f[static_cast<std::size_t>(k + 1)]));
            const std::size_t b = find_root(parent, eid(f[static_cast<std::size_t>(k + 2)], f[static_cast<std::size_t>((k + 3) % 4)]));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<int> type_of_root(edges, 0);
    int types = 0;
    std::vector<Label> label(size, 0);
    std::vector<bool> seen(size, false);
    std::vector<std::size_t> order{0};
    seen[0] = true;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        const auto v = order[qi];
        for (auto w : nb[v]) {
            const std::size_t root = find_root(parent, eid(v, w));
            if (type_of_root[root] == 0) {
                if (types == n) throw fail("more edge classes than dimensions");
                type_of_root[root] = ++types;
            }
            const Label expect = flip(label[v], n, type_of_root[root]);
            if (!seen[w]) {
                seen[w] = true;
                label[w] = expect;
                order.push_back(w);
            } else if (label[w] != expect) {
                throw fail("edge classes are inconsistent with a hypercube labeling");
            }
        }
    }
    if (order.size() != size) throw fail("graph is not connected");
    std::vector<bool> used(size, false);
    for (auto l : label) {
        if (used[l]) throw fail("two vertices received the same label");
        used[l] = true;
    }
    std::vector<Face> labeled;
    for (const auto& f : faces) labeled.push_back(Face{label[f[0]], label[f[1]], label[f[2]], label[f[3]]});
    PlaneGraph g;
    try {
        g = PlaneGraph::from_faces(n, labeled);
    } catch (const VennError&) {
        throw fail("faces do not form a sphere");
    }
    return validate(std::move(g));
}

// binary

namespace {

void put16(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 255));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 255));
}

}  // namespace

std::vector<std::uint8_t> to_binary(const VennQuadrangulation& q) {
    const PlaneGraph& g = q.graph();
    std::vector<std::uint8_t> out{'V', 'Q', 'D', 'B', 1, static_cast<std::uint8_t>(q.dim()),
                                  static_cast<std::uint8_t>(q.marked ? 1 : 0)};
    for (Label x = 0; x < g.slots(); ++x) {
        put16(out, x);
        out.push_back(static_cast<std::uint8_t>(g.degree(x)));
        for (Label y : g.rotation(x)) put16(out, y);
    }
    if (q.marked) put16(out, *q.marked);
    return out;
}

VennQuadrangulation from_binary(const std::vector<std::uint8_t>& bytes, std::size_t& offset) {
    auto bad = [&](const char* what) {
        return VennError(ErrorKind::MalformedBinary, std::string(what) + " at byte " + std::to_string(offset));
    };
    auto need = [&](std::size_t k) {
        if (offset + k > bytes.size()) throw bad("truncated binary instance");
    };
    auto get16 = [&]() {
        need(2);
        const std::uint32_t v = bytes[offset] | (static_cast<std::uint32_t>(bytes[offset + 1]) << 8);
        offset += 2;
        return static_cast<Label>(v);
    };
    need(7);
    if (std::memcmp(bytes.data() + offset, "VQDB", 4) != 0) throw bad("missing VQDB magic");
    if (bytes[offset + 4] != 1) throw VennError(ErrorKind::VersionMismatch, "unsupported binary version");
    const int n = bytes[offset + 5];
    const int flagged = bytes[offset + 6];
    offset += 7;
    if (n < 2 || n > kMaxDim || flagged > 1) throw bad("bad binary header");
    PlaneGraph g(n);
    const Label size = Label{1} << n;
    for (Label k = 0; k < size; ++k) {
        const Label x = get16();
        if (x != k) throw bad("records out of label order");
        need(1);
        const int deg = bytes[offset++];
        g.add_vertex(x);
        for (int t = 0; t < deg; ++t) {
            const Label y = get16();
            if (y >= size) throw bad("neighbour label out of range");
            g.push_neighbor(x, y);
        }
    }
    std::optional<Label> marked;
    if (flagged) {
        marked = get16();
        if (*marked >= size) throw bad("marked label out of range");
    }
    return validate(std::move(g), marked);
}

VennQuadrangulation from_binary(const std::vector<std::uint8_t>& bytes) {
    std::size_t offset = 0;
    auto q = from_binary(bytes, offset);
    if (offset != bytes.size()) throw VennError(ErrorKind::MalformedBinary, "trailing bytes after instance");
    return q;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw VennError(ErrorKind::Io, "cannot open " + path);
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw VennError(ErrorKind::Io, "cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw VennError(ErrorKind::Io, "write failed for " + path);
}

std::vector<VennQuadrangulation> read_binary_file(const std::string& path) {
    const auto bytes = read_file(path);
    std::vector<VennQuadrangulation> out;
    std::size_t offset = 0;
    while (offset < bytes.size()) out.push_back(from_binary(bytes, offset));
    return out;
}

void write_binary_file(const std::string& path, const std::vector<VennQuadrangulation>& qs) {
    std::vector<std::uint8_t> bytes;
    for (const auto& q : qs) {
        const auto b = to_binary(q);
        bytes.insert(bytes.end(), b.begin(), b.end());
    }
    write_file(path, bytes);
}

// code store

void sort_unique(std::vector<CodeRecord>& records) {
    std::sort(records.begin(), records.end());
    records.erase(std::unique(records.begin(), records.end(),
                              [](const CodeRecord& a, const CodeRecord& b) { return a.code == b.code; }),
                  records.end());
}

namespace {

constexpr char kRunMagic[4] = {'V', 'Q', 'C', 'S'};

void put32(std::ostream& out, std::uint32_t v) {
    char b[4];
    for (int k = 0; k < 4; ++k) b[k] = static_cast<char>((v >> (8 * k)) & 255);
    out.write(b, 4);
}

bool get32(std::istream& in, std::uint32_t& v) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4)) return false;
    v = b[0] | (b[1] << 8) | (b[2] << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
    return true;
}

void put_record(std::ostream& out, const CodeRecord& r) {
    put32(out, static_cast<std::uint32_t>(r.code.bytes.size()));
    out.write(reinterpret_cast<const char*>(r.code.bytes.data()), static_cast<std::streamsize>(r.code.bytes.size()));
    put32(out, static_cast<std::uint32_t>(r.instance.size()));
    out.write(reinterpret_cast<const char*>(r.instance.data()), static_cast<std::streamsize>(r.instance.size()));
}

class RunReader {
public:
    explicit RunReader(const std::string& path) : in_(path, std::ios::binary), path_(path) {
        char magic[4];
        if (!in_ || !in_.read(magic, 4) || std::memcmp(magic, kRunMagic, 4) != 0) {
            throw VennError(ErrorKind::MalformedBinary, "not a code run: " + path);
        }
    }
    bool next(CodeRecord& r) {
        std::uint32_t len = 0;
        const auto at = static_cast<long long>(in_.tellg());
        if (!get32(in_, len)) return false;
        r.code.bytes.resize(len);
        std::uint32_t ilen = 0;
        if (!in_.read(reinterpret_cast<char*>(r.code.bytes.data()), len) || !get32(in_, ilen)) {
            throw VennError(ErrorKind::MalformedBinary, "truncated record at byte " + std::to_string(at) + " of " + path_);
        }
        r.instance.resize(ilen);
        if (!in_.read(reinterpret_cast<char*>(r.instance.data()), ilen)) {
            throw VennError(ErrorKind::MalformedBinary, "truncated record at byte " + std::to_string(at) + " of " + path_);
        }
        return true;
    }

private:
    std::ifstream in_;
    std::string path_;
};

}  // namespace

void write_run(const std::string& path, const std::vector<CodeRecord>& sorted) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw VennError(ErrorKind::Io, "cannot write " + path);
    out.write(kRunMagic, 4);
    for (const auto& r : sorted) put_record(out, r);
    if (!out) throw VennError(ErrorKind::Io, "write failed for " + path);
}

std::vector<CodeRecord> read_run(const std::string& path) {
    RunReader reader(path);
    std::vector<CodeRecord> out;
    CodeRecord r;
    while (reader.next(r)) out.push_back(r);
    return out;
}

std::size_t merge_runs(const std::vector<std::string>& inputs, const std::string& output) {
    std::vector<std::unique_ptr<RunReader>> readers;
    std::vector<CodeRecord> heads(inputs.size());
    using Item = std::pair<const CodeRecord*, std::size_t>;
    auto later = [](const Item& a, const Item& b) {
        if (*a.first != *b.first) return *b.first < *a.first;
        return a.second > b.second;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(later)> heap(later);
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        readers.push_back(std::make_unique<RunReader>(inputs[k]));
        if (readers[k]->next(heads[k])) heap.emplace(&heads[k], k);
    }
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    if (!out) throw VennError(ErrorKind::Io, "cannot write " + output);
    out.write(kRunMagic, 4);
    std::size_t written = 0;
    std::optional<CanonicalCode> last;
    while (!heap.empty()) {
        const auto [rec, k] = heap.top();
        heap.pop();
        if (!last || *last != rec->code) {
            put_record(out, *rec);
            last = rec->code;
            ++written;
        }
        if (readers[k]->next(heads[k])) heap.emplace(&heads[k], k);
    }
    if (!out) throw VennError(ErrorKind::Io, "write failed for " + output);
    return written;
}

}  // namespace venn
