#include "venn/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "venn/error.hpp"
#include "venn/pairing.hpp"

namespace fs = std::filesystem;

namespace venn {

Stage stage_from_string(const std::string& s) {
    if (s == "cycles") return Stage::Cycles;
    if (s == "fill") return Stage::Fill;
    if (s == "pair") return Stage::Pair;
    if (s == "dedup") return Stage::Dedup;
    if (s == "census") return Stage::Census;
    if (s == "all") return Stage::All;
    throw VennError(ErrorKind::StageDependency, "unknown stage " + s);
}

const char* stage_name(Stage s) {
    switch (s) {
        case Stage::Cycles: return "cycles";
        case Stage::Fill: return "fill";
        case Stage::Pair: return "pair";
        case Stage::Dedup: return "dedup";
        case Stage::Census: return "census";
        case Stage::All: return "all";
    }
    return "?";
}

PipelineConfig load_config(const std::string& path, PipelineConfig cfg) {
    std::ifstream in(path);
    if (!in) throw VennError(ErrorKind::Io, "cannot open config " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw VennError(ErrorKind::Io, std::string("bad config: ") + e.what());
    }
    if (!j.is_object()) throw VennError(ErrorKind::Io, "config must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        const auto& v = it.value();
        try {
            if (k == "n") cfg.n = v.get<int>();
            else if (k == "min_len") cfg.min_len = v.get<int>();
            else if (k == "max_len") cfg.max_len = v.get<int>();
            else if (k == "workers") cfg.workers = v.get<int>();
            else if (k == "chunk_size") cfg.chunk_size = v.get<std::size_t>();
            else if (k == "out_dir") cfg.out_dir = v.get<std::string>();
            else if (k == "stage") cfg.stage = stage_from_string(v.get<std::string>());
            else if (k == "force") cfg.force = v.get<bool>();
            else if (k == "keep_fillings") cfg.keep_fillings = v.get<bool>();
            else if (k == "long_mode") cfg.long_mode = v.get<bool>();
            else if (k == "fixtures") cfg.fixtures = v.get<std::vector<std::string>>();
            else throw VennError(ErrorKind::Io, "unknown config key " + k);
        } catch (const nlohmann::json::exception& e) {
            throw VennError(ErrorKind::Io, "bad value for config key " + k + ": " + e.what());
        }
    }
    return cfg;
}

// fillings file: "VQCQ", version 1, m, then per group:
// u64 cycle index, u8 length, types, u32 filling count, per filling u16 face count and faces (4 u16 each)

namespace {

void put(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
    for (int k = 0; k < bytes; ++k) out.push_back(static_cast<std::uint8_t>((v >> (8 * k)) & 255));
}

struct Reader {
    const std::vector<std::uint8_t>& b;
    std::size_t pos = 0;
    std::uint64_t get(int bytes) {
        if (pos + static_cast<std::size_t>(bytes) > b.size()) {
            throw VennError(ErrorKind::MalformedBinary, "truncated file at byte " + std::to_string(pos));
        }
        std::uint64_t v = 0;
        for (int k = 0; k < bytes; ++k) v |= static_cast<std::uint64_t>(b[pos++]) << (8 * k);
        return v;
    }
};

void atomic_write(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    const std::string tmp = path + ".tmp";
    write_file(tmp, bytes);
    fs::rename(tmp, path);
}

}  // namespace

void write_fillings(const std::string& path, int m, const std::vector<FillGroup>& groups) {
    std::vector<std::uint8_t> out{'V', 'Q', 'C', 'Q', 1, static_cast<std::uint8_t>(m)};
    for (const auto& g : groups) {
        put(out, g.cycle_index, 8);
        put(out, g.sequence.size(), 1);
        for (auto t : g.sequence) put(out, t, 1);
        put(out, g.fillings.size(), 4);
        for (const auto& f : g.fillings) {
            put(out, f.faces.size(), 2);
            for (const auto& q : f.faces) {
                for (Label x : q) put(out, x, 2);
            }
        }
    }
    atomic_write(path, out);
}

std::vector<FillGroup> read_fillings(const std::string& path) {
    const auto bytes = read_file(path);
    Reader r{bytes};
    if (bytes.size() < 6 || std::string(bytes.begin(), bytes.begin() + 4) != "VQCQ") {
        throw VennError(ErrorKind::MalformedBinary, "not a fillings file: " + path);
    }
    r.pos = 4;
    if (r.get(1) != 1) throw VennError(ErrorKind::VersionMismatch, "unsupported fillings version");
    const int m = static_cast<int>(r.get(1));
    std::vector<FillGroup> out;
    while (r.pos < bytes.size()) {
        FillGroup g;
        g.cycle_index = r.get(8);
        const auto len = r.get(1);
        for (std::uint64_t k = 0; k < len; ++k) g.sequence.push_back(static_cast<std::uint8_t>(r.get(1)));
        const auto boundary = realize_cycle(g.sequence, m);
        const auto count = r.get(4);
        for (std::uint64_t k = 0; k < count; ++k) {
            CQuadrangulation c;
            c.dim = m;
            c.boundary = boundary;
            const auto faces = r.get(2);
            for (std::uint64_t f = 0; f < faces; ++f) {
                Quad q;
                for (auto& x : q) x = static_cast<Label>(r.get(2));
                c.faces.push_back(q);
            }
            g.fillings.push_back(std::move(c));
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<TypeSequence> read_cycles(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw VennError(ErrorKind::Io, "cannot open " + path);
    std::vector<TypeSequence> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        out.push_back(sequence_from_string(line));
    }
    return out;
}

void write_cycles(const std::string& path, const std::vector<TypeSequence>& cycles) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw VennError(ErrorKind::Io, "cannot write " + path);
        for (const auto& c : cycles) out << sequence_to_string(c) << '\n';
        if (!out) throw VennError(ErrorKind::Io, "write failed for " + path);
    }
    fs::rename(tmp, path);
}

std::vector<CodeRecord> pair_groups(const std::vector<FillGroup>& groups, std::uint64_t* compatible_pairs) {
    std::vector<CodeRecord> records;
    std::uint64_t count = 0;
    for (const auto& g : groups) {
        std::vector<Prescreen> ps;
        ps.reserve(g.fillings.size());
        for (const auto& f : g.fillings) ps.push_back(prescreen(f));
        for (std::size_t i = 0; i < g.fillings.size(); ++i) {
            if (ps[i].discard) continue;
            for (std::size_t j = i; j < g.fillings.size(); ++j) {
                if (!prescreen_compatible(ps[i], ps[j])) continue;
                auto q = validate(glue(g.fillings[i], g.fillings[j]));
                ++count;
                records.push_back({canonical_code(q), to_binary(q)});
            }
        }
        sort_unique(records);
    }
    if (compatible_pairs) *compatible_pairs = count;
    return records;
}

namespace {

struct Paths {
    fs::path root;
    fs::path cycles() const { return root / "cycles.txt"; }
    fs::path fill(std::size_t c) const { return root / "fill" / ("chunk_" + std::to_string(c) + ".vqcq"); }
    fs::path pair(std::size_t c) const { return root / "pairs" / ("chunk_" + std::to_string(c) + ".vqcs"); }
    fs::path store() const { return root / "store.vqcs"; }
    fs::path census() const { return root / "census.tsv"; }
    fs::path witnesses() const { return root / "witnesses.txt"; }
};

bool wants(Stage selected, Stage s) { return selected == Stage::All || selected == s; }

}  // namespace

std::string scratch_dir() {
    if (const char* env = std::getenv("VENN_SCRATCH"); env && *env) return env;
    return (fs::temp_directory_path() / "venn").string();
}

PipelineResult run_pipeline(const PipelineConfig& cfg) {
    if (cfg.n < 3) throw VennError(ErrorKind::DimensionTooSmall, "the pipeline runs for n >= 3");
    if (cfg.n > 7) throw VennError(ErrorKind::DimensionTooSmall, "the pipeline supports n <= 7");
    if (cfg.n >= 6 && !cfg.long_mode) {
        throw VennError(ErrorKind::StageDependency, "n >= 6 takes days; enable long mode explicitly");
    }
    auto say = [&](const std::string& s) {
        if (cfg.progress) cfg.progress(s);
    };
    Paths p{cfg.out_dir.empty() ? fs::path(scratch_dir()) / ("n" + std::to_string(cfg.n)) : fs::path(cfg.out_dir)};
    fs::create_directories(p.root / "fill");
    fs::create_directories(p.root / "pairs");
    PipelineResult res;
    const int m = cfg.n - 1;
    LengthWindow w = length_window(cfg.n);
    if (cfg.min_len) w.min_len = *cfg.min_len;
    if (cfg.max_len) w.max_len = *cfg.max_len;

    // cycles
    if (wants(cfg.stage, Stage::Cycles) && (cfg.force || !fs::exists(p.cycles()))) {
        std::vector<TypeSequence> cycles;
        enumerate_cycles(m, w.min_len, w.max_len, [&](const TypeSequence& s) { cycles.push_back(s); });
        write_cycles(p.cycles().string(), cycles);
        say("cycles: " + std::to_string(cycles.size()));
    }
    const bool need_cycles = cfg.stage == Stage::All || cfg.stage == Stage::Fill || cfg.stage == Stage::Pair ||
                             cfg.stage == Stage::Dedup;
    if (need_cycles && !fs::exists(p.cycles())) {
        throw VennError(ErrorKind::StageDependency, "missing cycle list " + p.cycles().string());
    }
    std::vector<TypeSequence> cycles;
    if (need_cycles) cycles = read_cycles(p.cycles().string());
    res.cycles = cycles.size();
    const std::size_t chunk = std::max<std::size_t>(1, cfg.chunk_size);
    const std::size_t chunks = (cycles.size() + chunk - 1) / chunk;

    // fill and pair, one task per chunk of cycles, striped over workers
    if (wants(cfg.stage, Stage::Fill) || wants(cfg.stage, Stage::Pair)) {
        std::atomic<std::uint64_t> fillings{0};
        std::mutex log_mutex;
        std::exception_ptr failure;
        auto work = [&](int worker) {
            try {
                for (std::size_t c = static_cast<std::size_t>(worker); c < chunks; c += static_cast<std::size_t>(cfg.workers)) {
                    const auto fill_path = p.fill(c).string(), pair_path = p.pair(c).string();
                    const bool pair_done = fs::exists(pair_path) && !cfg.force;
                    std::vector<FillGroup> groups;
                    if (wants(cfg.stage, Stage::Fill) && !pair_done && (cfg.force || !fs::exists(fill_path))) {
                        for (std::size_t k = c * chunk; k < std::min(cycles.size(), (c + 1) * chunk); ++k) {
                            FillGroup g;
                            g.cycle_index = k;
                            g.sequence = cycles[k];
                            fill(m, realize_cycle(cycles[k], m), [&](const CQuadrangulation& q) { g.fillings.push_back(q); });
                            fillings += g.fillings.size();
                            groups.push_back(std::move(g));
                        }
                        write_fillings(fill_path, m, groups);
                    }
                    if (wants(cfg.stage, Stage::Pair) && !pair_done) {
                        if (groups.empty()) {
                            if (!fs::exists(fill_path)) throw VennError(ErrorKind::StageDependency, "missing " + fill_path);
                            groups = read_fillings(fill_path);
                        }
                        auto recs = pair_groups(groups);
                        write_run(pair_path + ".tmp", recs);
                        fs::rename(pair_path + ".tmp", pair_path);
                        if (!cfg.keep_fillings) fs::remove(fill_path);
                    }
                    std::lock_guard<std::mutex> lock(log_mutex);
                    say("task " + std::to_string(c + 1) + "/" + std::to_string(chunks) + " done");
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(log_mutex);
                if (!failure) failure = std::current_exception();
            }
        };
        std::vector<std::thread> threads;
        for (int t = 1; t < cfg.workers; ++t) threads.emplace_back(work, t);
        work(0);
        for (auto& t : threads) t.join();
        if (failure) std::rethrow_exception(failure);
        res.fillings = fillings;
    }

    // dedup
    if (wants(cfg.stage, Stage::Dedup) && (cfg.force || !fs::exists(p.store()))) {
        std::vector<std::string> runs;
        for (std::size_t c = 0; c < chunks; ++c) {
            if (!fs::exists(p.pair(c))) throw VennError(ErrorKind::StageDependency, "missing " + p.pair(c).string());
            runs.push_back(p.pair(c).string());
        }
        const auto tmp = p.store().string() + ".tmp";
        res.classes = merge_runs(runs, tmp);
        fs::rename(tmp, p.store());
        say("classes: " + std::to_string(res.classes));
    }
    res.store_path = p.store().string();

    // census
    if (wants(cfg.stage, Stage::Census)) {
        if (!fs::exists(p.store())) throw VennError(ErrorKind::StageDependency, "missing " + p.store().string());
        const auto classes = load_store(p.store().string());
        res.classes = classes.size();
        std::ofstream wit(p.witnesses(), std::ios::trunc);
        for (std::size_t k = 0; k < classes.size(); ++k) {
            const auto r = analyze(classes[k]);
            res.counts.add(r);
            if (!r.has_pm) {
                const auto h = hall_violator(classes[k]);
                wit << "class " << k << " hall_violator S=";
                for (auto v : h.S) wit << label_to_string(v, cfg.n) << ' ';
                wit << "N=";
                for (auto v : h.N) wit << label_to_string(v, cfg.n) << ' ';
                wit << '\n';
            }
        }
        std::ostringstream tsv;
        write_census_tsv(tsv, cfg.n, res.counts);
        const std::string text = tsv.str();
        atomic_write(p.census().string(), std::vector<std::uint8_t>(text.begin(), text.end()));
        res.census_path = p.census().string();
    }
    return res;
}

std::vector<VennQuadrangulation> load_store(const std::string& path) {
    std::vector<VennQuadrangulation> out;
    for (const auto& r : read_run(path)) out.push_back(from_binary(r.instance));
    return out;
}

std::vector<VennQuadrangulation> load_any(const std::string& path) {
    const auto bytes = read_file(path);
    if (bytes.size() >= 4 && std::string(bytes.begin(), bytes.begin() + 4) == "VQCS") return load_store(path);
    if (bytes.size() >= 4 && std::string(bytes.begin(), bytes.begin() + 4) == "VQDB") return read_binary_file(path);
    std::vector<VennQuadrangulation> out;
    std::istringstream in(std::string(bytes.begin(), bytes.end()));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(from_graph6(line));
        } catch (const VennError& e) {
            throw VennError(e.kind(), "line " + std::to_string(lineno) + ": " + e.detail());
        }
    }
    return out;
}

std::uint64_t cross_check_reducible(int n, const std::string& prior_store) {
    if (prior_store.empty() || !fs::exists(prior_store)) {
        throw VennError(ErrorKind::MissingPriorCensus, "no class store for n = " + std::to_string(n - 1));
    }
    const auto prior = load_any(prior_store);
    for (const auto& q : prior) {
        if (q.dim() != n - 1) throw VennError(ErrorKind::MissingPriorCensus, "prior store has the wrong dimension");
    }
    return extend_all_hamilton_cycles(prior).size();
}

std::vector<VennQuadrangulation> enumerate_classes(int n) {
    if (n == 2) return {two_venn()};
    if (n < 2 || n > 5) throw VennError(ErrorKind::DimensionTooSmall, "in-memory enumeration covers 2 <= n <= 5");
    const auto w = length_window(n);
    std::vector<FillGroup> groups;
    std::uint64_t k = 0;
    enumerate_cycles(w.dim, w.min_len, w.max_len, [&](const TypeSequence& s) {
        FillGroup g;
        g.cycle_index = k++;
        g.sequence = s;
        fill(w.dim, realize_cycle(s, w.dim), [&](const CQuadrangulation& q) { g.fillings.push_back(q); });
        groups.push_back(std::move(g));
    });
    std::vector<VennQuadrangulation> out;
    for (const auto& r : pair_groups(groups)) out.push_back(from_binary(r.instance));
    return out;
}

}  // namespace venn
