#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "venn/analysis.hpp"
#include "venn/canon.hpp"
#include "venn/error.hpp"
#include "venn/ladder.hpp"
#include "venn/pairing.hpp"
#include "venn/pipeline.hpp"
#include "venn/primal.hpp"

namespace fs = std::filesystem;
using namespace venn;

namespace {

std::string labels(const std::vector<Label>& xs, int n) {
    std::string s;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k) s += ' ';
        s += label_to_string(xs[k], n);
    }
    return s;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::trunc);
    if (!file) throw VennError(ErrorKind::Io, "cannot write " + path);
    return file;
}

void describe(std::ostream& out, const VennQuadrangulation& q, std::size_t index) {
    const int n = q.dim();
    const auto r = analyze(q);
    out << "graph " << index << ": valid n=" << n << " V=" << q.graph().vertex_count()
        << " E=" << q.graph().edge_count() << " F=" << q.graph().faces().size() << " code=" << r.code.hex().substr(0, 16)
        << "...\n";
    out << "  reducible=" << r.reducible << " monotone_markings=" << r.monotone_markings()
        << " exposed_markings=" << r.exposed_markings() << " orbits=" << r.orbits() << '\n';
    out << "  perfect_matching=" << r.has_pm << " hamilton_cycle=" << r.has_hc << " hamilton_path=" << r.has_hp << '\n';
    if (!r.has_pm) {
        const auto h = hall_violator(q);
        out << "  hall_violator |S|=" << h.S.size() << " |N(S)|=" << h.N.size() << "\n    S: " << labels(h.S, n)
            << "\n    N: " << labels(h.N, n) << '\n';
    }
    if (auto hc = hamilton_cycle(q)) out << "  hamilton_cycle: " << labels(*hc, n) << '\n';
    else if (auto hp = hamilton_path(q)) out << "  hamilton_path: " << labels(*hp, n) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Venn quadrangulation enumeration and analysis"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI config file for flags");

    // cycles
    auto* cyc = app.add_subcommand("cycles", "enumerate canonical cycles of Q_m");
    int cyc_dim = 4, cyc_len = 0, cyc_max = 0, cyc_depth = 0;
    std::uint64_t cyc_task = 0, cyc_tasks = 1;
    std::string cyc_out;
    cyc->add_option("--dim", cyc_dim, "hypercube dimension m")->required()->check(CLI::Range(2, 6));
    cyc->add_option("--length", cyc_len, "cycle length")->required();
    cyc->add_option("--max-length", cyc_max, "upper end of a length range");
    cyc->add_option("--prefix-depth", cyc_depth, "partition depth");
    cyc->add_option("--task", cyc_task, "task index");
    cyc->add_option("--tasks", cyc_tasks, "number of tasks");
    cyc->add_option("--out", cyc_out, "output file (default stdout)");

    // fill
    auto* fil = app.add_subcommand("fill", "fill each cycle of a cycle file");
    std::string fil_in, fil_out;
    int fil_dim = 0;
    fil->add_option("--cycle-file", fil_in)->required()->check(CLI::ExistingFile);
    fil->add_option("--dim", fil_dim, "hypercube dimension m")->required()->check(CLI::Range(2, 6));
    fil->add_option("--out", fil_out, "fillings file")->required();

    // pair
    auto* par = app.add_subcommand("pair", "pair fillings sharing a boundary");
    std::string par_in, par_out;
    par->add_option("--input", par_in, "fillings file")->required()->check(CLI::ExistingFile);
    par->add_option("--out", par_out, "sorted code run")->required();

    // dedup
    auto* ded = app.add_subcommand("dedup", "merge code runs into a store");
    std::vector<std::string> ded_in;
    std::string ded_out;
    ded->add_option("--input", ded_in, "code runs")->required()->check(CLI::ExistingFile);
    ded->add_option("--out", ded_out, "store")->required();

    // census
    auto* cen = app.add_subcommand("census", "tabulate properties of a set of classes");
    std::vector<std::string> cen_in;
    std::string cen_out, cen_wit;
    cen->add_option("--input", cen_in, "store, binary or graph6 files")->required()->check(CLI::ExistingFile);
    cen->add_option("--out", cen_out, "census table (default stdout)");
    cen->add_option("--witnesses", cen_wit, "witness file");

    // extend
    auto* ext = app.add_subcommand("extend", "iterate the ladder extension on a counterexample");
    std::string ext_in, ext_out;
    int ext_steps = 1;
    std::size_t ext_index = 0;
    ext->add_option("--input", ext_in)->required()->check(CLI::ExistingFile);
    ext->add_option("--index", ext_index, "graph index in the input");
    ext->add_option("--steps", ext_steps)->check(CLI::Range(1, 10));
    ext->add_option("--out", ext_out, "output directory")->required();

    // construct-dn
    auto* cdn = app.add_subcommand("construct-dn", "build the diagram D_n or D_n*");
    int cdn_n = 4;
    bool cdn_star = false;
    std::string cdn_out;
    cdn->add_option("--n", cdn_n)->required()->check(CLI::Range(2, 12));
    cdn->add_flag("--star", cdn_star, "build D_n* instead");
    cdn->add_option("--out", cdn_out, "output file (default stdout)");

    // cross-check
    auto* xck = app.add_subcommand("cross-check", "count reducible classes by Hamilton-cycle insertion");
    int xck_n = 5;
    std::string xck_prior;
    xck->add_option("--n", xck_n)->required()->check(CLI::Range(3, 7));
    xck->add_option("--prior", xck_prior, "class store for n-1 (computed in memory if omitted and n <= 6)");

    // verify
    auto* ver = app.add_subcommand("verify", "validate and report on each graph in a file");
    std::string ver_in;
    ver->add_option("path", ver_in)->required();

    // import-faces
    auto* imp = app.add_subcommand("import-faces", "build a quadrangulation from a face list");
    std::string imp_in, imp_out;
    int imp_n = 0;
    imp->add_option("--n", imp_n)->required()->check(CLI::Range(2, 7));
    imp->add_option("--input", imp_in, "one face per line, four labels")->required()->check(CLI::ExistingFile);
    imp->add_option("--out", imp_out, "binary output")->required();

    // run
    auto* run = app.add_subcommand("run", "run pipeline stages");
    std::string run_json, run_stage = "all";
    PipelineConfig cfg;
    int run_min = 0, run_max = 0;
    run->add_option("--json", run_json, "JSON pipeline config")->check(CLI::ExistingFile);
    run->add_option("--n", cfg.n)->check(CLI::Range(3, 7));
    run->add_option("--min-length", run_min);
    run->add_option("--max-length", run_max);
    run->add_option("--workers", cfg.workers)->check(CLI::Range(1, 256));
    run->add_option("--chunk-size", cfg.chunk_size);
    run->add_option("--out-dir", cfg.out_dir, "defaults to $VENN_SCRATCH/n<n>");
    run->add_option("--stage", run_stage)->check(CLI::IsMember({"cycles", "fill", "pair", "dedup", "census", "all"}));
    run->add_flag("--force", cfg.force);
    run->add_flag("--keep-fillings", cfg.keep_fillings);
    run->add_flag("--long", cfg.long_mode, "allow n >= 6");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cyc) {
            std::ofstream f;
            auto& out = open_out(cyc_out, f);
            const auto st = enumerate_cycles(cyc_dim, cyc_len, cyc_max ? cyc_max : cyc_len,
                                             [&](const TypeSequence& s) { out << sequence_to_string(s) << '\n'; },
                                             PrefixPartition{cyc_depth, cyc_task, cyc_tasks});
            std::cerr << "cycles: " << st.emitted << '\n';
        } else if (*fil) {
            std::vector<FillGroup> groups;
            std::uint64_t k = 0, total = 0;
            for (const auto& s : read_cycles(fil_in)) {
                FillGroup g;
                g.cycle_index = k++;
                g.sequence = s;
                fill(fil_dim, realize_cycle(s, fil_dim), [&](const CQuadrangulation& q) { g.fillings.push_back(q); });
                total += g.fillings.size();
                groups.push_back(std::move(g));
            }
            write_fillings(fil_out, fil_dim, groups);
            std::cerr << "cycles: " << groups.size() << " fillings: " << total << '\n';
        } else if (*par) {
            std::uint64_t pairs = 0;
            const auto recs = pair_groups(read_fillings(par_in), &pairs);
            write_run(par_out, recs);
            std::cerr << "compatible pairs: " << pairs << " distinct codes: " << recs.size() << '\n';
        } else if (*ded) {
            std::cerr << "classes: " << merge_runs(ded_in, ded_out) << '\n';
        } else if (*cen) {
            std::vector<VennQuadrangulation> all;
            for (const auto& p : cen_in) {
                auto part = load_any(p);
                all.insert(all.end(), part.begin(), part.end());
            }
            if (all.empty()) throw VennError(ErrorKind::Io, "no graphs in input");
            const int n = all.front().dim();
            CensusCounts counts;
            std::ofstream wf;
            std::ostream* wit = nullptr;
            if (!cen_wit.empty()) wit = &open_out(cen_wit, wf);
            for (std::size_t k = 0; k < all.size(); ++k) {
                if (all[k].dim() != n) throw VennError(ErrorKind::BadLabelLength, "mixed dimensions in input");
                const auto r = analyze(all[k]);
                counts.add(r);
                if (!wit) continue;
                if (auto hc = hamilton_cycle(all[k])) *wit << k << " hamilton_cycle " << labels(*hc, n) << '\n';
                else if (auto hp = hamilton_path(all[k])) *wit << k << " hamilton_path " << labels(*hp, n) << '\n';
                if (!r.has_pm) {
                    const auto h = hall_violator(all[k]);
                    *wit << k << " hall_violator_S " << labels(h.S, n) << '\n';
                    *wit << k << " hall_violator_N " << labels(h.N, n) << '\n';
                }
            }
            std::ofstream f;
            write_census_tsv(open_out(cen_out, f), n, counts);
        } else if (*ext) {
            const auto input = load_any(ext_in);
            if (ext_index >= input.size()) throw VennError(ErrorKind::Io, "graph index out of range");
            VennQuadrangulation q = input[ext_index];
            const auto base = hall_violator(q);
            std::vector<Label> h = base.S;
            h.insert(h.end(), base.N.begin(), base.N.end());
            std::sort(h.begin(), h.end());
            fs::create_directories(ext_out);
            std::ofstream cert(fs::path(ext_out) / "certificates.txt", std::ios::trunc);
            cert << "step 0 n=" << q.dim() << " |S|=" << base.S.size() << " |N(S)|=" << base.N.size() << '\n';
            for (int t = 1; t <= ext_steps; ++t) {
                auto l = find_disjoint_ladder(q, h);
                if (!l) {
                    const auto r = find_relabeled_ladder(q, h);
                    if (!r) throw VennError(ErrorKind::NotALadder, "no ladder disjoint from the obstruction at step " + std::to_string(t));
                    cert << "relabeled by xor " << label_to_string(r->mask, q.dim()) << '\n';
                    q = r->q;
                    h = r->h;
                    l = r->ladder;
                }
                auto e = extend(q, *l, h);
                const auto v = certify_counterexample(e.q, e.h);
                if (!verify_violator(to_graph(e.q.graph()), v)) throw VennError(ErrorKind::NoViolatorFound, "certificate failed");
                const int n = e.q.dim();
                cert << "step " << t << " n=" << n << " rung_type=" << l->rung_type << " x: " << labels(l->x, n - 1)
                     << " | y: " << labels(l->y, n - 1) << " |S|=" << v.S.size() << " |N(S)|=" << v.N.size()
                     << " monotone_at_0=" << is_monotone(e.q, 0) << '\n';
                write_binary_file((fs::path(ext_out) / ("step_" + std::to_string(t) + ".vqdb")).string(), {e.q});
                q = e.q;
                h = e.h;
            }
            std::cerr << "wrote " << ext_steps << " extensions to " << ext_out << '\n';
        } else if (*cdn) {
            const auto g = cdn_star ? build_D_star(cdn_n) : build_D(cdn_n);
            std::ofstream f;
            auto& out = open_out(cdn_out, f);
            out << "# " << (cdn_star ? "D*" : "D") << " n=" << cdn_n << " vertices=" << g.vertex_count()
                << " edges=" << g.edge_count() << '\n';
            for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
                out << v << ':';
                for (int h : g.rotation(v)) out << " (" << g.half(h).curve << ',' << g.half(h).edge << ')';
                out << '\n';
            }
            out << "# region signatures by face\n";
            const auto sig = region_signatures(g);
            for (std::size_t k = 0; k < sig.size(); ++k) out << "face " << k << ' ' << label_to_string(sig[k], cdn_n) << '\n';
        } else if (*xck) {
            std::string prior = xck_prior;
            if (prior.empty()) {
                if (xck_n > 6) throw VennError(ErrorKind::MissingPriorCensus, "pass --prior for n = 7");
                const auto classes = enumerate_classes(xck_n - 1);
                std::vector<CodeRecord> recs;
                for (const auto& c : classes) recs.push_back({canonical_code(c), to_binary(c)});
                sort_unique(recs);
                prior = (fs::path(scratch_dir()) / ("classes_n" + std::to_string(xck_n - 1) + ".vqcs")).string();
                fs::create_directories(fs::path(prior).parent_path());
                write_run(prior, recs);
            }
            std::cout << "reducible classes for n=" << xck_n << ": " << cross_check_reducible(xck_n, prior) << '\n';
        } else if (*ver) {
            const auto graphs = load_any(ver_in);
            for (std::size_t k = 0; k < graphs.size(); ++k) describe(std::cout, graphs[k], k);
        } else if (*imp) {
            std::ifstream in(imp_in);
            std::vector<Face> faces;
            std::string line;
            while (std::getline(in, line)) {
                std::istringstream ls(line);
                Face f;
                std::string tok;
                while (ls >> tok) f.push_back(label_from_string(tok, imp_n));
                if (f.empty()) continue;
                if (f.size() != 4) throw VennError(ErrorKind::NonQuadFace, "face with " + std::to_string(f.size()) + " labels");
                faces.push_back(f);
            }
            const auto q = validate(PlaneGraph::from_faces(imp_n, faces), Label{0});
            write_binary_file(imp_out, {q});
            describe(std::cout, q, 0);
        } else if (*run) {
            if (!run_json.empty()) cfg = load_config(run_json, cfg);
            if (run->count("--stage")) cfg.stage = stage_from_string(run_stage);
            if (run_min) cfg.min_len = run_min;
            if (run_max) cfg.max_len = run_max;
            cfg.progress = [](const std::string& s) { std::cerr << s << '\n'; };
            const auto t0 = std::chrono::steady_clock::now();
            const auto res = run_pipeline(cfg);
            if (!res.census_path.empty()) {
                std::ifstream in(res.census_path);
                std::cout << in.rdbuf();
            }
            std::cerr << "elapsed "
                      << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
        }
    } catch (const VennError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
