#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "venn/canon.hpp"
#include "venn/error.hpp"
#include "venn/pipeline.hpp"

namespace fs = std::filesystem;
using namespace venn;

namespace {
fs::path fresh(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "venn_test_pipeline" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::vector<std::uint8_t> bytes(const fs::path& p) { return read_file(p.string()); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const VennError& e) {
        return e.kind();
    }
    return ErrorKind::Io;
}
}  // namespace

TEST_CASE("worker count does not change the artifacts") {
    PipelineConfig a;
    a.n = 5;
    a.chunk_size = 7;
    a.out_dir = fresh("w1").string();
    PipelineConfig b = a;
    b.workers = 4;
    b.out_dir = fresh("w4").string();
    const auto ra = run_pipeline(a);
    const auto rb = run_pipeline(b);
    CHECK(ra.classes == 20);
    CHECK(ra.counts == rb.counts);
    CHECK(bytes(ra.store_path) == bytes(rb.store_path));
    CHECK(bytes(ra.census_path) == bytes(rb.census_path));
    CHECK(ra.counts.all_marked == 320);
}

TEST_CASE("stages run one at a time give the same store, and reruns are no-ops") {
    PipelineConfig all;
    all.n = 5;
    all.out_dir = fresh("all").string();
    const auto ref = run_pipeline(all);
    PipelineConfig step = all;
    step.out_dir = fresh("steps").string();
    step.keep_fillings = true;
    for (Stage s : {Stage::Cycles, Stage::Fill, Stage::Pair, Stage::Dedup, Stage::Census}) {
        step.stage = s;
        run_pipeline(step);
    }
    CHECK(bytes(ref.store_path) == bytes(fs::path(step.out_dir) / "store.vqcs"));
    CHECK(bytes(ref.census_path) == bytes(fs::path(step.out_dir) / "census.tsv"));
    CHECK(fs::exists(fs::path(step.out_dir) / "fill" / "chunk_0.vqcq"));
    // a completed store is not rebuilt without force
    const auto stamp = fs::last_write_time(ref.store_path);
    all.stage = Stage::Dedup;
    run_pipeline(all);
    CHECK(fs::last_write_time(ref.store_path) == stamp);
}

TEST_CASE("an interrupted pair stage resumes") {
    PipelineConfig cfg;
    cfg.n = 5;
    cfg.chunk_size = 10;
    cfg.out_dir = fresh("resume").string();
    const auto ref = run_pipeline(cfg);
    const auto ref_store = bytes(ref.store_path);
    // lose some task outputs and the merged store, then rerun everything
    fs::remove(fs::path(cfg.out_dir) / "pairs" / "chunk_1.vqcs");
    fs::remove(fs::path(cfg.out_dir) / "pairs" / "chunk_3.vqcs");
    fs::remove(ref.store_path);
    std::ofstream(fs::path(cfg.out_dir) / "pairs" / "chunk_2.vqcs.tmp") << "partial";
    const auto again = run_pipeline(cfg);
    CHECK(bytes(again.store_path) == ref_store);
}

TEST_CASE("missing inputs are stage dependency errors") {
    PipelineConfig cfg;
    cfg.n = 4;
    cfg.out_dir = fresh("deps").string();
    cfg.stage = Stage::Fill;
    CHECK(kind_of([&] { run_pipeline(cfg); }) == ErrorKind::StageDependency);
    cfg.stage = Stage::Census;
    CHECK(kind_of([&] { run_pipeline(cfg); }) == ErrorKind::StageDependency);
    cfg.stage = Stage::All;
    cfg.n = 6;
    CHECK(kind_of([&] { run_pipeline(cfg); }) == ErrorKind::StageDependency);
    cfg.n = 2;
    CHECK(kind_of([&] { run_pipeline(cfg); }) == ErrorKind::DimensionTooSmall);
}

TEST_CASE("config files") {
    const auto dir = fresh("config");
    const auto path = (dir / "c.json").string();
    std::ofstream(path) << R"({"n": 4, "workers": 3, "stage": "dedup", "min_len": 8, "keep_fillings": true})";
    const auto cfg = load_config(path);
    CHECK(cfg.n == 4);
    CHECK(cfg.workers == 3);
    CHECK(cfg.stage == Stage::Dedup);
    CHECK(cfg.min_len == 8);
    CHECK(cfg.keep_fillings);
    std::ofstream(path) << R"({"n": 4, "colour": "blue"})";
    CHECK_THROWS_AS(load_config(path), VennError);
    std::ofstream(path) << R"({"n": "four"})";
    CHECK_THROWS_AS(load_config(path), VennError);
    CHECK(stage_from_string(stage_name(Stage::Pair)) == Stage::Pair);
    CHECK_THROWS_AS(stage_from_string("everything"), VennError);
}

TEST_CASE("fillings and cycle files round trip") {
    const auto dir = fresh("files");
    std::vector<FillGroup> groups;
    std::uint64_t k = 0;
    enumerate_cycles(4, 12, 16, [&](const TypeSequence& s) {
        FillGroup g;
        g.cycle_index = k++;
        g.sequence = s;
        fill(4, realize_cycle(s, 4), [&](const CQuadrangulation& c) { g.fillings.push_back(c); });
        groups.push_back(std::move(g));
    });
    write_fillings((dir / "f.vqcq").string(), 4, groups);
    const auto back = read_fillings((dir / "f.vqcq").string());
    REQUIRE(back.size() == groups.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].sequence == groups[i].sequence);
        REQUIRE(back[i].fillings.size() == groups[i].fillings.size());
        for (std::size_t j = 0; j < back[i].fillings.size(); ++j) {
            CHECK(back[i].fillings[j].faces == groups[i].fillings[j].faces);
            CHECK(back[i].fillings[j].boundary == groups[i].fillings[j].boundary);
        }
    }
    std::vector<TypeSequence> cycles;
    for (const auto& g : groups) cycles.push_back(g.sequence);
    write_cycles((dir / "c.txt").string(), cycles);
    CHECK(read_cycles((dir / "c.txt").string()) == cycles);
    auto raw = bytes(dir / "f.vqcq");
    raw.resize(raw.size() / 2);
    write_file((dir / "g.vqcq").string(), raw);
    CHECK(kind_of([&] { read_fillings((dir / "g.vqcq").string()); }) == ErrorKind::MalformedBinary);
}

TEST_CASE("loading class files of every format") {
    const auto dir = fresh("load");
    const auto classes = enumerate_classes(5);
    write_binary_file((dir / "a.vqdb").string(), classes);
    {
        std::ofstream g6(dir / "a.g6");
        for (const auto& q : classes) g6 << to_graph6(q) << '\n';
    }
    const auto a = load_any((dir / "a.vqdb").string());
    const auto b = load_any((dir / "a.g6").string());
    REQUIRE(a.size() == 20);
    REQUIRE(b.size() == 20);
    for (std::size_t k = 0; k < 20; ++k) CHECK(canonical_code(a[k]) == canonical_code(b[k]));
    std::ofstream(dir / "bad.g6") << to_graph6(classes[0]) << "\nS~~~\n";
    try {
        load_any((dir / "bad.g6").string());
        FAIL("accepted a mangled line");
    } catch (const VennError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
}

TEST_CASE("reducible cross-check") {
    const auto dir = fresh("cross");
    CHECK(kind_of([&] { cross_check_reducible(5, (dir / "none.vqcs").string()); }) == ErrorKind::MissingPriorCensus);
    write_binary_file((dir / "four.vqdb").string(), enumerate_classes(4));
    CHECK(cross_check_reducible(5, (dir / "four.vqdb").string()) == 11);
    write_binary_file((dir / "three.vqdb").string(), {cube_venn()});
    CHECK(cross_check_reducible(4, (dir / "three.vqdb").string()) == 1);
    CHECK(kind_of([&] { cross_check_reducible(6, (dir / "three.vqdb").string()); }) == ErrorKind::MissingPriorCensus);
}
