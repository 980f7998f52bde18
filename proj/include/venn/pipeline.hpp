#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "venn/analysis.hpp"
#include "venn/canon.hpp"
#include "venn/cquad_fill.hpp"
#include "venn/cycle_enum.hpp"

namespace venn {

enum class Stage { Cycles, Fill, Pair, Dedup, Census, All };

Stage stage_from_string(const std::string& s);
const char* stage_name(Stage s);

struct PipelineConfig {
    int n = 5;
    std::optional<int> min_len;  // length window override
    std::optional<int> max_len;
    int workers = 1;
    std::size_t chunk_size = 256;  // cycles per task
    std::string out_dir;
    Stage stage = Stage::All;
    bool force = false;
    bool keep_fillings = false;
    bool long_mode = false;  // required for n >= 6
    std::vector<std::string> fixtures;
    std::function<void(const std::string&)> progress;
};

// Reads a JSON object with the keys n, min_len, max_len, workers, chunk_size, out_dir, stage,
// force, keep_fillings, long_mode, fixtures. Unknown keys are rejected.
PipelineConfig load_config(const std::string& path, PipelineConfig base = {});

// Fillings of one boundary cycle.
struct FillGroup {
    std::uint64_t cycle_index = 0;
    TypeSequence sequence;
    std::vector<CQuadrangulation> fillings;
};

void write_fillings(const std::string& path, int m, const std::vector<FillGroup>& groups);
std::vector<FillGroup> read_fillings(const std::string& path);

std::vector<TypeSequence> read_cycles(const std::string& path);
void write_cycles(const std::string& path, const std::vector<TypeSequence>& cycles);

// Glue all compatible pairs of each group; returns the sorted unique code records.
std::vector<CodeRecord> pair_groups(const std::vector<FillGroup>& groups, std::uint64_t* compatible_pairs = nullptr);

struct PipelineResult {
    CensusCounts counts;
    std::uint64_t cycles = 0;
    std::uint64_t fillings = 0;
    std::uint64_t classes = 0;
    std::string store_path;
    std::string census_path;
};

// Steps: cycle list, fill and pair per chunk of cycles, merge of the per-chunk runs, census.
// Each stage is skipped when its output exists (unless force). Errors: StageDependency, Io.
PipelineResult run_pipeline(const PipelineConfig& cfg);

// Classes stored in a code store (sorted unique run).
std::vector<VennQuadrangulation> load_store(const std::string& path);

// Reads a file of instances: code store, binary or graph6 (detected from the content).
std::vector<VennQuadrangulation> load_any(const std::string& path);

// Hamilton-cycle insertion into the (n-1)-classes of `prior_store`; returns the number of
// distinct n-classes obtained. Throws MissingPriorCensus if the store is absent.
std::uint64_t cross_check_reducible(int n, const std::string& prior_store);

// Classes for small n computed in memory (n <= 5), sorted by code.
std::vector<VennQuadrangulation> enumerate_classes(int n);

// Scratch directory from VENN_SCRATCH, else the system temp directory.
std::string scratch_dir();

}  // namespace venn
