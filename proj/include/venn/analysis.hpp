#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "venn/canon.hpp"
#include "venn/hamilton.hpp"
#include "venn/matching.hpp"
#include "venn/quadrangulation.hpp"

namespace venn {

// Vertices are labels.
Graph to_graph(const PlaneGraph& g);

Matching max_matching(const VennQuadrangulation& q);
bool has_perfect_matching(const VennQuadrangulation& q);
HallViolator hall_violator(const VennQuadrangulation& q);
std::optional<VertexSequence> hamilton_cycle(const VennQuadrangulation& q);
std::optional<VertexSequence> hamilton_path(const VennQuadrangulation& q);

// Adds curve n+1 along the Hamilton cycle hc. Vertices x0 lie outside the new curve and x1 inside;
// `flip_sides` exchanges which side of hc is called inside. Throws NotHamiltonian.
VennQuadrangulation extend_by_hamilton_cycle(const VennQuadrangulation& q, const VertexSequence& hc,
                                             bool flip_sides = false);

struct MarkingInfo {
    Label representative = 0;
    std::size_t orbit_size = 0;
    bool monotone = false;
    bool exposed = false;
};

struct CensusRecord {
    CanonicalCode code;
    bool has_pm = false;
    bool has_hc = false;
    bool has_hp = false;
    bool reducible = false;
    std::vector<MarkingInfo> markings;  // one per vertex orbit

    std::size_t orbits() const { return markings.size(); }
    std::size_t monotone_markings() const;
    std::size_t exposed_markings() const;
};

CensusRecord analyze(const VennQuadrangulation& q);

// The rows of the census table, unmarked and marked.
struct CensusCounts {
    std::uint64_t all = 0, all_marked = 0;
    std::uint64_t monotone = 0, monotone_marked = 0;
    std::uint64_t exposed = 0, exposed_marked = 0;
    std::uint64_t reducible = 0, reducible_marked = 0;
    std::uint64_t no_hc = 0, no_hc_marked = 0;
    std::uint64_t no_hp = 0, no_hp_marked = 0;
    std::uint64_t no_pm = 0, no_pm_marked = 0;

    void add(const CensusRecord& r);
    void merge(const CensusCounts& o);
    bool operator==(const CensusCounts&) const = default;
};

CensusCounts census(const std::vector<VennQuadrangulation>& classes);

// Tab-separated table with one row per property: name, unmarked, marked.
void write_census_tsv(std::ostream& out, int n, const CensusCounts& c);

// Inserts a curve along every Hamilton cycle (both sides) of every given class and returns the
// distinct classes obtained, which are the reducible (n+1)-Venn quadrangulations.
std::vector<VennQuadrangulation> extend_all_hamilton_cycles(const std::vector<VennQuadrangulation>& classes,
                                                            std::uint64_t* cycles_seen = nullptr);

}  // namespace venn
