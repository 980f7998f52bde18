#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "venn/quadrangulation.hpp"

namespace venn {

// Byte string identifying the isomorphism class of the underlying abstract graph.
struct CanonicalCode {
    std::vector<std::uint8_t> bytes;
    auto operator<=>(const CanonicalCode&) const = default;
    bool operator==(const CanonicalCode&) const = default;
    std::string hex() const;
};

// Result of the canonical search: the code, the canonical numbering and the automorphism orbits.
struct CanonicalForm {
    CanonicalCode code;
    std::vector<Label> order;                // order[k] = label numbered k (0-based)
    std::vector<std::vector<Label>> orbits;  // each sorted, orbits ordered by smallest label
    std::size_t automorphisms = 0;
};

// BFS codes from every dart in both orientations, minimum taken. Valid as an abstract-graph
// invariant for 3-connected plane graphs and for cycles.
CanonicalForm canonical_form(const PlaneGraph& g);
CanonicalCode canonical_code(const PlaneGraph& g);
CanonicalCode canonical_code(const VennQuadrangulation& q);
std::vector<std::vector<Label>> vertex_orbits(const VennQuadrangulation& q);

// graph6 of the canonically numbered graph (no trailing newline).
std::string to_graph6(const VennQuadrangulation& q);
std::string to_graph6_adjacency(const std::vector<std::vector<bool>>& adj);
std::vector<std::vector<bool>> parse_graph6(std::string_view text);
// Re-derives labels from the face structure; the first graph6 vertex becomes 0^n.
VennQuadrangulation from_graph6(std::string_view text);

std::vector<std::uint8_t> to_binary(const VennQuadrangulation& q);
// Reads one instance starting at `offset`, advancing it.
VennQuadrangulation from_binary(const std::vector<std::uint8_t>& bytes, std::size_t& offset);
VennQuadrangulation from_binary(const std::vector<std::uint8_t>& bytes);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);
// All instances concatenated in one binary file.
std::vector<VennQuadrangulation> read_binary_file(const std::string& path);
void write_binary_file(const std::string& path, const std::vector<VennQuadrangulation>& qs);

// Code store: records (code, representative instance) sorted by code, unique codes.
struct CodeRecord {
    CanonicalCode code;
    std::vector<std::uint8_t> instance;  // binary form of one representative
    auto operator<=>(const CodeRecord&) const = default;
};

// Sorts and keeps, per code, the smallest representative.
void sort_unique(std::vector<CodeRecord>& records);
void write_run(const std::string& path, const std::vector<CodeRecord>& sorted);
std::vector<CodeRecord> read_run(const std::string& path);
// Streaming k-way merge of sorted runs into one sorted unique run; returns the record count.
std::size_t merge_runs(const std::vector<std::string>& inputs, const std::string& output);

}  // namespace venn
