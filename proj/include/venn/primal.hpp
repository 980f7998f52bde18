#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "venn/hamilton.hpp"
#include "venn/hypercube.hpp"
#include "venn/matching.hpp"

namespace venn {

// One point of a wire diagram: at heights lo..hi, one strand passes through all the others,
// which meet there without crossing each other. Upward: the strand at lo ends at hi; downward:
// the strand at hi ends at lo.
struct SweepEvent {
    int lo = 1;
    int hi = 2;
    bool upward = true;
    bool operator==(const SweepEvent&) const = default;
};

struct WireDiagram {
    int n = 0;  // wires at heights 1..n; curve c starts and ends at height c
    std::vector<SweepEvent> events;

    // Curves at heights 1..n after all events (index 0 unused).
    std::vector<int> final_order() const;
    // Left-right mirror image.
    WireDiagram mirrored() const;
};

// Crossings with clockwise rotations of half-edge ends; each edge is a curve segment.
class EmbeddedMultigraph {
public:
    struct HalfEdge {
        int vertex = 0;
        int curve = 0;
        int edge = 0;
        int twin = 0;  // other end of the same edge
    };

    int curves() const { return curves_; }
    std::size_t vertex_count() const { return rotation_.size(); }
    std::size_t edge_count() const { return half_.size() / 2; }
    const std::vector<int>& rotation(int v) const { return rotation_[static_cast<std::size_t>(v)]; }
    const HalfEdge& half(int h) const { return half_[static_cast<std::size_t>(h)]; }
    int degree(int v) const { return static_cast<int>(rotation_[static_cast<std::size_t>(v)].size()); }
    // Curve ids around v, clockwise.
    std::vector<int> curve_word(int v) const;

    // Faces as lists of half-edges h, each traversed from half(h).vertex along its edge.
    std::vector<std::vector<int>> faces() const;
    int outer_face() const { return outer_face_; }

    // Simple graph on the crossings (parallel edges merged, loops dropped).
    Graph simple_graph() const;
    // Number of edges joining u and v.
    int multiplicity(int u, int v) const;

    static EmbeddedMultigraph from_wires(const WireDiagram& d);
    // Throws InconsistentSignature if curve walks or face tracing are broken.
    void check() const;

private:
    int curves_ = 0;
    std::vector<std::vector<int>> rotation_;
    std::vector<HalfEdge> half_;
    int outer_face_ = 0;
};

// Face index -> signature, curve c being position c of the label; the outer face gets 0^n.
// Throws InconsistentSignature.
std::vector<Label> region_signatures(const EmbeddedMultigraph& g);
bool is_venn(const EmbeddedMultigraph& g);
// Every region with 0 < k < n curves containing it touches a (k-1)- and a (k+1)-region.
bool is_monotone_diagram(const EmbeddedMultigraph& g);

WireDiagram wires_D(int n);
WireDiagram wires_D_star(int n);
EmbeddedMultigraph build_D(int n);
EmbeddedMultigraph build_D_star(int n);

// Vertices of degree 4; throws NotIndependent if two of them are adjacent.
std::vector<int> independent_set_of_degree4(const EmbeddedMultigraph& g);

struct MatchingRefutation {
    std::vector<int> independent;  // U
    std::vector<int> rest;         // complement of U
};
// Throws NotIndependent, or HasPerfectMatching if |U| <= |rest|.
MatchingRefutation refute_matching(const EmbeddedMultigraph& g);

Matching primal_max_matching(const EmbeddedMultigraph& g);
// Hamilton cycle on the crossings; with two vertices it needs two parallel edges.
std::optional<VertexSequence> primal_hamilton_cycle(const EmbeddedMultigraph& g);

// Equality of cyclic words up to rotation and reversal.
bool same_cyclic_word(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace venn
