#pragma once

#include <optional>
#include <vector>

#include "venn/plane_graph.hpp"

namespace venn {

// A plane quadrangulation in Q_n satisfying the Venn conditions: spanning and connected, all faces
// (including the outer one) are 4-cycles, and every half-space {x : x_i = b} induces a connected
// subgraph. Construct through validate().
class VennQuadrangulation {
public:
    const PlaneGraph& graph() const { return graph_; }
    int dim() const { return graph_.dim(); }
    std::optional<Label> marked;

    // Copy relabeled by XOR with `outer` so that the marked region becomes 0^n.
    VennQuadrangulation marked_at(Label outer) const;
    VennQuadrangulation relabeled(const CubeAutomorphism& a) const;
    VennQuadrangulation mirrored() const;

private:
    friend VennQuadrangulation validate(PlaneGraph g, std::optional<Label> marked);
    friend VennQuadrangulation assume_valid(PlaneGraph g);
    PlaneGraph graph_;
};

// Checks spanning/connectivity, quadrilateral faces, half-space connectivity and the Euler counts.
// Errors: BadLabelLength, NotHypercubeEdge, MultiEdge, InvalidEmbedding, NotSpanning, NotConnected,
// NonQuadFace, HalfspaceDisconnected.
VennQuadrangulation validate(PlaneGraph g, std::optional<Label> marked = std::nullopt);

// Skips validation; for trusted internal producers whose output is validated by tests.
VennQuadrangulation assume_valid(PlaneGraph g);

// Condition on half-spaces alone (no face checks). Returns the first failing (i, b) if any.
std::optional<std::pair<int, int>> halfspace_violation(const PlaneGraph& g);

bool is_monotone(const VennQuadrangulation& q, Label marking);
bool is_exposed(const VennQuadrangulation& q, Label marking);

// Some type i whose matching M_i is perfect (|M_i| = 2^{n-1}), else nullopt.
std::optional<EdgeType> is_reducible(const VennQuadrangulation& q);

std::vector<Edge> type_matching(const VennQuadrangulation& q, EdgeType i);
std::vector<std::size_t> matching_sizes(const VennQuadrangulation& q);  // index 1..n

// Contracts the perfect type-i matching and drops position i.
PlaneGraph contract_type(const VennQuadrangulation& q, EdgeType i);

// True iff every 4-cycle of the graph is the boundary of a face.
bool every_four_cycle_is_face(const PlaneGraph& g);

// For every face: edges of exactly two types with opposite edges equal.
bool faces_have_opposite_types(const PlaneGraph& g);

// Hard-coded bases: the 4-cycle (n = 2) and the cube (n = 3).
VennQuadrangulation two_venn();
VennQuadrangulation cube_venn();

}  // namespace venn
