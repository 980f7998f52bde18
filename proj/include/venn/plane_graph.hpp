#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "venn/hypercube.hpp"

namespace venn {

using Face = std::vector<Label>;
using Edge = std::pair<Label, Label>;

// A plane subgraph of Q_dim given by a rotation system. Vertices are indexed by label;
// rotation[x] lists the neighbours of x in clockwise order. Faces are traced from the rotations:
// the dart u->w is followed by w->x where x comes after u in rotation[w].
class PlaneGraph {
public:
    PlaneGraph() = default;
    explicit PlaneGraph(int dim);

    // Builds the rotation system of the closed surface formed by the given faces (each a closed
    // walk). Faces are re-oriented coherently starting from faces[0]. Throws InvalidEmbedding if
    // the faces do not form an orientable surface with disk-like vertex links.
    static PlaneGraph from_faces(int dim, std::span<const Face> faces);

    int dim() const { return dim_; }
    std::size_t slots() const { return rotation_.size(); }

    bool present(Label x) const { return present_[x]; }
    void add_vertex(Label x);
    // Appends y to x's rotation (no symmetry maintained); used by loaders.
    void push_neighbor(Label x, Label y);

    const std::vector<Label>& rotation(Label x) const { return rotation_[x]; }
    std::vector<Label>& rotation(Label x) { return rotation_[x]; }

    std::size_t vertex_count() const;
    std::size_t edge_count() const;
    int degree(Label x) const { return static_cast<int>(rotation_[x].size()); }
    bool has_edge(Label x, Label y) const;
    std::vector<Label> vertices() const;
    std::vector<Edge> edges() const;  // each undirected edge once, (min, max)

    // Neighbour following `from` in clockwise order around x.
    Label cw_next(Label x, Label from) const;

    std::vector<Face> faces() const;
    Face face_of_dart(Label u, Label w) const;

    // Outer face designation by a dart lying on it (the face traced from that dart).
    std::optional<Edge> outer_dart;

    PlaneGraph mirrored() const;
    PlaneGraph relabeled(const CubeAutomorphism& a) const;

    bool operator==(const PlaneGraph& o) const = default;

private:
    int dim_ = 0;
    std::vector<std::vector<Label>> rotation_;
    std::vector<bool> present_;
};

// Adjacency bit masks by edge type: bit (k-1) of mask[x] is set iff x ~ x with position k flipped.
std::vector<std::uint32_t> type_masks(const PlaneGraph& g);

}  // namespace venn
