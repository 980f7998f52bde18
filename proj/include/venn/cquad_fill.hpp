#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <functional>
#include <vector>

#include "venn/plane_graph.hpp"

namespace venn {

using Quad = std::array<Label, 4>;

// A spanning plane subgraph of Q_m whose inner faces are 4-cycles and whose outer face is bounded
// by the cycle `boundary`. Boundary and faces are listed counter-clockwise (interior on the left).
struct CQuadrangulation {
    int dim = 0;
    std::vector<Label> boundary;
    std::vector<Quad> faces;

    std::size_t edge_count() const { return 2 * faces.size() + boundary.size() / 2; }
    // Rotation system of the disk, outer face included (traced from dart boundary[1] -> boundary[0]).
    PlaneGraph graph() const;
    std::vector<std::uint32_t> adjacency() const;  // same layout as type_masks()
};

enum class FaceClass { Eligible, Ignored, Excluded };

// Partial C-quadrangulation during the fill: the placed part P, the boundary walk B of the face
// still to be filled (oriented with the hole on the left), and the squares barred on this branch.
class FillState {
public:
    static constexpr int kMaxDim = 6;

    FillState(int m, const std::vector<Label>& cycle);

    int dim() const { return m_; }
    bool placed(Label x) const { return (placed_ >> x) & 1U; }
    bool on_hole(Label x) const { return (on_hole_ >> x) & 1U; }
    std::size_t hole_length() const { return hole_len_; }
    Label hole_next(Label x) const { return next_[x]; }
    Label hole_prev(Label x) const { return prev_[x]; }
    std::vector<Label> hole() const;  // starting at the smallest label on B
    const std::vector<Quad>& faces() const { return faces_; }
    bool has_edge(Label x, Label y) const { return (adj_[x] >> y) & 1U; }
    bool complete() const { return hole_len_ == 0; }
    std::uint64_t placed_mask() const { return placed_; }
    std::uint64_t hole_mask() const { return on_hole_; }

    // Square through boundary edge a->b (b = hole_next(a)) and the other edge type j.
    std::size_t square_id(Label a, Label b, int j) const;
    bool excluded(Label a, Label b, int j) const { return excluded_[square_id(a, b, j)]; }
    void set_excluded(Label a, Label b, int j, bool value) { excluded_[square_id(a, b, j)] = value; }

    FaceClass classify(Label a, Label b, int j) const;

    struct Undo {
        Label a, b, u, v;
        std::uint8_t kind;
    };
    // Adds the square (a, b, b^j, a^j) as a face inside the hole. Requires classify(...) == Eligible.
    Undo include(Label a, Label b, int j);
    void undo(const Undo& u);

    CQuadrangulation snapshot(const std::vector<Label>& boundary) const;

private:
    Label bit(int t) const { return Label{1} << (m_ - t); }
    bool wrong_order(Label b, Label u, Label v) const;

    int m_;
    std::uint64_t placed_ = 0;
    std::uint64_t on_hole_ = 0;
    std::size_t hole_len_ = 0;
    std::array<Label, 64> next_{};
    std::array<Label, 64> prev_{};
    std::array<std::uint64_t, 64> adj_{};
    std::vector<Quad> faces_;
    std::bitset<64 * 64> excluded_;
};

FaceClass classify_face(const FillState& state, Label a, Label b, int j);

// True iff some boundary edge of the hole has every square through it excluded.
bool detect_dead_end(const FillState& state);

struct FillStats {
    std::uint64_t nodes = 0;
    std::uint64_t emitted = 0;
};

using FillSink = std::function<void(const CQuadrangulation&)>;

// Enumerates all C-quadrangulations of Q_m with boundary `cycle` (given counter-clockwise), each
// exactly once, in a deterministic order.
FillStats fill(int m, const std::vector<Label>& cycle, const FillSink& sink);

}  // namespace venn
