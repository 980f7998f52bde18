#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "venn/matching.hpp"
#include "venn/quadrangulation.hpp"

namespace venn {

// Rails x_1..x_n from 0^n and y_1..y_n to 1^n; (x_i, y_i) are edges of type rung_type.
struct Ladder {
    std::vector<Label> x;
    std::vector<Label> y;
    EdgeType rung_type = 0;

    std::vector<Label> vertices() const;
    bool operator==(const Ladder&) const = default;
};

// Empty string if L is a ladder of q, else the reason.
std::string ladder_problem(const VennQuadrangulation& q, const Ladder& l);

// All ladders, by rung type ascending and then label-ascending rail choices. The sink returns
// false to stop early.
void find_ladders(const VennQuadrangulation& q, const std::function<bool(const Ladder&)>& sink);
std::vector<Ladder> find_ladders(const VennQuadrangulation& q);

// First ladder avoiding the given vertices, if any.
std::optional<Ladder> find_disjoint_ladder(const VennQuadrangulation& q, const std::vector<Label>& avoid);

// Smallest XOR mask m such that q relabeled by m has a ladder avoiding h relabeled by m.
struct RelabeledLadder {
    Label mask = 0;
    VennQuadrangulation q;
    std::vector<Label> h;
    Ladder ladder;
};
std::optional<RelabeledLadder> find_relabeled_ladder(const VennQuadrangulation& q, const std::vector<Label>& h);

struct LadderExtension {
    VennQuadrangulation q;
    Ladder ladder;
    std::vector<Label> h;  // the copy H0
};

// Doubles q along the ladder; H is a vertex set disjoint from the ladder. Errors: NotALadder,
// NotDisjoint.
LadderExtension extend(const VennQuadrangulation& q, const Ladder& l, const std::vector<Label>& h);

// Hall violator whose set S consists of vertices of H all of whose neighbours lie in H.
// Throws NoViolatorFound.
HallViolator certify_counterexample(const VennQuadrangulation& q, const std::vector<Label>& h);

}  // namespace venn
