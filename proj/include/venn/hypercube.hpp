#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace venn {

// Vertex labels are bit strings of length n <= 16 stored in one word.
// Position 1 is the leftmost written character, i.e. the most significant bit.
using Label = std::uint32_t;

inline constexpr int kMaxDim = 16;

// Edge type: the 1-based position in which the two endpoint labels differ.
using EdgeType = int;

// Edge types of a closed walk starting at 0^m; values are 1-based positions.
using TypeSequence = std::vector<std::uint8_t>;

inline constexpr Label position_mask(int n, int k) { return Label{1} << (n - k); }

inline constexpr Label flip(Label x, int n, int k) { return x ^ position_mask(n, k); }

inline constexpr int bit_at(Label x, int n, int k) { return static_cast<int>((x >> (n - k)) & 1U); }

inline constexpr Label all_ones(int n) { return (Label{1} << n) - 1; }

int weight(Label x);

std::string label_to_string(Label x, int n);

// Throws BadLabelLength if the text is not a 0/1 string of length n (n == -1 accepts any length <= 16).
Label label_from_string(std::string_view text, int n = -1);

// Type of the hypercube edge {x, y}; throws NotHypercubeEdge unless x, y differ in exactly one position.
EdgeType edge_type(Label x, Label y, int n);

struct Relabeling {
    TypeSequence sequence;
    // permutation[old] = new for old in 1..max_type; index 0 unused.
    std::vector<int> permutation;
};

// Renames types in order of first appearance.
Relabeling lexmin_relabel(const TypeSequence& tau);

// True iff walking from 0 along tau visits pairwise distinct vertices and returns to 0.
bool encodes_simple_cycle(const TypeSequence& tau);

// True iff tau is the lexicographically least relabeling over all cyclic shifts and reversals.
// Returns false for sequences that do not encode a simple cycle; throws NotLexMin if tau is
// not already in first-appearance form.
bool is_canonical_cycle(const TypeSequence& tau);

// The canonical representative of the orbit of tau (relabeling, shifts and reversals).
TypeSequence canonical_form(const TypeSequence& tau);

// Vertices visited by the walk, starting with 0.
std::vector<Label> realize_cycle(const TypeSequence& tau, int m);

std::string sequence_to_string(const TypeSequence& tau);
TypeSequence sequence_from_string(std::string_view text);

// Hypercube automorphism: x -> permute positions, then XOR with mask.
struct CubeAutomorphism {
    int n = 0;
    std::array<std::uint8_t, kMaxDim + 1> image{};  // position k moves to image[k]
    Label mask = 0;

    static CubeAutomorphism identity(int n);
    Label apply(Label x) const;
};

}  // namespace venn
