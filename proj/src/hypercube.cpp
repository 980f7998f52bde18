#include "venn/hypercube.hpp"

#include <algorithm>
#include <bit>

#include "venn/error.hpp"

namespace venn {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotHypercubeEdge: return "NotHypercubeEdge";
        case ErrorKind::NotLexMin: return "NotLexMin";
        case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorKind::BadLabelLength: return "BadLabelLength";
        case ErrorKind::NotSpanning: return "NotSpanning";
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::NonQuadFace: return "NonQuadFace";
        case ErrorKind::HalfspaceDisconnected: return "HalfspaceDisconnected";
        case ErrorKind::MultiEdge: return "MultiEdge";
        case ErrorKind::InvalidEmbedding: return "InvalidEmbedding";
        case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
        case ErrorKind::MalformedGraph6: return "MalformedGraph6";
        case ErrorKind::LabelRecoveryFailed: return "LabelRecoveryFailed";
        case ErrorKind::MalformedBinary: return "MalformedBinary";
        case ErrorKind::VersionMismatch: return "VersionMismatch";
        case ErrorKind::NotBipartite: return "NotBipartite";
        case ErrorKind::HasPerfectMatching: return "HasPerfectMatching";
        case ErrorKind::NotHamiltonian: return "NotHamiltonian";
        case ErrorKind::NotALadder: return "NotALadder";
        case ErrorKind::NotDisjoint: return "NotDisjoint";
        case ErrorKind::NoViolatorFound: return "NoViolatorFound";
        case ErrorKind::InconsistentSignature: return "InconsistentSignature";
        case ErrorKind::NotIndependent: return "NotIndependent";
        case ErrorKind::MissingPriorCensus: return "MissingPriorCensus";
        case ErrorKind::StageDependency: return "StageDependency";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

int weight(Label x) { return std::popcount(x); }

std::string label_to_string(Label x, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int k = 1; k <= n; ++k) {
        if (bit_at(x, n, k)) s[static_cast<std::size_t>(k - 1)] = '1';
    }
    return s;
}

Label label_from_string(std::string_view text, int n) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxDim) ||
        (n >= 0 && text.size() != static_cast<std::size_t>(n))) {
        throw VennError(ErrorKind::BadLabelLength, "label '" + std::string(text) + "'");
    }
    Label x = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw VennError(ErrorKind::BadLabelLength, "label '" + std::string(text) + "' is not a bit string");
        }
        x = (x << 1) | static_cast<Label>(c - '0');
    }
    return x;
}

EdgeType edge_type(Label x, Label y, int n) {
    const Label d = x ^ y;
    if (std::popcount(d) != 1 || d > all_ones(n)) {
        throw VennError(ErrorKind::NotHypercubeEdge,
                        label_to_string(x, n) + " and " + label_to_string(y, n) + " are not adjacent");
    }
    return n - std::countr_zero(d);
}

Relabeling lexmin_relabel(const TypeSequence& tau) {
    int max_type = 0;
    for (auto t : tau) max_type = std::max(max_type, static_cast<int>(t));
    Relabeling r;
    r.permutation.assign(static_cast<std::size_t>(max_type) + 1, 0);
    r.sequence.reserve(tau.size());
    int next = 1;
    for (auto t : tau) {
        int& img = r.permutation[t];
        if (img == 0) img = next++;
        r.sequence.push_back(static_cast<std::uint8_t>(img));
    }
    for (int t = 1; t <= max_type; ++t) {
        if (r.permutation[static_cast<std::size_t>(t)] == 0) r.permutation[static_cast<std::size_t>(t)] = next++;
    }
    return r;
}

bool encodes_simple_cycle(const TypeSequence& tau) {
    if (tau.size() < 4 || tau.size() % 2 != 0) return false;
    std::vector<Label> seen;
    seen.reserve(tau.size());
    Label x = 0;
    for (auto t : tau) {
        if (t < 1 || t > kMaxDim) return false;
        seen.push_back(x);
        x ^= Label{1} << (t - 1);
    }
    if (x != 0) return false;
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

namespace {

// Compares the first-appearance relabeling of the rotated/reversed sequence against tau.
// Returns <0, 0, >0 like strcmp (sign of relabeled - tau).
int compare_variant(const TypeSequence& tau, std::size_t start, bool reversed) {
    const std::size_t len = tau.size();
    std::array<std::uint8_t, 256> map{};
    int next = 1;
    for (std::size_t i = 0; i < len; ++i) {
        // The reversal starting at vertex x_start walks tau[start-1], tau[start-2], ...
        const std::size_t idx = reversed ? (start + len - 1 - i) % len : (start + i) % len;
        auto& img = map[tau[idx]];
        if (img == 0) img = static_cast<std::uint8_t>(next++);
        if (img != tau[i]) return img < tau[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

bool is_canonical_cycle(const TypeSequence& tau) {
    if (tau.empty()) return false;
    if (lexmin_relabel(tau).sequence != tau) {
        throw VennError(ErrorKind::NotLexMin, "sequence " + sequence_to_string(tau) + " is not in first-appearance form");
    }
    if (!encodes_simple_cycle(tau)) return false;
    for (std::size_t s = 0; s < tau.size(); ++s) {
        if (s != 0 && compare_variant(tau, s, false) < 0) return false;
        if (compare_variant(tau, s, true) < 0) return false;
    }
    return true;
}

TypeSequence canonical_form(const TypeSequence& tau) {
    const std::size_t len = tau.size();
    TypeSequence best;
    TypeSequence variant(len);
    for (int rev = 0; rev < 2; ++rev) {
        for (std::size_t s = 0; s < len; ++s) {
            for (std::size_t i = 0; i < len; ++i) {
                variant[i] = rev ? tau[(s + len - 1 - i) % len] : tau[(s + i) % len];
            }
            auto relabeled = lexmin_relabel(variant).sequence;
            if (best.empty() || relabeled < best) best = std::move(relabeled);
        }
    }
    return best;
}

std::vector<Label> realize_cycle(const TypeSequence& tau, int m) {
    std::vector<Label> out;
    out.reserve(tau.size());
    Label x = 0;
    for (auto t : tau) {
        out.push_back(x);
        x = flip(x, m, t);
    }
    return out;
}

std::string sequence_to_string(const TypeSequence& tau) {
    std::string s;
    for (std::size_t i = 0; i < tau.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(tau[i]);
    }
    return s;
}

TypeSequence sequence_from_string(std::string_view text) {
    TypeSequence tau;
    int cur = -1;
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
            if (cur > kMaxDim) throw VennError(ErrorKind::NotHypercubeEdge, "edge type out of range");
        } else if (c == ',' || c == ' ') {
            if (cur >= 0) tau.push_back(static_cast<std::uint8_t>(cur));
            cur = -1;
        } else if (c != '\r' && c != '\n') {
            throw VennError(ErrorKind::NotHypercubeEdge, "unexpected character in type sequence");
        }
    }
    if (cur >= 0) tau.push_back(static_cast<std::uint8_t>(cur));
    return tau;
}

CubeAutomorphism CubeAutomorphism::identity(int n) {
    CubeAutomorphism a;
    a.n = n;
    for (int k = 1; k <= n; ++k) a.image[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(k);
    return a;
}

Label CubeAutomorphism::apply(Label x) const {
    Label y = 0;
    for (int k = 1; k <= n; ++k) {
        if (bit_at(x, n, k)) y |= position_mask(n, image[static_cast<std::size_t>(k)]);
    }
    return y ^ mask;
}

}  // namespace venn
