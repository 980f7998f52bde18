#include "venn/analysis.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

#include "venn/error.hpp"

namespace venn {

Graph to_graph(const PlaneGraph& g) {
    Graph out(g.slots());
    for (Label x = 0; x < g.slots(); ++x) {
        for (Label y : g.rotation(x)) out[x].push_back(y);
    }
    return out;
}

Matching max_matching(const VennQuadrangulation& q) { return bipartite_max_matching(to_graph(q.graph())); }

bool has_perfect_matching(const VennQuadrangulation& q) {
    return 2 * max_matching(q).size == q.graph().slots();
}

HallViolator hall_violator(const VennQuadrangulation& q) { return hall_violator(to_graph(q.graph())); }

std::optional<VertexSequence> hamilton_cycle(const VennQuadrangulation& q) {
    return find_hamilton_cycle(to_graph(q.graph()));
}

std::optional<VertexSequence> hamilton_path(const VennQuadrangulation& q) {
    return find_hamilton_path(to_graph(q.graph()));
}

VennQuadrangulation extend_by_hamilton_cycle(const VennQuadrangulation& q, const VertexSequence& hc,
                                             bool flip_sides) {
    const PlaneGraph& g = q.graph();
    const int n = g.dim();
    const Graph adj = to_graph(g);
    if (!is_hamilton_cycle(adj, hc)) throw VennError(ErrorKind::NotHamiltonian, "not a Hamilton cycle");
    std::set<Edge> on_cycle;
    for (std::size_t i = 0; i < hc.size(); ++i) {
        const Label a = hc[i], b = hc[(i + 1) % hc.size()];
        on_cycle.insert({std::min(a, b), std::max(a, b)});
    }
    const auto faces = g.faces();
    // face of each dart
    std::map<Edge, std::size_t> dart_face;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& face = faces[f];
        for (std::size_t k = 0; k < face.size(); ++k) dart_face[{face[k], face[(k + 1) % face.size()]}] = f;
    }
    std::vector<int> side(faces.size(), -1);
    int components = 0;
    for (std::size_t s = 0; s < faces.size(); ++s) {
        if (side[s] >= 0) continue;
        if (components == 2) throw VennError(ErrorKind::InvalidEmbedding, "Hamilton cycle does not split the faces in two");
        side[s] = components;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            const auto f = stack.back();
            stack.pop_back();
            const auto& face = faces[f];
            for (std::size_t k = 0; k < face.size(); ++k) {
                const Label a = face[k], b = face[(k + 1) % face.size()];
                if (on_cycle.count({std::min(a, b), std::max(a, b)})) continue;
                const auto other = dart_face.at({b, a});
                if (side[other] < 0) {
                    side[other] = side[f];
                    stack.push_back(other);
                } else if (side[other] != side[f]) {
                    throw VennError(ErrorKind::InvalidEmbedding, "inconsistent side assignment");
                }
            }
        }
        ++components;
    }
    std::vector<Face> out;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const Label bit = static_cast<Label>(side[f] ^ (flip_sides ? 1 : 0));
        Face face;
        for (Label x : faces[f]) face.push_back(x * 2 + bit);
        out.push_back(std::move(face));
    }
    for (std::size_t i = 0; i < hc.size(); ++i) {
        const Label x = hc[i], y = hc[(i + 1) % hc.size()];
        out.push_back(Face{x * 2, y * 2, y * 2 + 1, x * 2 + 1});
    }
    return validate(PlaneGraph::from_faces(n + 1, out));
}

std::size_t CensusRecord::monotone_markings() const {
    return static_cast<std::size_t>(std::count_if(markings.begin(), markings.end(), [](const MarkingInfo& m) { return m.monotone; }));
}

std::size_t CensusRecord::exposed_markings() const {
    return static_cast<std::size_t>(std::count_if(markings.begin(), markings.end(), [](const MarkingInfo& m) { return m.exposed; }));
}

CensusRecord analyze(const VennQuadrangulation& q) {
    CensusRecord r;
    const auto form = canonical_form(q.graph());
    r.code = form.code;
    const Graph adj = to_graph(q.graph());
    r.has_pm = 2 * bipartite_max_matching(adj).size == adj.size();
    if (auto c = find_hamilton_cycle(adj)) {
        if (!is_hamilton_cycle(adj, *c)) throw VennError(ErrorKind::NotHamiltonian, "invalid Hamilton cycle witness");
        r.has_hc = r.has_hp = true;
    } else if (auto p = find_hamilton_path(adj)) {
        if (!is_hamilton_path(adj, *p)) throw VennError(ErrorKind::NotHamiltonian, "invalid Hamilton path witness");
        r.has_hp = true;
    }
    r.reducible = is_reducible(q).has_value();
    for (const auto& orbit : form.orbits) {
        MarkingInfo m;
        m.representative = orbit.front();
        m.orbit_size = orbit.size();
        m.monotone = is_monotone(q, m.representative);
        m.exposed = is_exposed(q, m.representative);
        r.markings.push_back(m);
    }
    return r;
}

void CensusCounts::add(const CensusRecord& r) {
    const std::uint64_t k = r.orbits();
    const std::uint64_t mono = r.monotone_markings(), expo = r.exposed_markings();
    ++all;
    all_marked += k;
    if (mono > 0) ++monotone;
    monotone_marked += mono;
    if (expo > 0) ++exposed;
    exposed_marked += expo;
    if (r.reducible) {
        ++reducible;
        reducible_marked += k;
    }
    if (!r.has_hc) {
        ++no_hc;
        no_hc_marked += k;
    }
    if (!r.has_hp) {
        ++no_hp;
        no_hp_marked += k;
    }
    if (!r.has_pm) {
        ++no_pm;
        no_pm_marked += k;
    }
}

void CensusCounts::merge(const CensusCounts& o) {
    all += o.all;
    all_marked += o.all_marked;
    monotone += o.monotone;
    monotone_marked += o.monotone_marked;
    exposed += o.exposed;
    exposed_marked += o.exposed_marked;
    reducible += o.reducible;
    reducible_marked += o.reducible_marked;
    no_hc += o.no_hc;
    no_hc_marked += o.no_hc_marked;
    no_hp += o.no_hp;
    no_hp_marked += o.no_hp_marked;
    no_pm += o.no_pm;
    no_pm_marked += o.no_pm_marked;
}

CensusCounts census(const std::vector<VennQuadrangulation>& classes) {
    CensusCounts c;
    for (const auto& q : classes) c.add(analyze(q));
    return c;
}

void write_census_tsv(std::ostream& out, int n, const CensusCounts& c) {
    out << "property\tn\tunmarked\tmarked\n";
    auto row = [&](const char* name, std::uint64_t a, std::uint64_t b) {
        out << name << '\t' << n << '\t' << a << '\t' << b << '\n';
    };
    row("all", c.all, c.all_marked);
    row("monotone", c.monotone, c.monotone_marked);
    row("exposed", c.exposed, c.exposed_marked);
    row("reducible", c.reducible, c.reducible_marked);
    row("no_hamilton_cycle", c.no_hc, c.no_hc_marked);
    row("no_hamilton_path", c.no_hp, c.no_hp_marked);
    row("no_perfect_matching", c.no_pm, c.no_pm_marked);
}

std::vector<VennQuadrangulation> extend_all_hamilton_cycles(const std::vector<VennQuadrangulation>& classes,
                                                            std::uint64_t* cycles_seen) {
    std::map<CanonicalCode, VennQuadrangulation> found;
    std::uint64_t cycles = 0;
    for (const auto& q : classes) {
        const Graph adj = to_graph(q.graph());
        cycles += for_each_hamilton_cycle(adj, [&](const VertexSequence& hc) {
            for (bool flip : {false, true}) {
                auto e = extend_by_hamilton_cycle(q, hc, flip);
                auto code = canonical_code(e);
                found.emplace(std::move(code), std::move(e));
            }
            return true;
        });
    }
    if (cycles_seen) *cycles_seen = cycles;
    std::vector<VennQuadrangulation> out;
    for (auto& [code, q] : found) out.push_back(std::move(q));
    return out;
}

}  // namespace venn
