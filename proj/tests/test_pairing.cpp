#include <doctest.h>

#include <set>

#include "venn/canon.hpp"
#include "venn/cycle_enum.hpp"
#include "venn/error.hpp"
#include "venn/pairing.hpp"
#include "venn/pipeline.hpp"

using namespace venn;

namespace {
std::vector<CQuadrangulation> fillings(int m, const TypeSequence& s) {
    std::vector<CQuadrangulation> out;
    fill(m, realize_cycle(s, m), [&](const CQuadrangulation& c) { out.push_back(c); });
    return out;
}

std::vector<FillGroup> groups(int n) {
    const auto w = length_window(n);
    std::vector<FillGroup> out;
    enumerate_cycles(w.dim, w.min_len, w.max_len, [&](const TypeSequence& s) {
        FillGroup g;
        g.sequence = s;
        g.fillings = fillings(w.dim, s);
        out.push_back(std::move(g));
    });
    return out;
}
}  // namespace

TEST_CASE("gluing the Q_2 filling with itself gives the cube") {
    TypeSequence s{1, 2, 1, 2};
    const auto f = fillings(2, s);
    REQUIRE(f.size() == 1);
    const auto q = compatible(f[0], f[0]);
    REQUIRE(q.has_value());
    CHECK(q->graph().edge_count() == 12);
    CHECK(canonical_code(*q) == canonical_code(cube_venn()));
    const auto p = prescreen(f[0]);
    CHECK_FALSE(p.discard);
    for (int c : p.chunks) CHECK(c == 1);
}

TEST_CASE("Hamilton boundary of Q_3 glues to the 4-Venn class") {
    const auto f = fillings(3, TypeSequence{1, 2, 1, 3, 1, 2, 1, 3});
    REQUIRE(f.size() == 2);
    std::set<CanonicalCode> codes;
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i; j < f.size(); ++j) {
            if (auto q = compatible(f[i], f[j])) {
                CHECK(q->graph().edge_count() == 28);
                codes.insert(canonical_code(*q));
            }
        }
    }
    CHECK(codes.size() == 1);
}

TEST_CASE("glue rejects halves with different boundaries") {
    const auto a = fillings(3, TypeSequence{1, 2, 1, 3, 1, 2, 1, 3});
    const auto b = fillings(3, TypeSequence{1, 2, 1, 3, 2, 3});
    REQUIRE(!a.empty());
    REQUIRE(!b.empty());
    CHECK_THROWS_AS(glue(a[0], b[0]), VennError);
}

TEST_CASE("prescreen agrees with the direct half-space check on all n = 4 and n = 5 pairs") {
    for (int n : {4, 5}) {
        std::size_t pairs = 0, accepted = 0, rejected = 0;
        for (const auto& g : groups(n)) {
            std::vector<Prescreen> ps;
            for (const auto& f : g.fillings) ps.push_back(prescreen(f));
            for (std::size_t i = 0; i < g.fillings.size(); ++i) {
                for (std::size_t j = i; j < g.fillings.size(); ++j) {
                    const auto h = glue(g.fillings[i], g.fillings[j]);
                    const bool direct = !halfspace_violation(h).has_value();
                    const bool fast = !ps[i].discard && !ps[j].discard && prescreen_compatible(ps[i], ps[j]);
                    CHECK(direct == fast);
                    CHECK(compatible(g.fillings[i], g.fillings[j]).has_value() == direct);
                    // ① and ② hold by construction
                    CHECK(h.vertex_count() == (std::size_t{1} << n));
                    CHECK(h.edge_count() == (std::size_t{1} << (n + 1)) - 4);
                    ++pairs;
                    (direct ? accepted : rejected) += 1;
                }
            }
        }
        CAPTURE(n);
        CHECK(pairs > 0);
        CHECK(accepted > 0);
        CHECK(rejected > 0);
    }
}

TEST_CASE("a rejected pair fails validation on a half-space") {
    // search the length-8 cycles of Q_4 for a pair whose glue splits a half-space
    bool found = false;
    enumerate_cycles(4, 8, [&](const TypeSequence& s) {
        if (found) return;
        const auto f = fillings(4, s);
        for (std::size_t i = 0; i < f.size() && !found; ++i) {
            for (std::size_t j = i; j < f.size() && !found; ++j) {
                if (compatible(f[i], f[j])) continue;
                found = true;
                try {
                    validate(glue(f[i], f[j]));
                    FAIL("expected a validation error");
                } catch (const VennError& e) {
                    CHECK(e.kind() == ErrorKind::HalfspaceDisconnected);
                }
            }
        }
    });
    CHECK(found);
}

TEST_CASE("discarded fillings exist at m = 4") {
    std::size_t discarded = 0;
    for (const auto& g : groups(5)) {
        for (const auto& f : g.fillings) {
            const auto p = prescreen(f);
            if (!p.discard) continue;
            ++discarded;
            // no partner, itself included, can complete it
            for (const auto& other : g.fillings) CHECK_FALSE(compatible(f, other).has_value());
        }
    }
    CHECK(discarded > 0);
}
