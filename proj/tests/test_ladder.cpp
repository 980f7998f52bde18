#include <doctest.h>

#include <filesystem>

#include "venn/analysis.hpp"
#include "venn/canon.hpp"
#include "venn/error.hpp"
#include "venn/ladder.hpp"
#include "venn/pipeline.hpp"

using namespace venn;

namespace {
std::string fixture(const std::string& name) { return std::string(VENN_FIXTURE_DIR) + "/" + name; }

std::vector<Label> obstruction(const VennQuadrangulation& q) {
    const auto h = hall_violator(q);
    std::vector<Label> out = h.S;
    out.insert(out.end(), h.N.begin(), h.N.end());
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace

TEST_CASE("the 4-cycle is a ladder for either rung type") {
    const auto two = two_venn();
    const auto ls = find_ladders(two);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0].rung_type == 1);
    CHECK(ls[1].rung_type == 2);
    for (const auto& l : ls) {
        CHECK(ladder_problem(two, l).empty());
        const auto e = extend(two, l, {});
        CHECK(e.q.dim() == 3);
        CHECK(e.q.graph().vertex_count() == 8);
        CHECK(e.q.graph().edge_count() == 12);
        CHECK(ladder_problem(e.q, e.ladder).empty());
    }
}

TEST_CASE("ladder checks and errors") {
    const auto two = two_venn();
    Ladder bad{{0, 3}, {2, 1}, 1};
    CHECK_FALSE(ladder_problem(two, bad).empty());
    CHECK_THROWS_AS(extend(two, bad, {}), VennError);
    const auto l = find_ladders(two).front();
    try {
        extend(two, l, {0});
        FAIL("accepted an overlapping H");
    } catch (const VennError& e) {
        CHECK(e.kind() == ErrorKind::NotDisjoint);
    }
}

TEST_CASE("ladders in the 5-Venn classes extend to valid 6-Venn quadrangulations") {
    std::size_t with_ladder = 0, disjoint = 0;
    for (const auto& q : enumerate_classes(5)) {
        const auto ls = find_ladders(q);
        if (ls.empty()) continue;
        ++with_ladder;
        for (const auto& l : ls) CHECK(ladder_problem(q, l).empty());
        // H = a single vertex
        std::vector<Label> h{0b01010};
        if (auto d = find_disjoint_ladder(q, h)) {
            ++disjoint;
            const auto e = extend(q, *d, h);
            CHECK(e.q.dim() == 6);
            CHECK(e.q.graph().edge_count() == 124);
            CHECK(e.h == std::vector<Label>{0b010100});
            CHECK(ladder_problem(e.q, e.ladder).empty());
            for (Label x : e.ladder.vertices()) CHECK(std::find(e.h.begin(), e.h.end(), x) == e.h.end());
            // monotone in, monotone out
            if (is_monotone(q, 0)) CHECK(is_monotone(e.q, 0));
        }
    }
    CHECK(with_ladder > 0);
    CHECK(disjoint > 0);
}

TEST_CASE("6-Venn counterexample fixture") {
    const auto qs = read_binary_file(fixture("nopm6.vqdb"));
    REQUIRE(qs.size() == 1);
    const auto q = qs[0];
    CHECK(q.dim() == 6);
    CHECK_FALSE(has_perfect_matching(q));
    const auto hv = hall_violator(q);
    CHECK(hv.S.size() == 12);
    CHECK(hv.N.size() == 11);
    CHECK_FALSE(hamilton_cycle(q).has_value());
    auto h = obstruction(q);
    CHECK(h.size() == 23);
    auto l = find_disjoint_ladder(q, h);
    REQUIRE(l.has_value());
    VennQuadrangulation cur = q;
    for (int t = 1; t <= 4; ++t) {
        const auto e = extend(cur, *l, h);
        CHECK(e.q.dim() == 6 + t);
        CHECK(e.q.graph().vertex_count() == (std::size_t{1} << (6 + t)));
        CHECK_FALSE(has_perfect_matching(e.q));
        const auto v = certify_counterexample(e.q, e.h);
        CHECK(v.S.size() == 12);
        CHECK(v.N.size() == 11);
        CHECK(ladder_problem(e.q, e.ladder).empty());
        cur = e.q;
        h = e.h;
        l = e.ladder;
    }
}

TEST_CASE("monotone 7-Venn counterexample fixture") {
    const auto qs = read_binary_file(fixture("mono7.vqdb"));
    REQUIRE(qs.size() == 1);
    const auto q = qs[0];
    CHECK(q.dim() == 7);
    CHECK(is_monotone(q, 0));
    CHECK_FALSE(has_perfect_matching(q));
    const auto hv = hall_violator(q);
    CHECK(hv.S.size() == 12);
    CHECK(hv.N.size() == 11);
    auto h = obstruction(q);
    auto l = find_disjoint_ladder(q, h);
    REQUIRE(l.has_value());
    VennQuadrangulation cur = q;
    for (int t = 1; t <= 3; ++t) {
        const auto e = extend(cur, *l, h);
        CHECK(e.q.dim() == 7 + t);
        CHECK(is_monotone(e.q, 0));
        CHECK_FALSE(has_perfect_matching(e.q));
        const auto v = certify_counterexample(e.q, e.h);
        CHECK(v.S.size() == 12);
        CHECK(v.N.size() == 11);
        cur = e.q;
        h = e.h;
        std::sort(h.begin(), h.end());
        l = e.ladder;
    }
}
