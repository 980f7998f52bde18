#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "venn/error.hpp"
#include "venn/primal.hpp"

using namespace venn;

TEST_CASE("the 2-Venn wire diagram") {
    const auto d = build_D(2);
    CHECK(d.vertex_count() == 2);
    CHECK(d.degree(0) == 4);
    CHECK(d.degree(1) == 4);
    const auto sig = region_signatures(d);
    CHECK(std::set<Label>(sig.begin(), sig.end()) == std::set<Label>{0, 1, 2, 3});
    CHECK(is_venn(d));
    CHECK(d.multiplicity(0, 1) == 4);
    CHECK(primal_hamilton_cycle(d).has_value());
}

TEST_CASE("a non-Venn diagram of two curves") {
    // two curves crossing four times: six regions but only four signatures, two repeated
    WireDiagram w{2, {{1, 2, true}, {1, 2, true}, {1, 2, true}, {1, 2, true}}};
    const auto g = EmbeddedMultigraph::from_wires(w);
    g.check();
    const auto sig = region_signatures(g);
    CHECK(sig.size() == 6);
    CHECK(std::set<Label>(sig.begin(), sig.end()).size() < sig.size());
    CHECK_FALSE(is_venn(g));
}

TEST_CASE("D_n is a monotone Venn diagram with a matching and a Hamilton cycle") {
    for (int n = 2; n <= 10; ++n) {
        CAPTURE(n);
        const auto d = build_D(n);
        d.check();
        CHECK(d.vertex_count() == (std::size_t{1} << (n - 1)));
        const auto sig = region_signatures(d);
        CHECK(sig.size() == (std::size_t{1} << n));
        CHECK(std::set<Label>(sig.begin(), sig.end()).size() == (std::size_t{1} << n));
        CHECK(is_venn(d));
        CHECK(is_monotone_diagram(d));
        const auto m = primal_max_matching(d);
        CHECK(2 * m.size == d.vertex_count());
        const auto hc = primal_hamilton_cycle(d);
        REQUIRE(hc.has_value());
        if (d.vertex_count() > 2) CHECK(is_hamilton_cycle(d.simple_graph(), *hc));
        int full = 0;
        for (int v = 0; v < static_cast<int>(d.vertex_count()); ++v) full += d.degree(v) == 2 * n;
        if (n >= 3) CHECK(full == 2);
        // curves 1 and 2 meet every crossing; the degree-4 crossings are independent
        for (int v = 0; v < static_cast<int>(d.vertex_count()); ++v) {
            const auto w = d.curve_word(v);
            CHECK(std::count(w.begin(), w.end(), 1) == 2);
            CHECK(std::count(w.begin(), w.end(), 2) == 2);
        }
        if (n >= 3) CHECK(independent_set_of_degree4(d).size() == d.vertex_count() / 2);
        if (n <= 8 && d.vertex_count() <= 16) {
            CHECK(oracle::max_matching_size(d.simple_graph()) == m.size);
        }
    }
    const auto d4 = build_D(4);
    CHECK(d4.vertex_count() == 8);
}

TEST_CASE("full crossings of D_n carry the stated cyclic words") {
    for (int n = 3; n <= 10; ++n) {
        const auto d = build_D(n);
        std::vector<std::vector<int>> full;
        for (int v = 0; v < static_cast<int>(d.vertex_count()); ++v) {
            if (d.degree(v) == 2 * n) full.push_back(d.curve_word(v));
        }
        REQUIRE(full.size() == 2);
        std::vector<int> up{n - 1}, down{n};
        for (int c = 1; c <= n - 2; ++c) up.push_back(c);
        up.push_back(n);
        for (int c = n - 2; c >= 1; --c) up.push_back(c);
        up.push_back(n - 1);
        up.push_back(n);
        for (int c = 1; c <= n - 1; ++c) down.push_back(c);
        down.push_back(n);
        for (int c = n - 1; c >= 1; --c) down.push_back(c);
        const bool a = same_cyclic_word(full[0], up) && same_cyclic_word(full[1], down);
        const bool b = same_cyclic_word(full[1], up) && same_cyclic_word(full[0], down);
        CHECK((a || b));
    }
    CHECK(same_cyclic_word({1, 2, 3}, {3, 2, 1}));
    CHECK(same_cyclic_word({1, 2, 3}, {2, 3, 1}));
    CHECK_FALSE(same_cyclic_word({1, 2, 3, 4}, {1, 3, 2, 4}));
}

TEST_CASE("D_n* has a Hall obstruction") {
    for (int n = 4; n <= 10; ++n) {
        CAPTURE(n);
        const auto d = build_D_star(n);
        d.check();
        CHECK(d.vertex_count() == (std::size_t{1} << (n - 1)) + 2);
        CHECK(is_venn(d));
        const auto r = refute_matching(d);
        CHECK(r.independent.size() == (std::size_t{1} << (n - 2)) + 2);
        CHECK(r.rest.size() == (std::size_t{1} << (n - 2)));
        CHECK(2 * primal_max_matching(d).size < d.vertex_count());
        for (int u : r.independent) CHECK(d.degree(u) == 4);
    }
    const auto d4 = build_D_star(4);
    CHECK(d4.vertex_count() == 10);
    CHECK(refute_matching(d4).independent.size() == 6);
    const auto d5 = build_D_star(5);
    CHECK(d5.vertex_count() == 18);
    CHECK(refute_matching(d5).independent.size() == 10);
    CHECK(refute_matching(build_D_star(6)).independent.size() == 18);
    CHECK(refute_matching(build_D_star(6)).rest.size() == 16);
    for (int n : {4, 5}) {
        const auto d = build_D_star(n);
        CHECK_FALSE(primal_hamilton_cycle(d).has_value());
        CHECK_FALSE(oracle::has_hamilton(d.simple_graph(), true));
        CHECK(oracle::max_matching_size(d.simple_graph()) == primal_max_matching(d).size);
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(build_D(1), VennError);
    CHECK_THROWS_AS(build_D_star(3), VennError);
    CHECK_THROWS_AS(refute_matching(build_D(3)), VennError);
}
