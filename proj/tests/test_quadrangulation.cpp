#include <doctest.h>

#include "venn/error.hpp"
#include "venn/pipeline.hpp"
#include "venn/quadrangulation.hpp"

using namespace venn;

namespace {
ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const VennError& e) {
        return e.kind();
    }
    FAIL("no error");
    return ErrorKind::Io;
}

const std::vector<VennQuadrangulation>& five() {
    static const auto classes = enumerate_classes(5);
    return classes;
}
}  // namespace

TEST_CASE("base cases validate with the expected counts") {
    const auto two = two_venn();
    CHECK(two.graph().vertex_count() == 4);
    CHECK(two.graph().edge_count() == 4);
    CHECK(two.graph().faces().size() == 2);
    const auto cube = cube_venn();
    CHECK(cube.graph().vertex_count() == 8);
    CHECK(cube.graph().edge_count() == 12);
    CHECK(cube.graph().faces().size() == 6);
    for (Label m = 0; m < 4; ++m) CHECK(is_monotone(two, m));
    for (Label m = 0; m < 8; ++m) CHECK(is_exposed(cube, m));
    // every type matching of the cube is perfect
    const auto cs = matching_sizes(cube);
    for (std::size_t i = 1; i < cs.size(); ++i) CHECK(cs[i] == 4);
    CHECK(is_reducible(cube).has_value());
    const auto ts = matching_sizes(two);
    for (std::size_t i = 1; i < ts.size(); ++i) CHECK(ts[i] == 2);
}

TEST_CASE("cube with any outer face is the same 3-Venn quadrangulation") {
    const auto cube = cube_venn();
    for (Label m = 0; m < 8; ++m) {
        const auto q = cube.marked_at(m);
        CHECK(q.graph().edge_count() == 12);
        CHECK(q.marked == Label{0});
    }
}

TEST_CASE("validation errors") {
    std::vector<Face> faces{{0, 1, 3, 2}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 3, 7, 5}};
    auto g = PlaneGraph::from_faces(3, faces);
    // drop edge 0-1 from both rotations: two faces merge into a hexagon
    PlaneGraph cut(3);
    for (Label x = 0; x < 8; ++x) {
        cut.add_vertex(x);
        for (Label y : g.rotation(x)) {
            if ((x == 0 && y == 1) || (x == 1 && y == 0)) continue;
            cut.push_neighbor(x, y);
        }
    }
    CHECK(kind_of([&] { validate(cut); }) == ErrorKind::NonQuadFace);
    PlaneGraph partial(3);
    for (Label x : {0u, 1u, 3u, 2u}) partial.add_vertex(x);
    partial.push_neighbor(0, 1);
    partial.push_neighbor(0, 2);
    partial.push_neighbor(1, 3);
    partial.push_neighbor(1, 0);
    partial.push_neighbor(3, 2);
    partial.push_neighbor(3, 1);
    partial.push_neighbor(2, 0);
    partial.push_neighbor(2, 3);
    CHECK(kind_of([&] { validate(partial); }) == ErrorKind::NotSpanning);
    // 000-011 is not a hypercube edge
    PlaneGraph bad(3);
    for (Label x = 0; x < 8; ++x) bad.add_vertex(x);
    bad.push_neighbor(0, 3);
    bad.push_neighbor(3, 0);
    CHECK(kind_of([&] { validate(bad); }) == ErrorKind::NotHypercubeEdge);
}

TEST_CASE("Euler counts and face types on the 5-Venn classes") {
    REQUIRE(five().size() == 20);
    std::size_t irreducible = 0;
    for (const auto& q : five()) {
        const auto& g = q.graph();
        CHECK(g.vertex_count() == 32);
        CHECK(g.edge_count() == 60);
        CHECK(g.faces().size() == 30);
        CHECK(faces_have_opposite_types(g));
        CHECK(every_four_cycle_is_face(g));
        CHECK_FALSE(halfspace_violation(g).has_value());
        const auto sizes = matching_sizes(q);
        std::size_t total = 0;
        for (int i = 1; i <= 5; ++i) total += sizes[static_cast<std::size_t>(i)];
        CHECK(total == 60);
        if (auto i = is_reducible(q)) {
            const auto contracted = validate(contract_type(q, *i));
            CHECK(contracted.dim() == 4);
            CHECK(type_matching(q, *i).size() == 16);
        } else {
            ++irreducible;
        }
    }
    CHECK(irreducible == 9);
}
