#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "topoplan/json_io.hpp"
#include "topoplan/surface.hpp"

using namespace topoplan;

TEST_CASE("single cell grid is a disk") {
    GridSpec spec;
    spec.rows = 2;
    spec.cols = 2;
    spec.bounds = {0.0, 0.0, 1.0, 1.0};
    const auto s = build_grid_complex(spec);
    CHECK(s.vertex_count() == 4);
    CHECK(s.edge_count() == 5);
    CHECK(s.triangle_count() == 2);
    CHECK(euler_characteristic(s) == 1);
    CHECK(s.hole_count() == 0);
}

TEST_CASE("5x5 grid with a center cell hole") {
    GridSpec spec;
    spec.rows = 5;
    spec.cols = 5;
    spec.bounds = {0.0, 0.0, 4.0, 4.0};
    spec.holes = {{1.0, 1.0, 2.0, 2.0}};
    const auto s = build_grid_complex(spec);
    // Direct enumeration of the construction rule: the hole removes the two
    // triangles of cell (1,1) and their shared diagonal, nothing else.
    CHECK(s.vertex_count() == 25);
    CHECK(s.edge_count() == 55);
    CHECK(s.triangle_count() == 30);
    CHECK(euler_characteristic(s) == 0);
    CHECK(s.hole_count() == 1);
}

TEST_CASE("tiny annulus fixture counts") {
    const auto s = fixtures::tiny_annulus();
    CHECK(s.vertex_count() == 16);
    CHECK(s.edge_count() == 32);
    CHECK(s.triangle_count() == 16);
    CHECK(euler_characteristic(s) == 0);
    const auto cycles = hole_boundary_cycles(s);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].size() == 5);  // 4-cycle, closed
    CHECK(cycles[0].front() == cycles[0].back());
}

TEST_CASE("two hole strip counts") {
    const auto s = fixtures::two_hole_strip();
    CHECK(s.vertex_count() == 24);
    CHECK(s.edge_count() == 51);
    CHECK(s.triangle_count() == 26);
    CHECK(euler_characteristic(s) == -1);
    CHECK(hole_boundary_cycles(s).size() == 2);
}

TEST_CASE("boundary matrix of a single triangle") {
    const auto s = fixtures::single_triangle();
    const Eigen::MatrixXd b2(boundary_matrix(s, 2));
    REQUIRE(b2.rows() == 3);
    REQUIRE(b2.cols() == 1);
    // Edges sort as (0,1), (0,2), (1,2); faces of [0,1,2] get +1, -1, +1.
    CHECK(b2(0, 0) == doctest::Approx(+1.0));
    CHECK(b2(1, 0) == doctest::Approx(-1.0));
    CHECK(b2(2, 0) == doctest::Approx(+1.0));

    const Eigen::MatrixXd b1(boundary_matrix(s, 1));
    CHECK(b1(0, 0) == doctest::Approx(-1.0));  // edge (0,1): -1 at tail
    CHECK(b1(1, 0) == doctest::Approx(+1.0));  //             +1 at head
}

TEST_CASE("boundary of boundary vanishes on the annulus") {
    const auto s = fixtures::tiny_annulus();
    const Eigen::SparseMatrix<double> product = boundary_matrix(s, 1) * boundary_matrix(s, 2);
    CHECK(Eigen::MatrixXd(product).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("randomized surfaces satisfy the structural invariants") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const auto random = fixtures::random_surface(rng);
        const auto& s = random.surface;

        const Eigen::SparseMatrix<double> product =
            boundary_matrix(s, 1) * boundary_matrix(s, 2);
        CHECK(Eigen::MatrixXd(product).cwiseAbs().maxCoeff() == 0.0);

        CHECK(euler_characteristic(s) == 1 - random.holes_placed);
        CHECK(s.hole_count() == random.holes_placed);
        CHECK(static_cast<int>(hole_boundary_cycles(s).size()) == random.holes_placed);

        // Edge-to-triangle incidence: at most two everywhere, exactly one on
        // the outer boundary and hole perimeters.
        std::vector<int> count(static_cast<std::size_t>(s.edge_count()), 0);
        for (const auto& t : s.triangles()) {
            ++count[static_cast<std::size_t>(s.edge_between(t.v[0], t.v[1]))];
            ++count[static_cast<std::size_t>(s.edge_between(t.v[0], t.v[2]))];
            ++count[static_cast<std::size_t>(s.edge_between(t.v[1], t.v[2]))];
        }
        for (int c : count) {
            CHECK(c >= 1);
            CHECK(c <= 2);
        }
    }
}

TEST_CASE("construction is deterministic") {
    std::mt19937_64 rng_a(99), rng_b(99);
    const auto a = fixtures::random_surface(rng_a);
    const auto b = fixtures::random_surface(rng_b);
    REQUIRE(a.surface.vertex_count() == b.surface.vertex_count());
    REQUIRE(a.surface.edge_count() == b.surface.edge_count());
    for (int e = 0; e < a.surface.edge_count(); ++e) {
        CHECK(a.surface.edges()[e].tail == b.surface.edges()[e].tail);
        CHECK(a.surface.edges()[e].head == b.surface.edges()[e].head);
        CHECK(a.surface.edges()[e].weight == b.surface.edges()[e].weight);
    }
    for (int t = 0; t < a.surface.triangle_count(); ++t)
        CHECK(a.surface.triangles()[t].v == b.surface.triangles()[t].v);
}

TEST_CASE("hole placement errors") {
    GridSpec spec;
    spec.rows = 5;
    spec.cols = 5;
    spec.bounds = {0.0, 0.0, 4.0, 4.0};

    SUBCASE("hole outside bounds") {
        spec.holes = {{3.0, 3.0, 5.0, 5.0}};
        CHECK_THROWS_AS(build_grid_complex(spec), std::invalid_argument);
    }
    SUBCASE("disconnected parts are rejected") {
        CHECK_THROWS_AS(SimplicialSurface::from_parts(
                            {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0},
                             {5.0, 5.0}, {6.0, 5.0}, {5.0, 6.0}},
                            {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.5},
                             {3, 4, 1.0}, {3, 5, 1.0}, {4, 5, 1.5}},
                            {OrientedTriangle{{0, 1, 2}}, OrientedTriangle{{3, 4, 5}}}),
                        std::invalid_argument);
    }
    SUBCASE("degenerate grid") {
        spec.rows = 1;
        CHECK_THROWS_AS(build_grid_complex(spec), std::invalid_argument);
    }
}

TEST_CASE("surface json round trip") {
    const auto s = fixtures::two_hole_strip();
    const auto j = surface_to_json(s);
    const auto back = surface_from_json(j);
    REQUIRE(back.vertex_count() == s.vertex_count());
    REQUIRE(back.edge_count() == s.edge_count());
    REQUIRE(back.triangle_count() == s.triangle_count());
    for (int e = 0; e < s.edge_count(); ++e)
        CHECK(back.edges()[e].weight == s.edges()[e].weight);
    CHECK(euler_characteristic(back) == euler_characteristic(s));
}
