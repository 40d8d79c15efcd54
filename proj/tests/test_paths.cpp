#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "topoplan/homology.hpp"
#include "topoplan/path.hpp"

using namespace topoplan;

TEST_CASE("path weight basics") {
    const auto s = fixtures::small_disk();
    CHECK(path_weight(s, Path{{5}}) == 0.0);
    // Three axis-aligned unit steps.
    CHECK(path_weight(s, Path{{0, 1, 2, 3}}) == doctest::Approx(3.0));
    CHECK_THROWS_AS(path_weight(s, Path{{0, 10}}), std::invalid_argument);  // no edge
}

TEST_CASE("path algebra") {
    const auto s = fixtures::small_disk();
    const Path tau{{0, 1, 5, 6}};

    CHECK(concat(tau, Path{{6}}) == tau);
    CHECK(negate(negate(tau)) == tau);
    CHECK(path_weight(s, negate(tau)) == doctest::Approx(path_weight(s, tau)));
    CHECK_THROWS_AS(concat(tau, Path{{3, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(append_node(s, tau, 12), std::invalid_argument);

    const Path extended = append_node(s, tau, 7);
    CHECK(extended.nodes.back() == 7);
}

TEST_CASE("chain map respects path algebra") {
    const auto s = fixtures::two_hole_strip();
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Path a = fixtures::random_walk(s, rng, 0, 8);
        const Path b = fixtures::random_walk(s, rng, a.nodes.back(), 8);
        const ChainVector sum = chain_of_path(s, a) + chain_of_path(s, b);
        const ChainVector joined = chain_of_path(s, concat(a, b));
        CHECK((sum - joined).cwiseAbs().maxCoeff() == 0.0);
        CHECK((chain_of_path(s, negate(a)) + chain_of_path(s, a)).cwiseAbs().maxCoeff() == 0.0);
        CHECK(path_weight(s, concat(a, b)) ==
              doctest::Approx(path_weight(s, a) + path_weight(s, b)));
    }
}

TEST_CASE("dijkstra determinism and optimality on the annulus") {
    const auto s = fixtures::tiny_annulus();
    const auto r = dijkstra_shortest_path(s, fixtures::kAnnulusSource, fixtures::kAnnulusDest);
    // Shortest route passes below the hole: 1 + 2*sqrt(2).
    CHECK(r.distance == doctest::Approx(1.0 + 2.0 * std::sqrt(2.0)));
    CHECK(r.path.source() == fixtures::kAnnulusSource);
    CHECK(r.path.destination() == fixtures::kAnnulusDest);
    const auto again = dijkstra_shortest_path(s, fixtures::kAnnulusSource, fixtures::kAnnulusDest);
    CHECK(r.path == again.path);
}

TEST_CASE("reference from keypoints") {
    const auto s = fixtures::small_disk();

    SUBCASE("adjacent keypoints give the single edge") {
        const Path p = reference_from_keypoints(s, Keypoints{{0, 1}});
        CHECK(p == Path{{0, 1}});
    }
    SUBCASE("repeated keypoints act as the identity") {
        const Path p = reference_from_keypoints(s, Keypoints{{0, 0, 1, 1}});
        CHECK(p == Path{{0, 1}});
    }
    SUBCASE("segments are individually shortest") {
        const Keypoints kps{{0, 3, 15}};
        const Path p = reference_from_keypoints(s, kps);
        REQUIRE(is_valid_path(s, p));
        // Split the path back at the middle keypoint and compare weights.
        auto it = std::find(p.nodes.begin(), p.nodes.end(), 3);
        REQUIRE(it != p.nodes.end());
        Path first{std::vector<int>(p.nodes.begin(), it + 1)};
        Path second{std::vector<int>(it, p.nodes.end())};
        CHECK(path_weight(s, first) ==
              doctest::Approx(dijkstra_shortest_path(s, 0, 3).distance));
        CHECK(path_weight(s, second) ==
              doctest::Approx(dijkstra_shortest_path(s, 3, 15).distance));
    }
    SUBCASE("too few keypoints") {
        CHECK_THROWS_AS(reference_from_keypoints(s, Keypoints{{0}}), std::invalid_argument);
    }
}

TEST_CASE("fixture reference paths are valid") {
    const auto annulus = fixtures::tiny_annulus();
    CHECK(is_valid_path(annulus, fixtures::tiny_annulus_reference()));
    const auto strip = fixtures::two_hole_strip();
    CHECK(is_valid_path(strip, fixtures::two_hole_reference()));
}
