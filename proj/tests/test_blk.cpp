#include "doctest.h"

#include "fixtures.hpp"
#include "topoplan/blk.hpp"
#include "topoplan/oracle.hpp"

using namespace topoplan;

TEST_CASE("disk search reduces to dijkstra") {
    const auto s = fixtures::small_disk();
    const auto basis = harmonic_basis(hodge_laplacian_1(s));
    const Path ref = reference_from_keypoints(s, Keypoints{{0, 15}});

    const auto blk = blk_search(s, basis, 0, 15, ref);
    const auto dij = dijkstra_shortest_path(s, 0, 15);
    CHECK(blk.result.path == dij.path);
    CHECK(blk.result.length == path_weight(s, dij.path));
    CHECK(blk.records.empty());
}

TEST_CASE("annulus records match the oracle") {
    const auto s = fixtures::tiny_annulus();
    const auto basis = harmonic_basis(hodge_laplacian_1(s));
    const Path ref = fixtures::tiny_annulus_reference();

    const auto blk =
        blk_search(s, basis, fixtures::kAnnulusSource, fixtures::kAnnulusDest, ref);
    const auto table =
        enumerate_classes(s, basis, fixtures::kAnnulusSource, fixtures::kAnnulusDest);

    // Reference class is the longer one, so the other class appears first.
    REQUIRE(blk.records.size() == 1);
    CHECK(blk.result.length == doctest::Approx(3.0 + std::sqrt(2.0)).epsilon(1e-12));
    CHECK(blk.records[0].shortest_length ==
          doctest::Approx(1.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-12));

    const auto it = table.classes.find(blk.records[0].signature_key);
    REQUIRE(it != table.classes.end());
    CHECK(it->second.shortest_length ==
          doctest::Approx(blk.records[0].shortest_length).epsilon(1e-12));
}

TEST_CASE("record lengths are discovered in non-decreasing order") {
    const auto s = fixtures::two_hole_strip();
    const auto basis = harmonic_basis(hodge_laplacian_1(s));
    const auto blk = blk_search(s, basis, fixtures::kTwoHoleSource, fixtures::kTwoHoleDest,
                                fixtures::two_hole_reference());
    for (std::size_t i = 1; i < blk.records.size(); ++i) {
        CHECK(blk.records[i - 1].shortest_length <= blk.records[i].shortest_length + 1e-12);
        CHECK(blk.records[i].discovery_rank == static_cast<int>(i));
    }
}

TEST_CASE("two hole class lengths agree with enumeration") {
    const auto s = fixtures::two_hole_strip();
    const auto basis = harmonic_basis(hodge_laplacian_1(s));
    const Path ref = fixtures::two_hole_reference();

    const auto blk = blk_search(s, basis, fixtures::kTwoHoleSource, fixtures::kTwoHoleDest, ref);
    const auto table =
        enumerate_classes(s, basis, fixtures::kTwoHoleSource, fixtures::kTwoHoleDest);

    const SignatureKey ref_key =
        quantize_projection(accumulate_projection(s, basis, ref));
    const auto target = table.classes.find(ref_key);
    REQUIRE(target != table.classes.end());
    CHECK(blk.result.length == doctest::Approx(target->second.shortest_length).epsilon(1e-12));

    for (const auto& record : blk.records) {
        const auto it = table.classes.find(record.signature_key);
        REQUIRE(it != table.classes.end());
        CHECK(record.shortest_length ==
              doctest::Approx(it->second.shortest_length).epsilon(1e-12));
    }
}

TEST_CASE("alpha threshold separates the annulus classes") {
    const auto s = fixtures::tiny_annulus();
    const auto basis = harmonic_basis(hodge_laplacian_1(s));
    const Path ref = fixtures::tiny_annulus_reference();
    const Eigen::VectorXd ref_proj = accumulate_projection(s, basis, ref);

    const auto blk =
        blk_search(s, basis, fixtures::kAnnulusSource, fixtures::kAnnulusDest, ref);
    const double astar = alpha_threshold(blk.records, blk.result.length, ref_proj);
    CHECK(astar > 0.0);

    auto cost = [&](double length, double gap, double alpha) { return length + alpha * gap; };
    const double gap = projection_difference(blk.records[0].projection, ref_proj);
    for (double f : {1.05, 1.5, 3.0}) {
        const double alpha = astar * f;
        CHECK(cost(blk.result.length, 0.0, alpha) < cost(blk.records[0].shortest_length, gap, alpha));
    }
    for (double f : {0.2, 0.6, 0.95}) {
        const double alpha = astar * f;
        CHECK(cost(blk.result.length, 0.0, alpha) > cost(blk.records[0].shortest_length, gap, alpha));
    }

    SUBCASE("no shorter class means zero") {
        CHECK(alpha_threshold({}, 1.0, ref_proj) == 0.0);
    }
    SUBCASE("shorter class with zero gap is a bookkeeping bug") {
        std::vector<ClassRecord> bogus = blk.records;
        bogus[0].projection = ref_proj;
        CHECK_THROWS_AS(alpha_threshold(bogus, blk.result.length, ref_proj),
                        std::runtime_error);
    }
}

TEST_CASE("hole loop projections have one entry per hole") {
    const auto s = fixtures::two_hole_strip();
    const auto basis = harmonic_basis(hodge_laplacian_1(s));
    const auto loops = hole_loop_projections(s, basis);
    REQUIRE(loops.size() == 2);
    for (const auto& loop : loops) CHECK(loop.norm() > 0.1);
}
