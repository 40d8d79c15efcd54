#include "doctest.h"

#include <limits>

#include "fixtures.hpp"
#include "topoplan/oracle.hpp"
#include "topoplan/rollout.hpp"

using namespace topoplan;

TEST_CASE("stage reference construction") {
    const auto s = fixtures::tiny_annulus();
    const Path ref = fixtures::tiny_annulus_reference();

    SUBCASE("stage zero from a neighbor of the source") {
        const Path partial{{0}};
        const Path sref = stage_reference(s, partial, 1, ref);
        Path expected{{1, 0}};
        expected.nodes.insert(expected.nodes.end(), ref.nodes.begin() + 1, ref.nodes.end());
        CHECK(sref == expected);
        CHECK(is_valid_path(s, sref));
    }
    SUBCASE("degenerate stage zero at the source") {
        const Path sref = stage_reference(s, Path{{0}}, 0, ref);
        CHECK(sref == ref);
    }
    SUBCASE("doubles back along the partial") {
        const Path partial{{0, 1, 2}};
        const Path sref = stage_reference(s, partial, 6, ref);
        REQUIRE(sref.nodes.size() >= 4);
        CHECK(sref.nodes[0] == 6);
        CHECK(sref.nodes[1] == 2);
        CHECK(sref.nodes[2] == 1);
        CHECK(sref.nodes[3] == 0);
        CHECK(sref.destination() == ref.destination());
        CHECK(is_valid_path(s, sref));
    }
    SUBCASE("adjacency violation") {
        CHECK_THROWS_AS(stage_reference(s, Path{{0}}, 15, ref), std::invalid_argument);
    }
    SUBCASE("chain algebra consistency") {
        const auto basis = harmonic_basis(hodge_laplacian_1(s));
        const Path partial{{0, 1, 2}};
        const Path sref = stage_reference(s, partial, 6, ref);
        const Eigen::VectorXd lhs = accumulate_projection(s, basis, sref);
        const Eigen::VectorXd rhs =
            accumulate_projection(s, basis, Path{{6, 2}}) -
            accumulate_projection(s, basis, partial) +
            accumulate_projection(s, basis, ref);
        CHECK((lhs - rhs).norm() < 1e-12);
    }
}

TEST_CASE("rollout dominates the plain search") {
    const auto s = fixtures::two_hole_strip();
    const auto basis = harmonic_basis(hodge_laplacian_1(s));
    const Path ref = fixtures::two_hole_reference();

    for (double alpha : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0}) {
        const auto h = hstar_search(s, basis, fixtures::kTwoHoleSource, fixtures::kTwoHoleDest,
                                    ref, alpha);
        const auto rh = fortified_rollout(s, basis, fixtures::kTwoHoleSource,
                                          fixtures::kTwoHoleDest, ref, alpha);
        const auto prh = pruned_rollout(s, basis, fixtures::kTwoHoleSource,
                                        fixtures::kTwoHoleDest, ref, alpha, 0.1);
        CHECK(rh.total_cost <= h.total_cost);
        CHECK(prh.total_cost <= h.total_cost);
        CHECK_FALSE(rh.stage_limit_hit);
        CHECK_FALSE(prh.stage_limit_hit);
        CHECK(is_valid_path(s, rh.path));
        CHECK(is_valid_path(s, prh.path));
    }
}

TEST_CASE("alpha zero rollout cannot beat dijkstra") {
    const auto s = fixtures::tiny_annulus();
    const auto basis = harmonic_basis(hodge_laplacian_1(s));
    const Path ref = fixtures::tiny_annulus_reference();

    const auto rh = fortified_rollout(s, basis, fixtures::kAnnulusSource, fixtures::kAnnulusDest,
                                      ref, 0.0);
    const auto dij = dijkstra_shortest_path(s, fixtures::kAnnulusSource, fixtures::kAnnulusDest);
    CHECK(rh.length == doctest::Approx(dij.distance));
}

TEST_CASE("rollout reaches the brute-force class optimum on the annulus") {
    const auto s = fixtures::tiny_annulus();
    const auto basis = harmonic_basis(hodge_laplacian_1(s));
    const Path ref = fixtures::tiny_annulus_reference();
    const Eigen::VectorXd ref_proj = accumulate_projection(s, basis, ref);
    const SignatureKey ref_key = quantize_projection(ref_proj);

    // Shortest homologous length from exhaustive enumeration.
    double best = std::numeric_limits<double>::infinity();
    for_each_simple_path(s, basis, fixtures::kAnnulusSource, fixtures::kAnnulusDest,
                         [&](const Path&, double w, const Eigen::VectorXd& g) {
                             if (quantize_projection(g) == ref_key) best = std::min(best, w);
                         });

    for (double alpha : {2.0, 4.0}) {
        const auto rh = fortified_rollout(s, basis, fixtures::kAnnulusSource,
                                          fixtures::kAnnulusDest, ref, alpha);
        CHECK(quantize_projection(accumulate_projection(s, basis, rh.path)) == ref_key);
        CHECK(rh.length == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("huge epsilon reproduces the unpruned rollout") {
    const auto s = fixtures::two_hole_strip();
    const auto basis = harmonic_basis(hodge_laplacian_1(s));
    const Path ref = fixtures::two_hole_reference();

    for (double alpha : {0.5, 1.5}) {
        const auto rh = fortified_rollout(s, basis, fixtures::kTwoHoleSource,
                                          fixtures::kTwoHoleDest, ref, alpha);
        const auto prh = pruned_rollout(s, basis, fixtures::kTwoHoleSource,
                                        fixtures::kTwoHoleDest, ref, alpha, 1e9);
        CHECK(rh.path == prh.path);
        CHECK(rh.visited_count == prh.visited_count);
    }
}

TEST_CASE("tiny epsilon still returns a full path") {
    const auto s = fixtures::tiny_annulus();
    const auto basis = harmonic_basis(hodge_laplacian_1(s));
    const Path ref = fixtures::tiny_annulus_reference();

    for (double eps : {1e-8, 1e-4, 1e-2, 0.1}) {
        const auto prh = pruned_rollout(s, basis, fixtures::kAnnulusSource,
                                        fixtures::kAnnulusDest, ref, 1.0, eps);
        CHECK(is_valid_path(s, prh.path));
        CHECK(prh.path.source() == fixtures::kAnnulusSource);
        CHECK(prh.path.destination() == fixtures::kAnnulusDest);
    }
    CHECK_THROWS_AS(pruned_rollout(s, basis, fixtures::kAnnulusSource, fixtures::kAnnulusDest,
                                   ref, 1.0, 0.0),
                    std::invalid_argument);
}

TEST_CASE("rollout trace carries stages") {
    const auto s = fixtures::tiny_annulus();
    const auto basis = harmonic_basis(hodge_laplacian_1(s));
    const Path ref = fixtures::tiny_annulus_reference();

    std::vector<RolloutPop> trace;
    RolloutOptions options;
    options.trace = &trace;
    const auto rh = fortified_rollout(s, basis, fixtures::kAnnulusSource, fixtures::kAnnulusDest,
                                      ref, 1.0, options);
    CHECK(static_cast<long long>(trace.size()) == rh.visited_count);
    CHECK(trace.front().stage == 0);
    int max_stage = 0;
    for (const auto& t : trace) max_stage = std::max(max_stage, t.stage);
    CHECK(max_stage >= 1);
}
