#include <doctest.h>

#include <stdexcept>

#include "scrollres/classifier.hpp"
#include "scrollres/errors.hpp"

using namespace scrollres;

TEST_CASE("scaled conic discriminant") {
    CHECK(conic_discriminant4(11, 1) == 104);
    CHECK(conic_discriminant4(6, 0) == 0);
    CHECK(conic_discriminant4(5, 0) == -8);
    CHECK(conic_discriminant4(4, 0) == -8);
    CHECK(conic_discriminant4(13, 5) == 0);
    // (2k-2rho-7)^2 - 8k + 23 recomputed term by term
    for (std::int64_t k = 4; k <= 30; ++k)
        for (std::int64_t rho = -5; rho <= k; ++rho) {
            const std::int64_t t = 2 * k - 2 * rho - 7;
            CHECK(conic_discriminant4(k, rho) == t * t - 8 * k + 23);
        }
}

TEST_CASE("quadric generator counts") {
    CHECK(quadric_generator_count(19, 11) == 13);
    CHECK(quadric_generator_count(10, 6) == 0);
    CHECK(quadric_generator_count(15, 9) == 4);
    // negative raw value clamps to zero but stays visible
    CHECK(quadric_generator_count_raw(6, 4) == -1);
    CHECK(quadric_generator_count(6, 4) == 0);
    CHECK(quadric_generator_count_raw(9, 7) == -4);
    CHECK_THROWS_AS(quadric_generator_count(12, 11), std::invalid_argument);
    CHECK_THROWS_AS(quadric_generator_count_raw(7, 6), std::invalid_argument);
}

TEST_CASE("quadric bundle decomposition") {
    CHECK(decompose_quadric_bundle(19, 11) == QuadricDecomposition{1, 30, 13});
    CHECK(decompose_quadric_bundle(15, 9) == QuadricDecomposition{1, 22, 4});
    CHECK(decompose_quadric_bundle(10, 6) == QuadricDecomposition{0, 9, 0});

    // with no twist-2 part the decomposition is the balanced splitting
    CHECK(decompose_quadric_bundle(10, 6).to_splitting() == balanced_splitting(9, 9));
    CHECK(decompose_quadric_bundle(6, 4).to_splitting() == balanced_splitting(1, 2));

    CHECK(decompose_quadric_bundle(19, 11).to_splitting() ==
          SplittingType::from_runs({{2, 13}, {1, 30}, {0, 1}}));

    CHECK_THROWS_AS(decompose_quadric_bundle(12, 11), std::invalid_argument);  // g = k+1
    CHECK_THROWS_AS(decompose_quadric_bundle(17, 7), std::invalid_argument);   // rho < 0
    CHECK_THROWS_AS(decompose_quadric_bundle(6, 3), std::invalid_argument);    // k < 4
}

TEST_CASE("model violations carry the offending values") {
    try {
        decompose_quadric_parts(10, 6, 9, 9, 6);  // l1 = 9 - 12 < 0
        CHECK(false);
    } catch (const ModelViolation& v) {
        CHECK(v.g == 10);
        CHECK(v.k == 6);
        CHECK(v.l1 == -3);
        CHECK(v.l2 == 6);
    }
    CHECK_THROWS_AS(decompose_quadric_parts(19, 11, 44, 56, 5), ModelViolation);  // l0 = -7
}

TEST_CASE("verdicts") {
    const Verdict gold = classify(19, 11);
    CHECK(gold.tag == VerdictTag::unbalanced_N1);
    CHECK(gold.conic4 == 104);

    // conic passes through the lattice point (k,rho) = (6,0)
    const Verdict boundary = classify(10, 6);
    CHECK(boundary.tag == VerdictTag::balanced_N1_boundary);
    CHECK(boundary.conic4 == 0);
    CHECK(classify(19, 13).tag == VerdictTag::balanced_N1_boundary);  // (k,rho) = (13,5)

    CHECK(classify(14, 8).tag == VerdictTag::balanced_N1);  // rho = 0, conic positive
    CHECK(classify(6, 4).tag == VerdictTag::balanced_N1);   // conic negative

    const Verdict out = classify(12, 11);
    CHECK(out.tag == VerdictTag::out_of_hypothesis);
    CHECK(out.conic4 == conic_discriminant4(11, 8));

    const Verdict conj = classify(17, 7);
    CHECK(conj.tag == VerdictTag::conjectural_balanced);
    CHECK_FALSE(conj.conic4.has_value());

    CHECK(classify(8, 3).tag == VerdictTag::out_of_hypothesis);  // k < 4
}

TEST_CASE("verdict is sign-consistent with the decomposition") {
    for (std::int64_t k = 4; k <= 30; ++k)
        for (std::int64_t rho = 0; rho <= k - 4; ++rho) {
            const std::int64_t g = 2 * k - rho - 2;
            const QuadricDecomposition q = decompose_quadric_bundle(g, k);
            const bool unbalanced = classify(g, k).tag == VerdictTag::unbalanced_N1;
            CHECK(unbalanced == (q.l0 > 0 && q.l2 > 0));
        }
}

TEST_CASE("verdict tag names round-trip") {
    for (VerdictTag tag : {VerdictTag::unbalanced_N1, VerdictTag::balanced_N1,
                           VerdictTag::balanced_N1_boundary, VerdictTag::conjectural_balanced,
                           VerdictTag::out_of_hypothesis})
        CHECK(verdict_tag_from_string(to_string(tag)) == tag);
    CHECK_FALSE(verdict_tag_from_string("nonsense").has_value());
}

TEST_CASE("conjectured spread bounds") {
    CHECK(conjecture_spread_bound(2, 19, 11) == 3);
    CHECK(conjecture_spread_bound(3, 19, 11) == 4);
    CHECK(conjecture_spread_bound(4, 19, 11) == 5);
    CHECK(conjecture_spread_bound(2, 13, 11) == 1);  // g = k+2: balanced
    CHECK_THROWS_AS(conjecture_spread_bound(1, 19, 11), std::out_of_range);
    CHECK_THROWS_AS(conjecture_spread_bound(5, 19, 11), std::out_of_range);
    CHECK_THROWS_AS(conjecture_spread_bound(2, 10, 5), std::out_of_range);
}

TEST_CASE("full profile of the genus 19 example") {
    const ResolutionProfile p = full_profile(19, 11);
    CHECK(p.geometry.rho == 1);
    CHECK(p.scroll == SplittingType::from_runs({{1, 9}, {0, 1}}));
    REQUIRE(p.bundles.size() == 9);

    const BundleProfile& n1 = p.bundles[0];
    CHECK(n1.rank == 44);
    CHECK(n1.degree == 56);
    CHECK(n1.predicted == SplittingType::from_runs({{2, 13}, {1, 30}, {0, 1}}));
    CHECK(n1.provenance == Provenance::theorem);

    // the balanced guess for N_2; computed resolutions of actual curves have
    // {3^9, 2^192, 1^30} here, which is why the tag stays conjectural
    const BundleProfile& n2 = p.bundles[1];
    CHECK(n2.rank == 231);
    CHECK(n2.degree == 441);
    CHECK(n2.predicted == SplittingType::from_runs({{2, 210}, {1, 21}}));
    CHECK(n2.provenance == Provenance::conjecture);
    CHECK(SplittingType::from_runs({{3, 9}, {2, 192}, {1, 30}}).degree() == 441);
    CHECK(SplittingType::from_runs({{3, 9}, {2, 192}, {1, 30}}).rank() == 231);

    const BundleProfile& top = p.bundles[8];
    CHECK(top.index == 9);
    CHECK(top.rank == 1);
    CHECK(top.degree == 7);
    CHECK(top.predicted == SplittingType{7});
    CHECK(top.provenance == Provenance::theorem);
}

TEST_CASE("full profile edge cases") {
    // k = 3: the whole resolution is the single rank-1 top bundle
    const ResolutionProfile k3 = full_profile(7, 3);
    REQUIRE(k3.bundles.size() == 1);
    CHECK(k3.bundles[0].rank == 1);
    CHECK(k3.bundles[0].degree == 3);
    CHECK(k3.bundles[0].provenance == Provenance::theorem);

    // g = k+2 is balanced throughout
    const ResolutionProfile gk2 = full_profile(9, 7);
    REQUIRE(gk2.bundles.size() == 5);
    for (const BundleProfile& b : gk2.bundles) {
        CHECK(b.predicted.spread() <= 1);
        CHECK(b.predicted.rank() == b.rank);
        CHECK(b.predicted.degree() == b.degree);
    }

    // rho < 0: every prediction is conjectural, N_1 predicted balanced
    const ResolutionProfile conj = full_profile(17, 7);
    CHECK(conj.bundles[0].provenance == Provenance::conjecture);
    CHECK(conj.bundles[0].predicted == balanced_splitting(conj.bundles[0].degree,
                                                          conj.bundles[0].rank));

    // degenerate g = k+1: all degrees vanish
    const ResolutionProfile degen = full_profile(7, 6);
    for (const BundleProfile& b : degen.bundles) CHECK(b.degree == 0);

    CHECK_THROWS_AS(full_profile(6, 6), std::invalid_argument);  // g < k+1
    CHECK_THROWS_AS(full_profile(3, 3), std::invalid_argument);  // genus bound
}

TEST_CASE("profile invariants across the supported window") {
    for (std::int64_t k = 3; k <= 14; ++k)
        for (std::int64_t g = k + 1; g <= 3 * k; ++g) {
            if (g < 4) continue;
            const ResolutionProfile p = full_profile(g, k);
            REQUIRE(static_cast<std::int64_t>(p.bundles.size()) == k - 2);
            const BundleProfile& top = p.bundles.back();
            CHECK(top.rank == 1);
            CHECK(top.degree == g - k - 1);
            for (const BundleProfile& b : p.bundles) {
                CHECK(b.predicted.rank() == b.rank);
                CHECK(b.predicted.degree() == b.degree);
                if (p.geometry.hypothesis_ok && b.rank > 0) {
                    CHECK(b.predicted.min_twist() >= 0);
                    if (b.index == 1) CHECK(b.predicted.max_twist() <= 2);
                }
            }
        }
}
