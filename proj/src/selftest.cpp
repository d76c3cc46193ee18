#include "scrollres/selftest.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "scrollres/arith.hpp"
#include "scrollres/classifier.hpp"
#include "scrollres/cohomology.hpp"
#include "scrollres/errors.hpp"
#include "scrollres/sweep.hpp"

namespace scrollres {

bool SelfTestReport::all_passed() const {
    for (const SelfTestCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

using Failure = std::optional<std::string>;

std::string at(std::int64_t g, std::int64_t k) {
    return "(g,k)=(" + std::to_string(g) + "," + std::to_string(k) + ")";
}

Failure beta_formula_agreement() {
    for (std::int64_t k = 4; k <= 40; ++k)
        for (std::int64_t i = 0; i <= k - 2; ++i) {
            const std::int64_t a = syzygy_rank(i, k);
            const std::int64_t b = syzygy_rank_alt(i, k);
            if (a != b)
                return "variants disagree at i=" + std::to_string(i) +
                       ", k=" + std::to_string(k) + ": " + std::to_string(a) +
                       " vs " + std::to_string(b);
            if ((i == 0 || i == k - 2) && a != 1)
                return "boundary rank not 1 at i=" + std::to_string(i) +
                       ", k=" + std::to_string(k);
        }
    return {};
}

Failure duality_rank_symmetry() {
    for (std::int64_t k = 4; k <= 40; ++k)
        for (std::int64_t i = 0; i <= k - 2; ++i)
            if (syzygy_rank(i, k) != syzygy_rank(k - 2 - i, k))
                return "rank asymmetry at i=" + std::to_string(i) + ", k=" + std::to_string(k);
    return {};
}

Failure duality_degree_identity() {
    for (std::int64_t k = 4; k <= 40; ++k)
        for (std::int64_t g = k + 2; g <= 3 * k; ++g) {
            const std::int64_t f = g - k + 1;
            for (std::int64_t i = 1; i <= k - 3; ++i) {
                const std::int64_t beta = syzygy_rank(i, k);
                const std::int64_t deg = syzygy_degree(i, g, k);
                const auto [dual_rank, dual_deg] = duality_transform(i, g, k, beta, deg);
                if (dual_rank != syzygy_rank(k - 2 - i, k) ||
                    dual_deg != syzygy_degree(k - 2 - i, g, k))
                    return "degree identity fails at " + at(g, k) + ", i=" + std::to_string(i);
                if (dual_deg != (f - 2) * beta - deg)
                    return "transform disagrees with formula at " + at(g, k);
            }
        }
    return {};
}

Failure balanced_splitting_shape() {
    for (std::int64_t rank = 0; rank <= 25; ++rank)
        for (std::int64_t degree = 0; degree <= 120; ++degree) {
            if (rank == 0 && degree != 0) continue;
            const SplittingType s = balanced_splitting(degree, rank);
            if (s.spread() > 1 || s.rank() != rank || s.degree() != degree)
                return "bad splitting for degree=" + std::to_string(degree) +
                       ", rank=" + std::to_string(rank) + ": " + s.str();
        }
    try {
        balanced_splitting(3, 0);
        return std::string("rank 0 with degree 3 not rejected");
    } catch (const std::invalid_argument&) {
    }
    return {};
}

Failure scroll_splitting_shape() {
    for (std::int64_t k = 4; k <= 40; ++k)
        for (std::int64_t g = std::max<std::int64_t>(4, k - 1); g <= 3 * k; ++g) {
            const Geometry geo = derive_geometry(GonalityInput(g, k));
            const SplittingType s = scroll_splitting(geo);
            if (s.rank() != geo.scroll_dim || s.degree() != geo.scroll_deg)
                return "wrong rank/degree at " + at(g, k);
            if (geo.rho >= 0) {
                if (s.multiplicity(1) != k - 1 - geo.rho || s.multiplicity(0) != geo.rho)
                    return "rho >= 0 shape wrong at " + at(g, k) + ": " + s.str();
            }
            if (!s.balanced()) return "unbalanced scroll at " + at(g, k);
        }
    return {};
}

Failure hilbert_quadric_identity() {
    // h^0(O(2)) - h_{C'}(2) equals the raw count by construction
    for (std::int64_t k = 4; k <= 30; ++k)
        for (std::int64_t g = k + 2; g <= 3 * k; ++g) {
            const std::int64_t h2 = residual_hilbert_value(2, g, k);
            if (binomial(g - k + 2, 2) - h2 != quadric_generator_count_raw(g, k))
                return "identity fails at " + at(g, k);
        }
    return {};
}

Failure p1_euler_relation() {
    // h^0 - h^1 = degree + rank, over all twist triples in a small window
    for (std::int64_t t1 = -6; t1 <= 6; ++t1)
        for (std::int64_t t2 = t1; t2 <= 6; ++t2)
            for (std::int64_t t3 = t2; t3 <= 6; ++t3) {
                const SplittingType b{t1, t2, t3};
                if (cohomology_p1(b, 0) - cohomology_p1(b, 1) != b.degree() + b.rank())
                    return "Euler relation fails for " + b.str();
            }
    return {};
}

Failure sym_power_rank() {
    for (std::int64_t d = 1; d <= 5; ++d)
        for (std::int64_t a = 0; a <= 5; ++a) {
            std::vector<std::int64_t> twists;
            for (std::int64_t j = 0; j < d; ++j) twists.push_back((j % 3) - 1);
            const SplittingType e = SplittingType::from_twists(twists);
            const SplittingType s = sym_power(e, a);
            if (s.rank() != binomial(d - 1 + a, a))
                return "rank mismatch at d=" + std::to_string(d) + ", a=" + std::to_string(a);
            if (a == 1 && !(s == e)) return "S_1(E) != E at d=" + std::to_string(d);
            if (a == 0 && !(s == SplittingType{0})) return "S_0(E) != O";
        }
    return {};
}

Failure pe_h0_canonical() {
    // h^0(P(E), O(H)) counts the canonical sections: it must equal g
    for (std::int64_t k = 4; k <= 25; ++k)
        for (std::int64_t g = std::max<std::int64_t>(4, k - 1); g <= 3 * k; ++g) {
            const Geometry geo = derive_geometry(GonalityInput(g, k));
            if (cohomology_pe({1, 0}, scroll_splitting(geo), 0) != g)
                return "h0(O(H)) != g at " + at(g, k);
        }
    return {};
}

Failure oracle_equivalence() {
    for (std::int64_t k = 4; k <= 15; ++k)
        for (std::int64_t g = k + 1; g <= 3 * k; ++g) {
            const std::vector<std::int64_t> recovered = recover_degrees(g, k);
            for (std::int64_t i = 1; i <= k - 3; ++i)
                if (recovered[static_cast<std::size_t>(i - 1)] != syzygy_degree(i, g, k))
                    return "oracle disagrees at " + at(g, k) + ", i=" + std::to_string(i);
        }
    return {};
}

Failure euler_defect_zero() {
    for (std::int64_t k = 4; k <= 12; ++k)
        for (std::int64_t g = k + 1; g <= 3 * k; ++g) {
            std::vector<std::int64_t> degrees;
            for (std::int64_t i = 1; i <= k - 3; ++i) degrees.push_back(syzygy_degree(i, g, k));
            for (std::int64_t nu = 2; nu <= k - 2; ++nu)
                if (euler_identity_defect(g, k, nu, degrees) != 0)
                    return "nonzero defect at " + at(g, k) + ", nu=" + std::to_string(nu);
        }
    return {};
}

Failure scaling_identity() {
    for (std::int64_t k = 4; k <= 60; ++k)
        for (std::int64_t rho = 0; rho <= k - 4; ++rho) {
            const std::int64_t g = 2 * k - rho - 2;
            if (conic_discriminant4(k, rho) != 8 * quadric_generator_count_raw(g, k))
                return "conic4 != 8*raw at (k,rho)=(" + std::to_string(k) + "," +
                       std::to_string(rho) + ")";
            if (classify(g, k).tag == VerdictTag::unbalanced_N1) {
                const QuadricDecomposition q = decompose_quadric_bundle(g, k);
                if (q.l0 != rho * (rho + 1) / 2)
                    return "l0 != rho(rho+1)/2 at (k,rho)=(" + std::to_string(k) + "," +
                           std::to_string(rho) + ")";
            }
        }
    return {};
}

Failure rho0_balanced() {
    // at rho = 0 the predicted N_1 never mixes twist 0 with twist 2
    for (std::int64_t k = 4; k <= 60; ++k) {
        const std::int64_t g = 2 * k - 2;
        const QuadricDecomposition q = decompose_quadric_bundle(g, k);
        if (q.l0 > 0 && q.l2 > 0)
            return "spread 2 at rho=0, k=" + std::to_string(k);
        if (classify(g, k).tag == VerdictTag::unbalanced_N1)
            return "unbalanced verdict at rho=0, k=" + std::to_string(k);
    }
    return {};
}

Failure decomposition_feasibility() {
    for (std::int64_t k = 4; k <= 60; ++k)
        for (std::int64_t rho = 0; rho <= k - 4; ++rho) {
            const std::int64_t g = 2 * k - rho - 2;
            try {
                const QuadricDecomposition q = decompose_quadric_bundle(g, k);
                if (q.l0 + q.l1 + q.l2 != syzygy_rank(1, k) ||
                    q.l1 + 2 * q.l2 != syzygy_degree(1, g, k))
                    return "sums broken at (k,rho)=(" + std::to_string(k) + "," +
                           std::to_string(rho) + ")";
            } catch (const ModelViolation& v) {
                return std::string(v.what());
            }
        }
    return {};
}

Failure figure1_lattice() {
    const std::vector<RegionRecord> records = sweep_region(4, 40, 0, 40);
    for (const RegionRecord& r : records) {
        const bool predicate = r.rho >= 1 && r.rho < r.k - 3 && r.conic4 > 0;
        if (predicate != (r.verdict == VerdictTag::unbalanced_N1))
            return "unbalanced set mismatch at (k,rho)=(" + std::to_string(r.k) + "," +
                   std::to_string(r.rho) + ")";
        if (r.rho >= 0 && r.rho < r.k - 3 && r.conic4 == 0 &&
            r.verdict != VerdictTag::balanced_N1_boundary)
            return "boundary tag missing at (k,rho)=(" + std::to_string(r.k) + "," +
                   std::to_string(r.rho) + ")";
    }
    return {};
}

Failure twist_range_conformance() {
    for (std::int64_t k = 4; k <= 40; ++k)
        for (std::int64_t rho = 0; rho <= k - 4; ++rho) {
            const std::int64_t g = 2 * k - rho - 2;
            const SplittingType n1 = full_profile(g, k).bundles.front().predicted;
            if (n1.rank() > 0 && (n1.min_twist() < 0 || n1.max_twist() > 2))
                return "N_1 twist outside {0,1,2} at " + at(g, k) + ": " + n1.str();
        }
    return {};
}

Failure csv_roundtrip() {
    const std::vector<RegionRecord> records = sweep_region(4, 20, -2, 8);
    const std::vector<RegionRecord> reparsed =
        parse_table_csv(emit_table(records, TableFormat::csv));
    if (!(records == reparsed)) return std::string("round-trip changed the records");
    return {};
}

Failure checked_arithmetic() {
    if (binomial_wide(120, 60) <= 0) return std::string("C(120,60) not positive");
    try {
        binomial_wide(200, 100);
        return std::string("C(200,100) did not overflow");
    } catch (const std::overflow_error&) {
    }
    try {
        narrow(wmul(Wide(1) << 70, 1000));
        return std::string("narrow did not reject a wide value");
    } catch (const std::overflow_error&) {
    }
    try {
        exact_div(7, 2);
        return std::string("inexact division not rejected");
    } catch (const std::logic_error&) {
    }
    return {};
}

}  // namespace

SelfTestReport run_selftest(const SelfTestOptions& options) {
    SelfTestReport report;
    const auto run = [&](const char* name, const std::function<Failure()>& suite) {
        SelfTestCheck check;
        check.name = name;
        try {
            Failure failure = suite();
            check.pass = !failure.has_value();
            if (failure) check.detail = *failure;
        } catch (const std::exception& e) {
            check.pass = false;
            check.detail = e.what();
        }
        report.checks.push_back(std::move(check));
    };

    const auto golden_g19_k11 = [&]() -> Failure {
        const std::int64_t g = 19, k = 11;
        const std::int64_t beta1 = syzygy_rank(1, k);
        const std::int64_t degN1 = syzygy_degree(1, g, k);
        const std::int64_t l2 = options.paper_literal_l2
                                    ? conic_discriminant4(k, 2 * k - g - 2) / 4
                                    : quadric_generator_count(g, k);
        const QuadricDecomposition q = decompose_quadric_parts(g, k, beta1, degN1, l2);
        if (beta1 != 44 || degN1 != 56) return "wrong (beta1, degN1) at (19,11)";
        if (!(q == QuadricDecomposition{1, 30, 13}))
            return "quadric decomposition (" + std::to_string(q.l0) + "," +
                   std::to_string(q.l1) + "," + std::to_string(q.l2) + ") != (1,30,13)";
        if (classify(g, k).tag != VerdictTag::unbalanced_N1) return std::string("wrong verdict");
        if (syzygy_rank(2, k) != 231 || syzygy_degree(2, g, k) != 441)
            return std::string("wrong (beta2, degN2)");
        if (!(scroll_splitting(derive_geometry(GonalityInput(g, k))) ==
              SplittingType::from_runs({{1, 9}, {0, 1}})))
            return std::string("wrong scroll splitting");
        return {};
    };

    run("beta-formula-agreement", beta_formula_agreement);
    run("duality-rank-symmetry", duality_rank_symmetry);
    run("duality-degree-identity", duality_degree_identity);
    run("balanced-splitting-shape", balanced_splitting_shape);
    run("scroll-splitting-shape", scroll_splitting_shape);
    run("hilbert-quadric-identity", hilbert_quadric_identity);
    run("p1-euler-relation", p1_euler_relation);
    run("sym-power-rank", sym_power_rank);
    run("pe-h0-canonical", pe_h0_canonical);
    run("oracle-equivalence", oracle_equivalence);
    run("euler-defect-zero", euler_defect_zero);
    run("scaling-identity", scaling_identity);
    run("rho0-balanced", rho0_balanced);
    run("decomposition-feasibility", decomposition_feasibility);
    run("figure1-lattice", figure1_lattice);
    run("twist-range-conformance", twist_range_conformance);
    run("csv-roundtrip", csv_roundtrip);
    run("golden-g19-k11", golden_g19_k11);
    run("checked-arithmetic", checked_arithmetic);
    return report;
}

}  // namespace scrollres
