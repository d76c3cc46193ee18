#include "scrollres/classifier.hpp"

#include <stdexcept>
#include <string>

#include "scrollres/arith.hpp"
#include "scrollres/errors.hpp"

namespace scrollres {

SplittingType QuadricDecomposition::to_splitting() const {
    return SplittingType::from_runs({{2, l2}, {1, l1}, {0, l0}});
}

const char* to_string(VerdictTag tag) {
    switch (tag) {
        case VerdictTag::unbalanced_N1: return "unbalanced_N1";
        case VerdictTag::balanced_N1: return "balanced_N1";
        case VerdictTag::balanced_N1_boundary: return "balanced_N1_boundary";
        case VerdictTag::conjectural_balanced: return "conjectural_balanced";
        case VerdictTag::out_of_hypothesis: return "out_of_hypothesis";
    }
    throw std::logic_error("unreachable verdict tag");
}

std::optional<VerdictTag> verdict_tag_from_string(std::string_view name) {
    for (VerdictTag tag : {VerdictTag::unbalanced_N1, VerdictTag::balanced_N1,
                           VerdictTag::balanced_N1_boundary, VerdictTag::conjectural_balanced,
                           VerdictTag::out_of_hypothesis})
        if (name == to_string(tag)) return tag;
    return std::nullopt;
}

std::int64_t conic_discriminant4(std::int64_t k, std::int64_t rho) {
    const Wide t = wsub(wmul(2, wsub(k, rho)), 7);
    return narrow(wadd(wsub(wmul(t, t), wmul(8, k)), 23));
}

std::int64_t quadric_generator_count_raw(std::int64_t g, std::int64_t k) {
    if (g <= k + 1)
        throw std::invalid_argument("quadric_generator_count: requires g > k+1");
    Wide raw = binomial_wide(g - k + 2, 2);
    raw = wadd(wsub(raw, wmul(3, g)), wadd(wmul(2, k), 3));
    return narrow(raw);
}

std::int64_t quadric_generator_count(std::int64_t g, std::int64_t k) {
    const std::int64_t raw = quadric_generator_count_raw(g, k);
    return raw > 0 ? raw : 0;
}

QuadricDecomposition decompose_quadric_parts(std::int64_t g, std::int64_t k,
                                             std::int64_t beta1, std::int64_t degN1,
                                             std::int64_t l2) {
    const std::int64_t l1 = narrow(wsub(degN1, wmul(2, l2)));
    const std::int64_t l0 = narrow(wsub(wsub(beta1, l1), l2));
    if (l0 < 0 || l1 < 0 || l2 < 0) throw ModelViolation(g, k, l0, l1, l2);
    return {l0, l1, l2};
}

QuadricDecomposition decompose_quadric_bundle(std::int64_t g, std::int64_t k) {
    if (k < 4) throw std::invalid_argument("decompose_quadric_bundle: requires k >= 4");
    if (g <= k + 1)
        throw std::invalid_argument("decompose_quadric_bundle: requires g > k+1");
    const std::int64_t rho = 2 * k - g - 2;
    if (rho < 0) throw std::invalid_argument("decompose_quadric_bundle: requires rho >= 0");

    const QuadricDecomposition q = decompose_quadric_parts(
        g, k, syzygy_rank(1, k), syzygy_degree(1, g, k), quadric_generator_count(g, k));

    if (conic_discriminant4(k, rho) > 0 && q.l0 != narrow(binomial_wide(rho + 1, 2)))
        throw std::logic_error("decompose_quadric_bundle: l0 != C(rho+1, 2) at (g,k)=(" +
                               std::to_string(g) + "," + std::to_string(k) + ")");
    return q;
}

Verdict classify(std::int64_t g, std::int64_t k) {
    const std::int64_t rho = 2 * k - g - 2;

    if (k < 4 || g <= k + 1)
        return {VerdictTag::out_of_hypothesis, "requires k >= 4 and g > k+1",
                rho >= 0 ? std::optional(conic_discriminant4(k, rho)) : std::nullopt};

    if (rho < 0)
        return {VerdictTag::conjectural_balanced,
                "rho < 0: balancedness of N_1 is conjectural, not proved", std::nullopt};

    const std::int64_t conic4 = conic_discriminant4(k, rho);
    if (rho > 0 && conic4 > 0)
        return {VerdictTag::unbalanced_N1,
                "rho > 0 and positive conic discriminant: quadric generators force a "
                "twist-0 summand next to twist-2 summands",
                conic4};
    if (conic4 == 0)
        return {VerdictTag::balanced_N1_boundary,
                "conic discriminant is zero: boundary case, balanced by the strict "
                "inequality",
                conic4};
    if (rho == 0 && conic4 > 0)
        return {VerdictTag::balanced_N1, "rho = 0: no twist-0 summand appears (l0 = 0)",
                conic4};
    return {VerdictTag::balanced_N1, "negative conic discriminant: no quadric generators",
            conic4};
}

std::int64_t conjecture_spread_bound(std::int64_t i, std::int64_t g, std::int64_t k) {
    const std::int64_t top = (k - 3 + 1) / 2;  // ceil((k-3)/2)
    if (k < 3 || i < 2 || i > top)
        throw std::out_of_range("conjecture_spread_bound: index " + std::to_string(i) +
                                " outside [2, " + std::to_string(top) + "]");
    const std::int64_t a = g - k - 1;
    const std::int64_t b = i + 1;
    return a < b ? a : b;
}

ResolutionProfile full_profile(std::int64_t g, std::int64_t k) {
    const GonalityInput input(g, k);
    if (g < k + 1) throw std::invalid_argument("full_profile: requires g >= k+1");

    ResolutionProfile profile;
    profile.geometry = derive_geometry(input);
    profile.scroll = scroll_splitting(profile.geometry);

    const std::int64_t f = profile.geometry.scroll_deg;
    const bool theorem_regime = profile.geometry.hypothesis_ok && k >= 4;

    for (std::int64_t i = 1; i <= k - 2; ++i) {
        BundleProfile bundle;
        bundle.index = i;
        bundle.rank = syzygy_rank(i, k);
        bundle.degree = syzygy_degree(i, g, k);
        if (i == k - 2) {
            // forced by self-duality with the free cover
            bundle.predicted = SplittingType{f - 2};
            bundle.provenance = Provenance::theorem;
        } else if (i == 1 && theorem_regime) {
            bundle.predicted = decompose_quadric_bundle(g, k).to_splitting();
            bundle.provenance = Provenance::theorem;
        } else {
            bundle.predicted = balanced_splitting(bundle.degree, bundle.rank);
            bundle.provenance = Provenance::conjecture;
        }
        profile.bundles.push_back(std::move(bundle));
    }
    return profile;
}

}  // namespace scrollres
