#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "scrollres/invariants.hpp"

// Classification of the bundle of quadrics Q = pi* N_1 (-2H): its twist
// multiplicities (l0, l1, l2), the balanced/unbalanced verdict, and the
// conjectural spread bounds for the higher bundles.

namespace scrollres {

// Multiplicities of the twists 0, 1, 2 in N_1. Always satisfies
// l0 + l1 + l2 = beta_1 and l1 + 2 l2 = deg N_1.
struct QuadricDecomposition {
    std::int64_t l0 = 0;
    std::int64_t l1 = 0;
    std::int64_t l2 = 0;

    SplittingType to_splitting() const;
    bool operator==(const QuadricDecomposition&) const = default;
};

enum class VerdictTag {
    unbalanced_N1,
    balanced_N1,
    balanced_N1_boundary,
    conjectural_balanced,
    out_of_hypothesis,
};

const char* to_string(VerdictTag tag);
std::optional<VerdictTag> verdict_tag_from_string(std::string_view name);

struct Verdict {
    VerdictTag tag = VerdictTag::out_of_hypothesis;
    std::string reason;
    // integer value of the scaled conic, present when rho >= 0
    std::optional<std::int64_t> conic4;

    bool operator==(const Verdict&) const = default;
};

// (2k - 2rho - 7)^2 - 8k + 23: four times the rational conic expression
// (k - rho - 7/2)^2 - 2k + 23/4, so the sign is faithful and everything
// stays integral.
std::int64_t conic_discriminant4(std::int64_t k, std::int64_t rho);

// C(g-k+2, 2) - 3g + 2k + 3: the signed count h^0(O(2)) - h_{C'}(2) of
// quadrics through the residual curve. Requires g > k+1 (birationality).
std::int64_t quadric_generator_count_raw(std::int64_t g, std::int64_t k);

// max(raw, 0): the map on quadrics has maximal rank, so a negative difference
// means no quadric generators at all.
std::int64_t quadric_generator_count(std::int64_t g, std::int64_t k);

// Internal arithmetic of the decomposition, exposed for direct testing:
// l1 = degN1 - 2 l2, l0 = beta1 - l1 - l2; any negative multiplicity raises
// ModelViolation carrying the offending values.
QuadricDecomposition decompose_quadric_parts(std::int64_t g, std::int64_t k,
                                             std::int64_t beta1, std::int64_t degN1,
                                             std::int64_t l2);

// Full decomposition for g > k+1, k >= 4, rho >= 0. Whenever the scaled conic
// is positive the identity l0 = C(rho+1, 2) is re-asserted.
QuadricDecomposition decompose_quadric_bundle(std::int64_t g, std::int64_t k);

// The verdict for any (g, k); all gating is internal. N_1 is unbalanced
// exactly when rho > 0 and the scaled conic is positive; rho < 0 inputs are
// reported as conjecturally balanced, never as proved.
Verdict classify(std::int64_t g, std::int64_t k);

// Conjectured spread bound min(g-k-1, i+1) for 2 <= i <= ceil((k-3)/2).
std::int64_t conjecture_spread_bound(std::int64_t i, std::int64_t g, std::int64_t k);

// Assembles geometry, scroll splitting, and all k-2 bundle profiles with
// predicted splittings and provenance tags. Requires k >= 3 and g >= k+1.
ResolutionProfile full_profile(std::int64_t g, std::int64_t k);

}  // namespace scrollres
