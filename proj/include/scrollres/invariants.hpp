#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "scrollres/geometry.hpp"
#include "scrollres/splitting.hpp"

// Closed-form invariants of the relative canonical resolution
//
//   0 -> pi*N_{k-2}(-k) -> ... -> pi*N_1(-2) -> O -> O_C -> 0
//
// of a curve with a degree-k pencil on its (k-1)-dimensional scroll. The
// syzygy bundles N_i live on P^1; their ranks and degrees are pure integer
// combinatorics in (g, k).

namespace scrollres {

// rank N_i:
//   beta_i = i(k-2-i)/(k-1) * C(k, i+1)           for 1 <= i <= k-3,
//   beta_0 = beta_{k-2} = 1                       (resolution ends, self-duality).
// The displayed formula vanishes at both ends; the boundary values are forced.
std::int64_t syzygy_rank(std::int64_t i, std::int64_t k);

// The equivalent product form beta_i = k/(i+1) * (k-2-i) * C(k-2, i-1),
// exposed separately so the two can be cross-checked; valid for 1 <= i <= k-3
// with the same boundary convention.
std::int64_t syzygy_rank_alt(std::int64_t i, std::int64_t k);

// deg N_i = (g-k-1)(k-2-i) C(k-2, i-1) for 1 <= i <= k-3; the top bundle
// N_{k-2} has degree f - 2 = g - k - 1 by self-duality with N_0.
std::int64_t syzygy_degree(std::int64_t i, std::int64_t g, std::int64_t k);

// Rank and degree forced on N_{k-2-i} by self-duality:
// (beta_i, (f-2) * beta_i - deg_i).
std::pair<std::int64_t, std::int64_t> duality_transform(std::int64_t i, std::int64_t g,
                                                        std::int64_t k, std::int64_t beta_i,
                                                        std::int64_t deg_i);

// Hilbert polynomial of the residual-system image curve: (2g-k-2) n + 1 - g.
std::int64_t residual_hilbert_value(std::int64_t n, std::int64_t g, std::int64_t k);

// Splitting type of the scroll bundle: the balanced splitting of f over d.
// For rho >= 0 this is k-1-rho twists 1 and rho twists 0.
SplittingType scroll_splitting(const Geometry& geometry);

enum class Provenance { theorem, conjecture };

const char* to_string(Provenance p);

// Per-index data of one syzygy bundle together with a predicted splitting.
// Predictions for i >= 2 are conjectural and routinely differ from computed
// resolutions of actual curves.
struct BundleProfile {
    std::int64_t index = 0;  // 1 <= index <= k-2
    std::int64_t rank = 0;
    std::int64_t degree = 0;
    SplittingType predicted;
    Provenance provenance = Provenance::conjecture;

    bool operator==(const BundleProfile&) const = default;
};

struct ResolutionProfile {
    Geometry geometry;
    SplittingType scroll;
    std::vector<BundleProfile> bundles;  // exactly k-2 entries, indices 1..k-2

    bool operator==(const ResolutionProfile&) const = default;
};

}  // namespace scrollres
