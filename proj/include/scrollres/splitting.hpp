#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace scrollres {

// One maximal run of equal twists in a split bundle.
struct TwistRun {
    std::int64_t twist = 0;
    std::int64_t count = 0;
    bool operator==(const TwistRun&) const = default;
};

// A finite direct sum of line bundles on P^1, stored as a sorted multiset of
// twists. Runs are kept twist-descending with positive counts, so ranks in
// the billions stay cheap; the multiset itself is the value, and two sums
// compare equal iff their twists agree with multiplicity.
class SplittingType {
public:
    SplittingType() = default;
    SplittingType(std::initializer_list<std::int64_t> twists);

    static SplittingType from_twists(std::span<const std::int64_t> twists);
    // Normalizes: merges duplicate twists, drops empty runs, sorts descending.
    // Negative counts are rejected.
    static SplittingType from_runs(std::vector<TwistRun> runs);

    std::int64_t rank() const;    // number of summands
    std::int64_t degree() const;  // sum of twists
    std::int64_t spread() const;  // max - min twist, 0 for rank <= 1
    bool balanced() const { return spread() <= 1; }

    std::int64_t max_twist() const;  // rank >= 1 required
    std::int64_t min_twist() const;
    std::int64_t multiplicity(std::int64_t twist) const;

    // The same sum with every twist shifted by b (tensoring by O(b)).
    SplittingType twisted(std::int64_t b) const;

    const std::vector<TwistRun>& runs() const { return runs_; }

    // Explicit twist list, most useful in tests; refuses absurd expansions.
    std::vector<std::int64_t> twists() const;

    // "{2^13, 1^30, 0}"; "{}" for the zero bundle.
    std::string str() const;

    bool operator==(const SplittingType&) const = default;

private:
    std::vector<TwistRun> runs_;
};

// The unique non-increasing multiset of `rank` integers with the given sum and
// spread <= 1: (degree mod rank) copies of ceil(degree/rank) on top of floor
// copies. rank 0 demands degree 0.
SplittingType balanced_splitting(std::int64_t degree, std::int64_t rank);

}  // namespace scrollres
