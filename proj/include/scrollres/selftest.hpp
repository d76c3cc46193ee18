#pragma once

#include <string>
#include <vector>

namespace scrollres {

struct SelfTestOptions {
    // Debug-only: compute the golden l2 from the conic value instead of the
    // quadric count. The two differ by a factor of 2, so the golden check
    // must fail; exists to prove the suite can detect that mistake.
    bool paper_literal_l2 = false;
};

struct SelfTestCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // first offending case on failure
};

struct SelfTestReport {
    std::vector<SelfTestCheck> checks;
    bool all_passed() const;
};

// Runs every module invariant suite at its default grid size. Deterministic;
// finishes in well under a minute.
SelfTestReport run_selftest(const SelfTestOptions& options = {});

}  // namespace scrollres
